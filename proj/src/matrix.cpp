#include "matrix.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fpt {

DenseMat DenseMat::identity(int n) {
  DenseMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DenseMat DenseMat::mul(const DenseMat& rhs) const {
  DenseMat out(rows, rhs.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

std::vector<Int> DenseMat::apply(const std::vector<Int>& v) const {
  std::vector<Int> out(rows, Int(0));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

bool DenseMat::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (at(i, j) != Int(i == j ? 1 : 0)) return false;
  return true;
}

namespace {

// Quotient minimizing |a - q*p|.
Int round_div(const Int& a, const Int& p) {
  Int q = a / p;
  Int r = a - q * p;
  if (2 * int_abs(r) > int_abs(p)) q += (r < 0) == (p < 0) ? 1 : -1;
  return q;
}

struct Transforms {
  DenseMat U, Uinv, V, Vinv;

  void row_swap(DenseMat& A, int i, int j) {
    for (int c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
    for (int c = 0; c < Uinv.cols; ++c) std::swap(Uinv.at(i, c), Uinv.at(j, c));
    for (int r = 0; r < U.rows; ++r) std::swap(U.at(r, i), U.at(r, j));
  }
  void col_swap(DenseMat& A, int i, int j) {
    for (int r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
    for (int r = 0; r < Vinv.rows; ++r) std::swap(Vinv.at(r, i), Vinv.at(r, j));
    for (int c = 0; c < V.cols; ++c) std::swap(V.at(i, c), V.at(j, c));
  }
  // row i += t * row j
  void row_addmul(DenseMat& A, int i, int j, const Int& t) {
    for (int c = 0; c < A.cols; ++c) A.at(i, c) += t * A.at(j, c);
    for (int c = 0; c < Uinv.cols; ++c) Uinv.at(i, c) += t * Uinv.at(j, c);
    for (int r = 0; r < U.rows; ++r) U.at(r, j) -= t * U.at(r, i);
  }
  // col i += t * col j
  void col_addmul(DenseMat& A, int i, int j, const Int& t) {
    for (int r = 0; r < A.rows; ++r) A.at(r, i) += t * A.at(r, j);
    for (int r = 0; r < Vinv.rows; ++r) Vinv.at(r, i) += t * Vinv.at(r, j);
    for (int c = 0; c < V.cols; ++c) V.at(j, c) -= t * V.at(i, c);
  }
  void row_negate(DenseMat& A, int i) {
    for (int c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
    for (int c = 0; c < Uinv.cols; ++c) Uinv.at(i, c) = -Uinv.at(i, c);
    for (int r = 0; r < U.rows; ++r) U.at(r, i) = -U.at(r, i);
  }
};

}  // namespace

SnfResult smith_normal_form(DenseMat A) {
  const int rows = A.rows, cols = A.cols, n = std::min(rows, cols);
  Transforms T{DenseMat::identity(rows), DenseMat::identity(rows),
               DenseMat::identity(cols), DenseMat::identity(cols)};

  for (int t = 0; t < n; ++t) {
    // Pick the nonzero entry of smallest magnitude in the trailing block.
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        if (A.at(i, j) == 0) continue;
        if (pr < 0 || int_abs(A.at(i, j)) < int_abs(A.at(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    if (pr != t) T.row_swap(A, pr, t);
    if (pc != t) T.col_swap(A, pc, t);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (int i = t + 1; i < rows; ++i) {
        if (A.at(i, t) == 0) continue;
        Int q = round_div(A.at(i, t), A.at(t, t));
        if (q != 0) T.row_addmul(A, i, t, -q);
        if (A.at(i, t) != 0) {  // remainder became the smaller pivot
          T.row_swap(A, i, t);
          dirty = true;
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        if (A.at(t, j) == 0) continue;
        Int q = round_div(A.at(t, j), A.at(t, t));
        if (q != 0) T.col_addmul(A, j, t, -q);
        if (A.at(t, j) != 0) {
          T.col_swap(A, j, t);
          dirty = true;
        }
      }
      if (!dirty) {
        // Pivot must divide the rest of the block for the divisibility chain.
        for (int i = t + 1; i < rows && !dirty; ++i)
          for (int j = t + 1; j < cols && !dirty; ++j)
            if (A.at(i, j) % A.at(t, t) != 0) {
              T.row_addmul(A, t, i, Int(1));
              dirty = true;
            }
      }
    }
    if (A.at(t, t) < 0) T.row_negate(A, t);
  }

  SnfResult out;
  out.rows = rows;
  out.cols = cols;
  out.U = std::move(T.U);
  out.Uinv = std::move(T.Uinv);
  out.V = std::move(T.V);
  out.Vinv = std::move(T.Vinv);
  out.diag.resize(n);
  for (int t = 0; t < n; ++t) {
    out.diag[t] = A.at(t, t);
    if (out.diag[t] != 0) out.rank = t + 1;
  }
  return out;
}

std::vector<std::vector<Int>> kernel_basis(const SnfResult& S) {
  std::vector<std::vector<Int>> basis;
  for (int j = S.rank; j < S.cols; ++j) {
    std::vector<Int> v(S.cols);
    for (int i = 0; i < S.cols; ++i) v[i] = S.Vinv.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Int>> solve_integer(const SnfResult& S,
                                              const std::vector<Int>& b) {
  std::vector<Int> y = S.Uinv.apply(b);
  std::vector<Int> x(S.cols, Int(0));
  for (int i = 0; i < S.rows; ++i) {
    if (i < static_cast<int>(S.diag.size()) && S.diag[i] != 0) {
      if (y[i] % S.diag[i] != 0) return std::nullopt;
      x[i] = y[i] / S.diag[i];
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return S.Vinv.apply(x);
}

namespace {

struct SparseElim {
  int rows, cols;
  std::vector<std::map<int, Int>> row;
  std::vector<std::set<int>> colrows;

  explicit SparseElim(const SparseTriplets& A)
      : rows(A.rows), cols(A.cols), row(A.rows), colrows(A.cols) {
    for (const auto& [r, c, v] : A.entries) {
      if (v == 0) continue;
      auto [it, fresh] = row[r].emplace(c, v);
      if (!fresh) {
        it->second += v;
        if (it->second == 0) {
          row[r].erase(it);
          continue;
        }
      }
    }
    for (int r = 0; r < rows; ++r)
      for (const auto& [c, v] : row[r]) colrows[c].insert(r);
  }

  void set(int r, int c, Int v) {
    if (v == 0) {
      row[r].erase(c);
      colrows[c].erase(r);
    } else {
      row[r][c] = std::move(v);
      colrows[c].insert(r);
    }
  }
  Int get(int r, int c) const {
    auto it = row[r].find(c);
    return it == row[r].end() ? Int(0) : it->second;
  }
  // row i += t * row j
  void row_addmul(int i, int j, const Int& t) {
    for (const auto& [c, v] : row[j]) set(i, c, get(i, c) + t * v);
  }
  // col i += t * col j
  void col_addmul(int i, int j, const Int& t) {
    auto rows_j = colrows[j];  // copy; set() mutates
    for (int r : rows_j) set(r, i, get(r, i) + t * get(r, j));
  }
};

}  // namespace

std::vector<Int> invariant_factors(const SparseTriplets& A) {
  SparseElim M(A);
  std::vector<char> row_done(M.rows, 0), col_done(M.cols, 0);
  std::vector<Int> pivots;

  for (;;) {
    int pr = -1, pc = -1;
    Int pval;
    long long pcost = 0;
    for (int r = 0; r < M.rows; ++r) {
      if (row_done[r]) continue;
      for (const auto& [c, v] : M.row[r]) {
        if (col_done[c]) continue;
        Int av = int_abs(v);
        long long cost = static_cast<long long>(M.row[r].size() - 1) *
                         static_cast<long long>(M.colrows[c].size() - 1);
        if (pr < 0 || av < pval || (av == pval && cost < pcost)) {
          pr = r;
          pc = c;
          pval = av;
          pcost = cost;
        }
      }
    }
    if (pr < 0) break;

    // Clear the pivot column, then the pivot row; a nonzero remainder
    // becomes the new (smaller) pivot and we start over.
    for (bool dirty = true; dirty;) {
      dirty = false;
      auto incident = M.colrows[pc];
      for (int r : incident) {
        if (r == pr || row_done[r]) continue;
        Int p = M.get(pr, pc);
        Int q = round_div(M.get(r, pc), p);
        if (q != 0) M.row_addmul(r, pr, -q);
        if (M.get(r, pc) != 0) {
          pr = r;
          dirty = true;
          break;
        }
      }
      if (dirty) continue;
      auto cs = M.row[pr];
      for (const auto& [c, v] : cs) {
        if (c == pc || col_done[c]) continue;
        Int p = M.get(pr, pc);
        Int q = round_div(v, p);
        if (q != 0) M.col_addmul(c, pc, -q);
        if (M.get(pr, c) != 0) {
          pc = c;
          dirty = true;
          break;
        }
      }
    }
    pivots.push_back(int_abs(M.get(pr, pc)));
    M.set(pr, pc, Int(0));
    row_done[pr] = 1;
    col_done[pc] = 1;
  }

  // Sort and repair divisibility: diag(a, b) ~ diag(gcd, lcm).
  std::sort(pivots.begin(), pivots.end());
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (std::size_t i = 0; i + 1 < pivots.size(); ++i)
      for (std::size_t j = i + 1; j < pivots.size(); ++j)
        if (pivots[j] % pivots[i] != 0) {
          Int g = boost::multiprecision::gcd(pivots[i], pivots[j]);
          Int l = pivots[i] / g * pivots[j];
          pivots[i] = g;
          pivots[j] = l;
          dirty = true;
        }
    if (dirty) std::sort(pivots.begin(), pivots.end());
  }
  return pivots;
}

int integer_rank(const SparseTriplets& A) {
  return static_cast<int>(invariant_factors(A).size());
}

std::optional<std::vector<Rat>> solve_rational(RatMat A, std::vector<Rat> b) {
  const int rows = A.rows, cols = A.cols;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (A.at(i, c) != Rat(0)) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = 0; j < cols; ++j) std::swap(A.at(pr, j), A.at(r, j));
      std::swap(b[pr], b[r]);
    }
    Rat inv = Rat(1) / A.at(r, c);
    for (int j = 0; j < cols; ++j) A.at(r, j) *= inv;
    b[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A.at(i, c) == Rat(0)) continue;
      Rat t = A.at(i, c);
      for (int j = 0; j < cols; ++j) A.at(i, j) -= t * A.at(r, j);
      b[i] -= t * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (b[i] != Rat(0)) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

int rank_rational(RatMat A) {
  const int rows = A.rows, cols = A.cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (A.at(i, c) != Rat(0)) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    for (int j = 0; j < cols; ++j) std::swap(A.at(pr, j), A.at(r, j));
    for (int i = r + 1; i < rows; ++i) {
      if (A.at(i, c) == Rat(0)) continue;
      Rat t = A.at(i, c) / A.at(r, c);
      for (int j = 0; j < cols; ++j) A.at(i, j) -= t * A.at(r, j);
    }
    ++r;
  }
  return r;
}

Rat determinant(RatMat A) {
  if (A.rows != A.cols) throw input_error("determinant of non-square matrix");
  const int n = A.rows;
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int i = c; i < n; ++i)
      if (A.at(i, c) != Rat(0)) {
        pr = i;
        break;
      }
    if (pr < 0) return Rat(0);
    if (pr != c) {
      for (int j = 0; j < n; ++j) std::swap(A.at(pr, j), A.at(c, j));
      det = -det;
    }
    det *= A.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (A.at(i, c) == Rat(0)) continue;
      Rat t = A.at(i, c) / A.at(c, c);
      for (int j = c; j < n; ++j) A.at(i, j) -= t * A.at(c, j);
    }
  }
  return det;
}

}  // namespace fpt
