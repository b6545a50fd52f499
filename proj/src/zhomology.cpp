#include "zhomology.hpp"

#include <algorithm>
#include <functional>

namespace fpt {

Int Chain::norm() const {
  Int n = 0;
  for (const auto& [i, c] : coef) n += int_abs(c);
  return n;
}

Chain& Chain::add(int idx, const Int& c) {
  if (c == 0) return *this;
  auto [it, fresh] = coef.emplace(idx, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coef.erase(it);
  }
  return *this;
}

Chain& Chain::axpy(const Int& t, const Chain& other) {
  for (const auto& [i, c] : other.coef) add(i, t * c);
  return *this;
}

Chain Chain::negated() const {
  Chain out;
  out.dim = dim;
  for (const auto& [i, c] : coef) out.coef.emplace(i, -c);
  return out;
}

Chain Chain::canonical_sign() const {
  if (coef.empty() || coef.begin()->second > 0) return *this;
  return negated();
}

Int chain_norm(const Chain& c) { return c.norm(); }

ChainComplex::ChainComplex(const SimplicialComplex& K) : K_(K) {
  if (K.dim() < 0) return;
  bases_.resize(K.dim() + 1);
  index_.resize(K.dim() + 1);
  boundary_.resize(K.dim() + 1);
  for (const auto& s : K.all_simplices()) {
    int k = static_cast<int>(s.size()) - 1;
    index_[k].emplace(s, static_cast<int>(bases_[k].size()));
    bases_[k].push_back(s);
  }
  for (int k = 0; k <= K.dim(); ++k) {
    boundary_[k].resize(bases_[k].size());
    if (k == 0) continue;
    for (std::size_t j = 0; j < bases_[k].size(); ++j) {
      const Simplex& s = bases_[k][j];
      SparseCol col;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        col.emplace_back(index_[k - 1].at(face),
                         Int(drop % 2 == 0 ? 1 : -1));
      }
      std::sort(col.begin(), col.end());
      boundary_[k][j] = std::move(col);
    }
  }
}

int ChainComplex::index_of(int k, const Simplex& s) const {
  if (k < 0 || k > top_dim()) return -1;
  auto it = index_[k].find(s);
  return it == index_[k].end() ? -1 : it->second;
}

Chain ChainComplex::boundary(const Chain& c) const {
  Chain out;
  out.dim = c.dim - 1;
  if (c.dim <= 0 || c.dim > top_dim()) return out;
  for (const auto& [j, t] : c.coef)
    for (const auto& [row, v] : boundary_[c.dim][j]) out.add(row, t * v);
  return out;
}

DenseMat ChainComplex::boundary_dense(int k) const {
  DenseMat A(count(k - 1), count(k));
  if (k <= 0 || k > top_dim()) return A;
  for (int j = 0; j < count(k); ++j)
    for (const auto& [row, v] : boundary_[k][j]) A.at(row, j) = v;
  return A;
}

SparseTriplets ChainComplex::boundary_sparse(int k) const {
  SparseTriplets A;
  A.rows = count(k - 1);
  A.cols = count(k);
  if (k <= 0 || k > top_dim()) return A;
  for (int j = 0; j < count(k); ++j)
    for (const auto& [row, v] : boundary_[k][j])
      A.entries.emplace_back(row, j, v);
  return A;
}

Chain ChainComplex::chain_of(int k, const Simplex& s, Int c) const {
  int idx = index_of(k, s);
  if (idx < 0) throw input_error("chain over a missing simplex");
  Chain out;
  out.dim = k;
  out.add(idx, c);
  return out;
}

std::vector<Int> ChainComplex::to_vector(const Chain& c) const {
  std::vector<Int> v(count(c.dim), Int(0));
  for (const auto& [i, t] : c.coef) v[i] = t;
  return v;
}

Chain ChainComplex::from_vector(int k, const std::vector<Int>& v) const {
  Chain out;
  out.dim = k;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.coef.emplace(static_cast<int>(i), v[i]);
  return out;
}

namespace {

// Greedy 1-norm reduction of a generator by boundary columns.
void sparsify_by_boundaries(Chain& g, const ChainComplex& C, int k) {
  if (k + 1 > C.top_dim()) return;
  for (bool improved = true; improved;) {
    improved = false;
    for (int j = 0; j < C.count(k + 1); ++j) {
      Chain b;
      b.dim = k;
      for (const auto& [row, v] : C.boundary_col(k + 1, j)) b.add(row, v);
      for (int sgn : {-1, 1}) {
        for (;;) {
          Chain t = g;
          t.axpy(Int(sgn), b);
          if (t.norm() < g.norm()) {
            g = std::move(t);
            improved = true;
          } else {
            break;
          }
        }
      }
    }
  }
}

}  // namespace

HomologyResult homology(const ChainComplex& C, bool reduced,
                        bool with_generators) {
  HomologyResult res;
  res.reduced = reduced;
  int n = C.top_dim();
  if (n < 0) return res;
  res.groups.resize(n + 1);

  if (!with_generators) {
    std::vector<std::vector<Int>> factors(n + 2);
    for (int k = 0; k <= n + 1; ++k)
      factors[k] = invariant_factors(C.boundary_sparse(k));
    for (int k = 0; k <= n; ++k) {
      auto& g = res.groups[k];
      g.rank = Int(C.count(k)) - Int(factors[k].size()) -
               Int(factors[k + 1].size());
      for (const auto& d : factors[k + 1])
        if (d > 1) g.torsion.push_back(d);
    }
  } else {
    for (int k = 0; k <= n; ++k) {
      auto& g = res.groups[k];
      SnfResult Sk = smith_normal_form(C.boundary_dense(k));
      int nk = C.count(k);
      int z = nk - Sk.rank;  // kernel dimension
      // Kernel coordinates of the (k+1)-boundary image: rows of V*d(k+1)
      // below the rank.
      DenseMat W = Sk.V.mul(C.boundary_dense(k + 1));
      DenseMat Y(z, C.count(k + 1));
      for (int i = 0; i < z; ++i)
        for (int j = 0; j < Y.cols; ++j) Y.at(i, j) = W.at(Sk.rank + i, j);
      SnfResult Sy = smith_normal_form(Y);
      g.rank = z - Sy.rank;
      for (const auto& d : Sy.diag)
        if (d > 1) g.torsion.push_back(d);
      // Free generators: kernel-basis combinations given by the columns of
      // Sy.U beyond the rank.
      auto kb = kernel_basis(Sk);  // z vectors of length nk
      for (int j = Sy.rank; j < z; ++j) {
        std::vector<Int> vec(nk, Int(0));
        for (int i = 0; i < z; ++i) {
          const Int& t = Sy.U.at(i, j);
          if (t == 0) continue;
          for (int row = 0; row < nk; ++row) vec[row] += t * kb[i][row];
        }
        Chain gen = C.from_vector(k, vec);
        sparsify_by_boundaries(gen, C, k);
        g.generators.push_back(gen.canonical_sign());
      }
    }
  }
  if (reduced && !res.groups.empty()) res.groups[0].rank -= 1;
  return res;
}

HomologyResult homology(const SimplicialComplex& K, bool reduced,
                        bool with_generators) {
  return homology(ChainComplex(K), reduced, with_generators);
}

HomologyResult homology(const FinitePoset& X, bool reduced,
                        bool with_generators) {
  return homology(ChainComplex(order_complex(X)), reduced, with_generators);
}

Chain ChainMap::apply(const Chain& c) const {
  Chain out;
  out.dim = c.dim;
  if (c.dim < 0 || c.dim > max_dim()) return out;
  for (const auto& [j, t] : c.coef)
    for (const auto& [row, v] : cols[c.dim][j]) out.add(row, t * v);
  return out;
}

Int ChainMap::op_norm(int k) const {
  if (k < 0 || k > max_dim()) return 0;
  Int best = 0;
  for (const auto& col : cols[k]) {
    Int s = 0;
    for (const auto& [row, v] : col) s += int_abs(v);
    best = std::max(best, s);
  }
  return best;
}

ChainMap ChainMap::compose_after(const ChainMap& inner) const {
  ChainMap out;
  int d = std::min(max_dim(), inner.max_dim());
  out.cols.resize(d + 1);
  for (int k = 0; k <= d; ++k) {
    out.cols[k].resize(inner.cols[k].size());
    for (std::size_t j = 0; j < inner.cols[k].size(); ++j) {
      Chain img;
      img.dim = k;
      for (const auto& [mid, v] : inner.cols[k][j])
        for (const auto& [row, w] : cols[k][mid]) img.add(row, v * w);
      SparseCol col(img.coef.begin(), img.coef.end());
      out.cols[k][j] = std::move(col);
    }
  }
  return out;
}

namespace {

int sort_parity(std::vector<VertexId> v) {
  int par = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[j] < v[i]) par = -par;
  return par;
}

}  // namespace

ChainMap induced_chain_map(const SimplicialMap& f, const ChainComplex& src,
                           const ChainComplex& tgt) {
  ChainMap out;
  out.cols.resize(src.top_dim() + 1);
  for (int k = 0; k <= src.top_dim(); ++k) {
    out.cols[k].resize(src.count(k));
    for (int j = 0; j < src.count(k); ++j) {
      const Simplex& s = src.basis(k)[j];
      std::vector<VertexId> img;
      for (VertexId v : s) img.push_back(f.assign[v]);
      std::vector<VertexId> sorted(img);
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        continue;  // degenerate image, zero column
      int idx = tgt.index_of(k, sorted);
      if (idx < 0)
        throw input_error("chain map image simplex missing from target");
      out.cols[k][j] = {{idx, Int(sort_parity(img))}};
    }
  }
  return out;
}

SubdivisionOperator subdivision_operator(const SimplicialComplex& K) {
  SubdivisionOperator op;
  op.Kprime = barycentric(K);
  op.src = ChainComplex(K);
  op.dst = ChainComplex(op.Kprime);
  op.lambda.cols.resize(op.src.top_dim() + 1);
  for (int k = 0; k <= op.src.top_dim(); ++k) {
    op.lambda.cols[k].resize(op.src.count(k));
    for (int j = 0; j < op.src.count(k); ++j) {
      const Simplex& s = op.src.basis(k)[j];
      Chain img;
      img.dim = k;
      std::vector<VertexId> perm(s);
      do {
        // Flag of prefixes of the permutation; its parity times the parity
        // of sorting the barycenter tuple orients the K' simplex.
        std::vector<VertexId> flag;
        Simplex prefix;
        for (VertexId v : perm) {
          prefix.push_back(v);
          Simplex sorted(prefix);
          std::sort(sorted.begin(), sorted.end());
          flag.push_back(
              op.Kprime.require_id(brace_name(K.names_of(sorted))));
        }
        int sign = sort_parity(perm) * sort_parity(flag);
        Simplex flag_sorted(flag);
        std::sort(flag_sorted.begin(), flag_sorted.end());
        img.add(op.dst.index_of(k, flag_sorted), Int(sign));
      } while (std::next_permutation(perm.begin(), perm.end()));
      op.lambda.cols[k][j] =
          SparseCol(img.coef.begin(), img.coef.end());
    }
  }
  return op;
}

std::vector<Chain> enumerate_cycles(const ChainComplex& C, int k,
                                    const Int& bound,
                                    const SearchBudget& budget) {
  std::vector<Chain> out;
  int n = C.count(k);
  if (n == 0 || bound <= 0) return out;
  int rows = C.count(k - 1);

  // Rows are checkable once their last incident column has been decided.
  std::vector<int> last_col(rows, -1);
  if (k >= 1)
    for (int j = 0; j < n; ++j)
      for (const auto& [row, v] : C.boundary_col(k, j))
        last_col[row] = std::max(last_col[row], j);
  std::vector<std::vector<int>> close_at(n);
  for (int r = 0; r < rows; ++r)
    if (last_col[r] >= 0) close_at[last_col[r]].push_back(r);

  std::vector<Int> rowsum(rows, Int(0));
  std::vector<Int> chosen(n, Int(0));
  long long nodes = 0;

  std::function<void(int, Int, bool)> dfs = [&](int j, Int used, bool leading) {
    if (++nodes > budget.max_nodes)
      throw budget_error("cycle enumeration exceeded node budget");
    if (j == n) {
      if (!leading) return;
      Chain c;
      c.dim = k;
      for (int i = 0; i < n; ++i)
        if (chosen[i] != 0) c.coef.emplace(i, chosen[i]);
      out.push_back(std::move(c));
      return;
    }
    Int slack = bound - used;
    for (Int c = -slack; c <= slack; ++c) {
      if (!leading && c < 0) continue;  // canonical sign: first nonzero > 0
      chosen[j] = c;
      if (c != 0 && k >= 1)
        for (const auto& [row, v] : C.boundary_col(k, j)) rowsum[row] += c * v;
      bool ok = true;
      for (int r : close_at[j])
        if (rowsum[r] != 0) {
          ok = false;
          break;
        }
      if (ok) dfs(j + 1, used + int_abs(c), leading || c != 0);
      if (c != 0 && k >= 1)
        for (const auto& [row, v] : C.boundary_col(k, j)) rowsum[row] -= c * v;
      chosen[j] = 0;
    }
  };
  dfs(0, Int(0), false);

  std::sort(out.begin(), out.end(), [](const Chain& a, const Chain& b) {
    Int na = a.norm(), nb = b.norm();
    if (na != nb) return na < nb;
    return std::vector<std::pair<int, Int>>(a.coef.begin(), a.coef.end()) <
           std::vector<std::pair<int, Int>>(b.coef.begin(), b.coef.end());
  });
  return out;
}

bool homologous(const ChainComplex& C, const SnfResult& S, const Chain& a,
                const Chain& b) {
  Chain diff = a;
  diff.axpy(Int(-1), b);
  return solve_integer(S, C.to_vector(diff)).has_value();
}

ClassNormResult homology_class_norm(const ChainComplex& C, const Chain& z,
                                    const SearchBudget& budget) {
  if (!C.boundary(z).zero())
    throw input_error("class norm of a non-cycle");
  if (z.zero()) return {Int(0), z};
  SnfResult S = smith_normal_form(C.boundary_dense(z.dim + 1));
  auto candidates = enumerate_cycles(C, z.dim, z.norm(), budget);
  for (const auto& c : candidates) {  // sorted by norm, first hit is minimal
    if (homologous(C, S, z, c)) return {c.norm(), c};
    Chain neg = c.negated();
    if (homologous(C, S, z, neg)) return {c.norm(), neg};
  }
  throw std::logic_error("cycle not found in its own enumeration");
}

RatMat homology_matrix(const ChainMap& f, int k, const ChainComplex& tgt,
                       const HomologyResult& hsrc, const HomologyResult& htgt) {
  const auto none = std::vector<Chain>{};
  const auto& gs = k < static_cast<int>(hsrc.groups.size())
                       ? hsrc.groups[k].generators
                       : none;
  const auto& gt = k < static_cast<int>(htgt.groups.size())
                       ? htgt.groups[k].generators
                       : none;
  RatMat M(static_cast<int>(gt.size()), static_cast<int>(gs.size()));
  if (gs.empty() || gt.empty()) return M;

  int rows = tgt.count(k);
  int bcols = tgt.count(k + 1);
  RatMat A(rows, static_cast<int>(gt.size()) + bcols);
  for (std::size_t j = 0; j < gt.size(); ++j)
    for (const auto& [row, v] : gt[j].coef)
      A.at(row, static_cast<int>(j)) = Rat(v);
  for (int j = 0; j < bcols; ++j)
    for (const auto& [row, v] : tgt.boundary_col(k + 1, j))
      A.at(row, static_cast<int>(gt.size()) + j) = Rat(v);

  for (std::size_t i = 0; i < gs.size(); ++i) {
    Chain img = f.apply(gs[i]);
    std::vector<Rat> b(rows, Rat(0));
    for (const auto& [row, v] : img.coef) b[row] = Rat(v);
    auto x = solve_rational(A, b);
    if (!x)
      throw std::logic_error("homology image not in cycle span");
    for (std::size_t r = 0; r < gt.size(); ++r) M.at(static_cast<int>(r), static_cast<int>(i)) = (*x)[r];
  }
  return M;
}

Rat lefschetz_number(const SimplicialMap& f) {
  if (!same_complex(f.source, f.target))
    throw input_error("Lefschetz number requires a self-map");
  ChainComplex cc(f.source);
  HomologyResult hom = homology(cc, false, true);
  ChainMap fm = induced_chain_map(f, cc, cc);
  Rat L(0);
  for (int k = 0; k <= cc.top_dim(); ++k) {
    RatMat M = homology_matrix(fm, k, cc, hom, hom);
    Rat tr(0);
    for (int i = 0; i < std::min(M.rows, M.cols); ++i) tr += M.at(i, i);
    L += (k % 2 == 0 ? tr : -tr);
  }
  return L;
}

Rat lefschetz_number(const MonotoneMap& f) {
  return lefschetz_number(order_complex_functor(f));
}

Chain fundamental_cycle(const ChainComplex& cc,
                        const PseudomanifoldReport& rep) {
  if (!rep.closed_pseudomanifold() || !rep.orientable)
    throw input_error("fundamental cycle needs a closed orientable pseudomanifold");
  Chain z;
  z.dim = rep.dim;
  const auto& facets = cc.complex().facets();
  for (std::size_t i = 0; i < facets.size(); ++i)
    z.add(cc.index_of(rep.dim, facets[i]), Int(rep.facet_signs[i]));
  return z;
}

CylinderRetraction cylinder_retraction(const SimplicialComplex& K) {
  if (K.dim() < 0) throw input_error("cylinder retraction of an empty complex");
  CylinderRetraction R;
  R.K = K;
  R.Kprime = barycentric(K);

  R.ordering = R.Kprime.vertex_names();
  std::stable_sort(R.ordering.begin(), R.ordering.end(),
                   [&](const std::string& a, const std::string& b) {
                     std::size_t da = R.Kprime.labels().at(a).size();
                     std::size_t db = R.Kprime.labels().at(b).size();
                     if (da != db) return da > db;
                     return a < b;
                   });

  std::map<std::string, std::string> psi_assign;
  for (const auto& v : R.Kprime.vertex_names())
    psi_assign[v] = R.Kprime.labels().at(v).front();
  R.psi = SimplicialMap::make(R.Kprime, K, psi_assign);

  R.cyl = mapping_cylinder(R.psi, R.ordering);
  R.ccZ = ChainComplex(R.cyl.Z);
  R.ccKp = ChainComplex(R.Kprime);

  // Each cylinder vertex carries a simplex of K: barycenters carry the
  // simplex they subdivide, target vertices carry themselves.
  const SimplicialComplex& Z = R.cyl.Z;
  std::vector<Simplex> label_of(Z.vertex_count());
  for (VertexId v = 0; v < R.Kprime.vertex_count(); ++v) {
    VertexId zv = R.cyl.include_source.assign[v];
    auto s = K.simplex_from_names(R.Kprime.labels().at(R.Kprime.name_of(v)));
    label_of[zv] = *s;
  }
  for (VertexId w = 0; w < K.vertex_count(); ++w)
    label_of[R.cyl.include_target.assign[w]] = {w};

  R.r.cols.resize(R.ccZ.top_dim() + 1);
  for (int k = 0; k <= R.ccZ.top_dim(); ++k) {
    R.r.cols[k].resize(R.ccZ.count(k));
    for (int j = 0; j < R.ccZ.count(k); ++j) {
      const Simplex& S = R.ccZ.basis(k)[j];

      // Union poset of the vertex labels.
      std::set<Simplex> unions;
      {
        std::vector<Simplex> atoms;
        for (VertexId v : S) atoms.push_back(label_of[v]);
        for (std::uint32_t mask = 1; mask < (1u << atoms.size()); ++mask) {
          Simplex u;
          for (std::size_t i = 0; i < atoms.size(); ++i)
            if (mask & (1u << i)) {
              Simplex merged;
              std::set_union(u.begin(), u.end(), atoms[i].begin(),
                             atoms[i].end(), std::back_inserter(merged));
              u = std::move(merged);
            }
          unions.insert(std::move(u));
        }
      }
      std::vector<Simplex> U(unions.begin(), unions.end());
      std::sort(U.begin(), U.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
      });

      // All chains of length k+1 in the union poset.
      std::vector<std::vector<int>> chains;
      std::vector<int> cur;
      std::function<void(int)> grow = [&](int at) {
        cur.push_back(at);
        if (static_cast<int>(cur.size()) == k + 1) {
          chains.push_back(cur);
        } else {
          for (int nxt = at + 1; nxt < static_cast<int>(U.size()); ++nxt)
            if (U[nxt].size() > U[at].size() &&
                std::includes(U[nxt].begin(), U[nxt].end(), U[at].begin(),
                              U[at].end()))
              grow(nxt);
        }
        cur.pop_back();
      };
      for (int i = 0; i < static_cast<int>(U.size()); ++i) grow(i);
      if (chains.empty()) continue;  // hull dimension below k, zero column

      // Affine frame: barycenters of the vertex labels, in coordinates over
      // the vertices of the total union.
      const Simplex& total = U.back();
      std::map<VertexId, int> coord;
      for (std::size_t i = 0; i < total.size(); ++i)
        coord[total[i]] = static_cast<int>(i);
      const int V = static_cast<int>(total.size());
      RatMat frame(V + 1, k + 1);
      for (int c = 0; c <= k; ++c) {
        const Simplex& atom = label_of[S[c]];
        for (VertexId v : atom)
          frame.at(coord.at(v), c) = Rat(Int(1), Int(atom.size()));
        frame.at(V, c) = Rat(1);
      }

      Chain col;
      col.dim = k;
      for (const auto& ch : chains) {
        // Barycentric coordinates of each chain member in the frame.
        Simplex T;
        for (int idx : ch) {
          auto names = K.names_of(U[idx]);
          T.push_back(R.Kprime.require_id(brace_name(names)));
        }
        Simplex T_sorted(T);
        std::sort(T_sorted.begin(), T_sorted.end());
        RatMat X(k + 1, k + 1);
        for (int c = 0; c <= k; ++c) {
          // Member simplex of the sorted chain vertex.
          auto member = K.simplex_from_names(
              R.Kprime.labels().at(R.Kprime.name_of(T_sorted[c])));
          std::vector<Rat> rhs(V + 1, Rat(0));
          for (VertexId v : *member)
            rhs[coord.at(v)] = Rat(Int(1), Int(member->size()));
          rhs[V] = Rat(1);
          auto x = solve_rational(frame, rhs);
          if (!x) throw std::logic_error("hull frame solve failed");
          for (int r = 0; r <= k; ++r) X.at(r, c) = (*x)[r];
        }
        Rat d = determinant(X);
        if (d == Rat(0)) throw std::logic_error("degenerate hull chain");
        col.add(R.ccKp.index_of(k, T_sorted), Int(d > Rat(0) ? 1 : -1));
      }
      R.r.cols[k][j] = SparseCol(col.coef.begin(), col.coef.end());
    }
  }
  return R;
}

Winding::Winding(
    const FinitePoset& X,
    const std::map<std::pair<std::string, std::string>, Int>& cover_weights)
    : X_(X) {
  std::set<std::pair<PointId, PointId>> covers(X_.covers().begin(),
                                               X_.covers().end());
  for (const auto& [pair, v] : cover_weights) {
    PointId a = X_.require_id(pair.first), b = X_.require_id(pair.second);
    if (!covers.count({a, b}))
      throw input_error("weight on non-cover pair " + pair.first + " < " +
                        pair.second);
    w_[{a, b}] = v;
  }
  for (auto [a, b] : covers)
    if (!w_.count({a, b}))
      throw input_error("missing weight on cover " + X_.name_of(a) + " < " +
                        X_.name_of(b));

  // Extend along saturated chains (least next cover), then verify the
  // triangle condition, which makes the extension path-independent.
  std::vector<std::vector<PointId>> succ(X_.size());
  for (auto [a, b] : X_.covers()) succ[a].push_back(b);
  std::function<Int(PointId, PointId)> weight = [&](PointId a,
                                                    PointId b) -> Int {
    auto it = w_.find({a, b});
    if (it != w_.end()) return it->second;
    for (PointId c : succ[a])
      if (X_.leq(c, b)) {
        Int val = w_.at({a, c}) + (c == b ? Int(0) : weight(c, b));
        w_[{a, b}] = val;
        return val;
      }
    throw std::logic_error("no saturated chain found");
  };
  for (PointId a = 0; a < X_.size(); ++a)
    for (PointId b = 0; b < X_.size(); ++b)
      if (X_.lt(a, b)) weight(a, b);
  for (PointId a = 0; a < X_.size(); ++a)
    for (PointId b = 0; b < X_.size(); ++b)
      for (PointId c = 0; c < X_.size(); ++c)
        if (X_.lt(a, b) && X_.lt(b, c) &&
            w_.at({a, c}) != w_.at({a, b}) + w_.at({b, c}))
          throw input_error("weights violate additivity on " + X_.name_of(a) +
                            " < " + X_.name_of(b) + " < " + X_.name_of(c));
}

Int Winding::pair_weight(PointId a, PointId b) const {
  auto it = w_.find({a, b});
  if (it == w_.end()) throw input_error("winding weight of incomparable pair");
  return it->second;
}

Int Winding::eval(const ChainComplex& ccKX, const Chain& z) const {
  if (z.dim != 1) throw input_error("winding evaluates 1-chains");
  Int total = 0;
  for (const auto& [idx, t] : z.coef) {
    const Simplex& e = ccKX.basis(1)[idx];
    PointId a = X_.require_id(ccKX.complex().name_of(e[0]));
    PointId b = X_.require_id(ccKX.complex().name_of(e[1]));
    if (X_.lt(a, b))
      total += t * w_.at({a, b});
    else if (X_.lt(b, a))
      total -= t * w_.at({b, a});
    else
      throw input_error("edge joins incomparable points");
  }
  return total;
}

std::map<std::pair<std::string, std::string>, Int> Winding::cover_weights()
    const {
  std::map<std::pair<std::string, std::string>, Int> out;
  for (auto [a, b] : X_.covers())
    out[{X_.name_of(a), X_.name_of(b)}] = w_.at({a, b});
  return out;
}

WindingReport winding_report(const Winding& w, const ChainComplex& ccKX,
                             const Chain* z) {
  WindingReport rep;
  HomologyResult hom = homology(ccKX, false, true);
  Int rank = 0;
  bool torsion_free = true;
  if (ccKX.top_dim() >= 1) {
    rank = hom.groups[1].rank;
    torsion_free = hom.groups[1].torsion.empty();
    for (const auto& g : hom.groups[1].generators)
      rep.generator_values.push_back(w.eval(ccKX, g));
  }
  bool nonzero = !rep.generator_values.empty() &&
                 rep.generator_values.front() != 0;
  rep.injective = torsion_free &&
                  (rank == 0 || (rank == 1 && nonzero));
  rep.iso = torsion_free && rank == 1 &&
            int_abs(rep.generator_values.front()) == 1;
  if (z) rep.cycle_value = w.eval(ccKX, *z);
  return rep;
}

}  // namespace fpt
