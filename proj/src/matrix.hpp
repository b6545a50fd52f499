#pragma once

#include <optional>
#include <tuple>

#include "common.hpp"

namespace fpt {

struct DenseMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  DenseMat() = default;
  DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
  static DenseMat identity(int n);
  DenseMat mul(const DenseMat& rhs) const;
  std::vector<Int> apply(const std::vector<Int>& v) const;  // A v
  bool is_identity() const;
};

// A = U * D * V with U, V unimodular and D = diag(d) satisfying d0 | d1 | ...
struct SnfResult {
  DenseMat U, Uinv, V, Vinv;
  std::vector<Int> diag;  // length min(rows, cols), zeros at the end
  int rank = 0;           // number of nonzero diagonal entries
  int rows = 0, cols = 0;
};
SnfResult smith_normal_form(DenseMat A);

// Columns of Vinv beyond the rank: a basis of ker(A).
std::vector<std::vector<Int>> kernel_basis(const SnfResult& S);

// Solve A x = b over the integers using a precomputed SNF of A.
std::optional<std::vector<Int>> solve_integer(const SnfResult& S,
                                              const std::vector<Int>& b);

struct SparseTriplets {
  int rows = 0, cols = 0;
  std::vector<std::tuple<int, int, Int>> entries;  // duplicates are summed
};

// Invariant factors (positive, divisibility chain) without transform
// matrices. Pivoting prefers small values, then low fill (Markowitz count).
std::vector<Int> invariant_factors(const SparseTriplets& A);
int integer_rank(const SparseTriplets& A);

struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;
  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
};

std::optional<std::vector<Rat>> solve_rational(RatMat A, std::vector<Rat> b);
int rank_rational(RatMat A);
Rat determinant(RatMat A);

}  // namespace fpt
