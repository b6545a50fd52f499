#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matrix.hpp"

using namespace fpt;

namespace {

DenseMat from_rows(const std::vector<std::vector<long long>>& rows) {
  DenseMat m(static_cast<int>(rows.size()),
             rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = Int(rows[r][c]);
  return m;
}

DenseMat random_mat(SplitMix64& rng, int maxdim) {
  int r = 1 + static_cast<int>(rng.next() % maxdim);
  int c = 1 + static_cast<int>(rng.next() % maxdim);
  DenseMat m(r, c);
  for (auto& x : m.a)
    x = Int(static_cast<long long>(rng.next() % 11)) - 5;
  return m;
}

void check_snf_contract(const DenseMat& A) {
  SnfResult S = smith_normal_form(A);
  // U D V = A with U, V unimodular.
  DenseMat D(A.rows, A.cols);
  for (int i = 0; i < static_cast<int>(S.diag.size()); ++i)
    D.at(i, i) = S.diag[i];
  CHECK(S.U.mul(D).mul(S.V).a == A.a);
  CHECK(S.U.mul(S.Uinv).is_identity());
  CHECK(S.V.mul(S.Vinv).is_identity());
  // Divisibility chain, zeros trailing.
  for (int i = 0; i + 1 < static_cast<int>(S.diag.size()); ++i) {
    if (S.diag[i + 1] != 0) {
      REQUIRE(S.diag[i] != 0);
      CHECK(S.diag[i + 1] % S.diag[i] == 0);
    }
  }
  for (int i = 0; i < static_cast<int>(S.diag.size()); ++i)
    CHECK((i < S.rank) == (S.diag[i] != 0));
}

SparseTriplets to_sparse(const DenseMat& A) {
  SparseTriplets t;
  t.rows = A.rows;
  t.cols = A.cols;
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c)
      if (A.at(r, c) != 0) t.entries.emplace_back(r, c, A.at(r, c));
  return t;
}

}  // namespace

TEST_CASE("smith normal form of frozen matrices") {
  // diag(2,3) ~ diag(1,6).
  auto S = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  CHECK(S.diag == std::vector<Int>{1, 6});
  CHECK(S.rank == 2);

  // Rank-one matrix with content 1.
  auto S2 = smith_normal_form(from_rows({{4, 6}, {6, 9}}));
  CHECK(S2.diag == std::vector<Int>{1, 0});
  CHECK(S2.rank == 1);

  // Boundary of the hollow triangle: edges ab, ac, bc against a, b, c.
  auto S3 = smith_normal_form(
      from_rows({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}}));
  CHECK(S3.diag == std::vector<Int>{1, 1, 0});
}

TEST_CASE("smith normal form contract on random matrices") {
  SplitMix64 rng(0x51F7u);
  for (int t = 0; t < 60; ++t) check_snf_contract(random_mat(rng, 6));
  check_snf_contract(from_rows({{0, 0}, {0, 0}}));
  check_snf_contract(from_rows({{7}}));
}

TEST_CASE("kernel basis spans the kernel") {
  auto A = from_rows({{1, 1, 1}});
  auto S = smith_normal_form(A);
  auto ker = kernel_basis(S);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    auto img = A.apply(v);
    for (const auto& x : img) CHECK(x == 0);
  }
}

TEST_CASE("integer solve") {
  auto A = from_rows({{2, 0}, {0, 5}});
  auto S = smith_normal_form(A);
  auto x = solve_integer(S, {4, 10});
  REQUIRE(x.has_value());
  CHECK(A.apply(*x) == std::vector<Int>{4, 10});
  CHECK_FALSE(solve_integer(S, {3, 10}).has_value());
}

TEST_CASE("sparse invariant factors agree with the dense elimination") {
  SplitMix64 rng(0xFAC70125u);
  for (int t = 0; t < 40; ++t) {
    auto A = random_mat(rng, 6);
    auto S = smith_normal_form(A);
    std::vector<Int> dense_factors(S.diag.begin(),
                                   S.diag.begin() + S.rank);
    auto sparse_factors = invariant_factors(to_sparse(A));
    CHECK(dense_factors == sparse_factors);
    CHECK(integer_rank(to_sparse(A)) == S.rank);
  }
}

TEST_CASE("rational solve, rank, determinant") {
  RatMat A(2, 2);
  A.at(0, 0) = Rat(2);
  A.at(0, 1) = Rat(1);
  A.at(1, 0) = Rat(1);
  A.at(1, 1) = Rat(1);
  CHECK(determinant(A) == Rat(1));
  CHECK(rank_rational(A) == 2);
  auto x = solve_rational(A, {Rat(3), Rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1));
  CHECK((*x)[1] == Rat(1));

  RatMat B(2, 2);
  B.at(0, 0) = Rat(1);
  B.at(0, 1) = Rat(2);
  B.at(1, 0) = Rat(2);
  B.at(1, 1) = Rat(4);
  CHECK(determinant(B) == Rat(0));
  CHECK(rank_rational(B) == 1);
  CHECK_FALSE(solve_rational(B, {Rat(1), Rat(0)}).has_value());
}
