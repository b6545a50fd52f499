#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "zhomology.hpp"

using namespace fpt;

namespace {

SimplicialComplex circle3() {
  return SimplicialComplex::validate({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

SimplicialComplex sphere2() {
  return SimplicialComplex::validate(
      {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

SimplicialComplex torus7() {
  // Vertices 0..6 mod 7, facets {i, i+1, i+3} and {i, i+2, i+3}.
  std::vector<std::vector<std::string>> facets;
  auto v = [](int i) { return std::to_string(((i % 7) + 7) % 7); };
  for (int i = 0; i < 7; ++i) {
    facets.push_back({v(i), v(i + 1), v(i + 3)});
    facets.push_back({v(i), v(i + 2), v(i + 3)});
  }
  return SimplicialComplex::validate(facets);
}

SimplicialComplex rp2_6() {
  return SimplicialComplex::validate(
      {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
       {"1", "2", "6"}, {"2", "3", "5"}, {"3", "4", "6"}, {"2", "4", "5"},
       {"3", "5", "6"}, {"2", "4", "6"}});
}

void expect_groups(const HomologyResult& h, const std::vector<Int>& betti,
                   const std::vector<std::vector<Int>>& torsion) {
  REQUIRE(h.groups.size() == betti.size());
  for (std::size_t k = 0; k < betti.size(); ++k) {
    CHECK(h.groups[k].rank == betti[k]);
    CHECK(h.groups[k].torsion == torsion[k]);
  }
}

}  // namespace

TEST_CASE("chain complex bookkeeping") {
  ChainComplex cc(circle3());
  CHECK(cc.top_dim() == 1);
  CHECK(cc.count(0) == 3);
  CHECK(cc.count(1) == 3);
  auto e = circle3().simplex_from_names({"a", "b"});
  REQUIRE(e.has_value());
  Chain c = cc.chain_of(1, *e);
  Chain d = cc.boundary(c);
  CHECK(d.dim == 0);
  CHECK(chain_norm(d) == 2);
  CHECK(cc.boundary(d).zero());
}

TEST_CASE("boundary of boundary vanishes on random complexes") {
  SplitMix64 rng(0xB0B0u);
  for (int t = 0; t < 25; ++t) {
    int nv = 3 + static_cast<int>(rng.next() % 4);
    std::vector<std::vector<std::string>> facets;
    for (int f = 0; f < 5; ++f) {
      std::set<int> pick;
      int sz = 1 + static_cast<int>(rng.next() % std::min(nv, 4));
      while (static_cast<int>(pick.size()) < sz)
        pick.insert(static_cast<int>(rng.next() % nv));
      std::vector<std::string> fac;
      for (int i : pick) fac.push_back("v" + std::to_string(i));
      facets.push_back(fac);
    }
    ChainComplex cc(SimplicialComplex::validate(facets));
    for (int k = 2; k <= cc.top_dim(); ++k)
      for (int j = 0; j < cc.count(k); ++j) {
        Chain unit;
        unit.dim = k;
        unit.add(j, Int(1));
        CHECK(cc.boundary(cc.boundary(unit)).zero());
      }
  }
}

TEST_CASE("homology of the standard spaces") {
  expect_groups(homology(circle3()), {1, 1}, {{}, {}});
  expect_groups(homology(sphere2()), {1, 0, 1}, {{}, {}, {}});
  expect_groups(homology(torus7()), {1, 2, 1}, {{}, {}, {}});
  expect_groups(homology(rp2_6()), {1, 0, 0}, {{}, {Int(2)}, {}});
}

TEST_CASE("reduced homology drops the basepoint rank") {
  auto h = homology(sphere2(), true);
  CHECK(h.reduced);
  CHECK(h.groups[0].rank == 0);
  CHECK(h.groups[2].rank == 1);
}

TEST_CASE("homology is invariant under one subdivision") {
  for (const auto& K : {circle3(), rp2_6()}) {
    auto before = homology(K);
    auto after = homology(barycentric(K));
    REQUIRE(before.groups.size() == after.groups.size());
    for (std::size_t k = 0; k < before.groups.size(); ++k) {
      CHECK(before.groups[k].rank == after.groups[k].rank);
      CHECK(before.groups[k].torsion == after.groups[k].torsion);
    }
  }
}

TEST_CASE("homology generators are cycles and not boundaries") {
  ChainComplex cc(circle3());
  auto h = homology(cc, false, true);
  REQUIRE(h.groups[1].generators.size() == 1);
  const Chain& g = h.groups[1].generators[0];
  CHECK(cc.boundary(g).zero());
  CHECK(chain_norm(g) == 3);
}

TEST_CASE("homology of a poset goes through the order complex") {
  auto X = FinitePoset::from_covers(
      {"a0", "a1", "b0", "b1"},
      {{"a0", "b0"}, {"a0", "b1"}, {"a1", "b0"}, {"a1", "b1"}});
  expect_groups(homology(X), {1, 1}, {{}, {}});
}

TEST_CASE("subdivision operator norms are exactly (k+1)!") {
  auto tetra = SimplicialComplex::validate({{"a", "b", "c", "d"}});
  auto op = subdivision_operator(tetra);
  for (int k = 0; k <= 3; ++k) CHECK(op.lambda.op_norm(k) == factorial(k + 1));
  // lambda is a chain map: boundary after equals before.
  for (int k = 1; k <= 3; ++k)
    for (int j = 0; j < op.src.count(k); ++j) {
      Chain unit;
      unit.dim = k;
      unit.add(j, Int(1));
      CHECK(op.dst.boundary(op.lambda.apply(unit)) ==
            op.lambda.apply(op.src.boundary(unit)));
    }
}

TEST_CASE("induced chain maps contract norms") {
  auto K = sphere2();
  ChainComplex cc(K);
  auto id = induced_chain_map(SimplicialMap::identity(K), cc, cc);
  for (int k = 0; k <= 2; ++k) CHECK(id.op_norm(k) == 1);
  // A collapse sends some simplices to zero but never grows a coefficient.
  auto c = SimplicialMap::make(
      K, K, {{"a", "a"}, {"b", "a"}, {"c", "c"}, {"d", "d"}});
  auto fc = induced_chain_map(c, cc, cc);
  for (int k = 0; k <= 2; ++k) CHECK(fc.op_norm(k) <= 1);
}

TEST_CASE("cycle enumeration finds exactly the short cycles") {
  ChainComplex cc(circle3());
  SearchBudget b;
  CHECK(enumerate_cycles(cc, 1, Int(2), b).empty());
  auto zs = enumerate_cycles(cc, 1, Int(3), b);
  REQUIRE(zs.size() == 1);
  CHECK(chain_norm(zs[0]) == 3);
  CHECK(cc.boundary(zs[0]).zero());
  // Canonical sign: lowest-index coefficient positive.
  CHECK(zs[0].coef.begin()->second > 0);
}

TEST_CASE("class norm minimum on a subdivided circle") {
  auto K = iterated_barycentric(circle3(), 1);  // hexagon
  ChainComplex cc(K);
  auto pm = pseudomanifold_check(K);
  REQUIRE(pm.closed_pseudomanifold());
  Chain fund = fundamental_cycle(cc, pm);
  CHECK(chain_norm(fund) == 6);
  SearchBudget b;
  auto r = homology_class_norm(cc, fund, b);
  CHECK(r.min_norm == 6);
  CHECK(cc.boundary(r.argmin).zero());
}

TEST_CASE("homologous detects boundary differences") {
  auto K = torus7();
  ChainComplex cc(K);
  auto h = homology(cc, false, true);
  REQUIRE(h.groups[1].generators.size() == 2);
  Chain g1 = h.groups[1].generators[0];
  Chain g2 = h.groups[1].generators[1];
  auto S = smith_normal_form(cc.boundary_dense(2));
  // Independent basis classes never coincide.
  CHECK_FALSE(homologous(cc, S, g1, g2));
  // Adding any facet boundary stays in the class.
  Chain shifted = g1;
  shifted.axpy(Int(1), cc.boundary(cc.chain_of(2, cc.basis(2)[0])));
  CHECK(homologous(cc, S, g1, shifted));
  CHECK(homologous(cc, S, g1, g1));
}

TEST_CASE("fundamental cycles close up") {
  for (const auto& K : {sphere2(), torus7()}) {
    auto pm = pseudomanifold_check(K);
    REQUIRE(pm.closed_pseudomanifold());
    REQUIRE(pm.orientable);
    ChainComplex cc(K);
    Chain fund = fundamental_cycle(cc, pm);
    CHECK(chain_norm(fund) == Int(K.facets().size()));
    CHECK(cc.boundary(fund).zero());
  }
}

TEST_CASE("lefschetz numbers of familiar maps") {
  auto K = sphere2();
  CHECK(lefschetz_number(SimplicialMap::identity(K)) == Rat(2));
  auto C = circle3();
  CHECK(lefschetz_number(SimplicialMap::identity(C)) == Rat(0));
  auto rot = SimplicialMap::make(C, C, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK(lefschetz_number(rot) == Rat(0));
  auto collapse =
      SimplicialMap::make(C, C, {{"a", "a"}, {"b", "a"}, {"c", "a"}});
  CHECK(lefschetz_number(collapse) == Rat(1));

  // Monotone version on the minimal circle: rotation has Lefschetz zero.
  auto X = FinitePoset::from_covers(
      {"a0", "a1", "b0", "b1"},
      {{"a0", "b0"}, {"a0", "b1"}, {"a1", "b0"}, {"a1", "b1"}});
  auto f = MonotoneMap::make(X, X,
                             {{"a0", "a1"},
                              {"a1", "a0"},
                              {"b0", "b1"},
                              {"b1", "b0"}});
  CHECK(lefschetz_number(f) == Rat(0));
  CHECK(lefschetz_number(MonotoneMap::identity(X)) == Rat(0));
}

TEST_CASE("homology matrix of a degree map") {
  auto C = circle3();
  ChainComplex cc(C);
  auto h = homology(cc, false, true);
  auto rot = SimplicialMap::make(C, C, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  auto f = induced_chain_map(rot, cc, cc);
  auto m = homology_matrix(f, 1, cc, h, h);
  REQUIRE(m.rows == 1);
  REQUIRE(m.cols == 1);
  CHECK((m.at(0, 0) == Rat(1) || m.at(0, 0) == Rat(-1)));
}

TEST_CASE("cylinder retraction invariants on the hollow triangle") {
  auto cr = cylinder_retraction(circle3());
  CHECK(same_complex(cr.Kprime, barycentric(cr.K)));
  for (int k = 0; k <= cr.ccZ.top_dim(); ++k)
    CHECK(cr.r.op_norm(k) <= factorial(k + 1));
  // psi collapses each barycenter to the least member of its simplex.
  CHECK(cr.psi.image_name("{a,b}") == "a");
  CHECK(cr.psi.image_name("{b,c}") == "b");
  CHECK(cr.psi.image_name("{c}") == "c");
}
