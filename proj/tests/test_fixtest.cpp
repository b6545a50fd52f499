#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtest.hpp"

using namespace fpt;

namespace {

SimplicialComplex circle3() {
  return SimplicialComplex::validate({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

SimplicialComplex sphere2() {
  return SimplicialComplex::validate(
      {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

FinitePoset circle_model() {
  return FinitePoset::from_covers(
      {"a0", "a1", "b0", "b1"},
      {{"a0", "b0"}, {"a0", "b1"}, {"a1", "b0"}, {"a1", "b1"}});
}

FinitePoset random_poset(SplitMix64& rng, int maxn) {
  int n = 2 + static_cast<int>(rng.next() % (maxn - 1));
  std::vector<std::string> pts;
  for (int i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next() % 3 == 0) rel.emplace_back(pts[i], pts[j]);
  return FinitePoset::from_relations(pts, rel);
}

SimplicialComplex random_complex(SplitMix64& rng, int maxv) {
  int nv = 2 + static_cast<int>(rng.next() % (maxv - 1));
  std::vector<std::vector<std::string>> facets;
  int nf = 1 + static_cast<int>(rng.next() % (nv + 1));
  for (int f = 0; f < nf; ++f) {
    int sz = 1 + static_cast<int>(rng.next() % std::min(nv, 3));
    std::set<int> pick;
    while (static_cast<int>(pick.size()) < sz)
      pick.insert(static_cast<int>(rng.next() % nv));
    std::vector<std::string> fac;
    for (int i : pick) fac.push_back("v" + std::to_string(i));
    facets.push_back(fac);
  }
  return SimplicialComplex::validate(facets);
}

}  // namespace

TEST_CASE("automorphism groups of familiar shapes") {
  CHECK(automorphisms(SimplicialComplex::validate({{"a", "b", "c"}})).size() ==
        6);
  CHECK(automorphisms(sphere2()).size() == 24);
  // The path a-b-c only flips.
  auto path = SimplicialComplex::validate({{"a", "b"}, {"b", "c"}});
  auto auts = automorphisms(path);
  CHECK(auts.size() == 2);
  CHECK(universally_fixed(path) ==
        std::vector<VertexId>{path.require_id("b")});
  CHECK_FALSE(is_asymmetric(circle3()));
  CHECK(is_asymmetric(path));
  // Poset side: the 4-crown swaps levels independently.
  CHECK(automorphisms(circle_model()).size() == 4);
}

TEST_CASE("asymmetrize the 2-sphere") {
  auto ar = asymmetrize(sphere2());
  CHECK(ar.certificate.status == CertStatus::holds);
  CHECK(ar.apex_degree > ar.runner_up_degree);
  CHECK(is_asymmetric(ar.L));
  CHECK(ar.degree_formula_ok);
  CHECK(ar.unique_max_in_prime);
  CHECK(pseudomanifold_check(ar.L).closed_pseudomanifold());
  // Starring preserves the homotopy type.
  auto h = homology(ar.L);
  CHECK(h.groups[2].rank == 1);
  CHECK(h.groups[1].rank == 0);
}

TEST_CASE("asymmetrize rejects impossible inputs") {
  CHECK_THROWS_AS(asymmetrize(circle3()), input_error);
  CHECK_THROWS_AS(
      asymmetrize(SimplicialComplex::validate({{"a", "b", "c"}})),
      input_error);
}

TEST_CASE("fixed simplex property verdicts") {
  SearchBudget b;
  // Any self-map of a cone fixes a simplex.
  auto cert = fsp_check(SimplicialComplex::validate({{"a", "b", "c"}}), b);
  CHECK(cert.status == CertStatus::holds);
  // The hollow triangle rotates freely.
  auto cert2 = fsp_check(circle3(), b);
  CHECK(cert2.status == CertStatus::refuted);
  REQUIRE(!cert2.witness.empty());
  // The witness is a simplicial self-map without a fixed simplex.
  auto K = circle3();
  auto w = SimplicialMap::make(K, K, cert2.witness);
  for (const auto& s : K.all_simplices()) CHECK(w.image(s) != s);
}

TEST_CASE("fixed point property verdicts") {
  SearchBudget b;
  auto top = FinitePoset::from_covers({"a", "b", "t"},
                                      {{"a", "t"}, {"b", "t"}});
  CHECK(fpp_check(top, b).status == CertStatus::holds);
  auto cert = fpp_check(circle_model(), b);
  CHECK(cert.status == CertStatus::refuted);
  REQUIRE(!cert.witness.empty());
  auto X = circle_model();
  auto f = MonotoneMap::make(X, X, cert.witness);
  for (PointId p = 0; p < static_cast<PointId>(X.size()); ++p)
    CHECK(f(p) != p);
}

TEST_CASE("tight budgets yield inconclusive, not wrong") {
  SearchBudget tiny;
  tiny.max_nodes = 1;
  auto cert = fpp_check(circle_model(), tiny);
  CHECK(cert.status == CertStatus::inconclusive);
  auto cert2 = fsp_check(circle3(), tiny);
  CHECK(cert2.status == CertStatus::inconclusive);
}

TEST_CASE("pruned and naive searches agree on posets") {
  SplitMix64 rng(0xF1A7u);
  SearchBudget b;
  for (int t = 0; t < 40; ++t) {
    auto X = random_poset(rng, 5);
    auto fast = fpp_check(X, b);
    auto slow = fpp_check_naive(X, b);
    REQUIRE(fast.status != CertStatus::inconclusive);
    CHECK(fast.status == slow.status);
  }
}

TEST_CASE("pruned and naive searches agree on complexes") {
  SplitMix64 rng(0xF5B2u);
  SearchBudget b;
  for (int t = 0; t < 40; ++t) {
    auto K = random_complex(rng, 5);
    auto fast = fsp_check(K, b);
    auto slow = fsp_check_naive(K, b);
    REQUIRE(fast.status != CertStatus::inconclusive);
    CHECK(fast.status == slow.status);
  }
}

TEST_CASE("decomposition certificate covers every self-map") {
  auto ar = asymmetrize(sphere2());
  SearchBudget b;
  auto dr = fsp_decomposition_certify(ar.L, ar.apex, b);
  CHECK(dr.certified);
  CHECK(dr.maps_total > 0);
  CHECK(dr.by_lefschetz + dr.by_automorphism == dr.maps_total);
  CHECK(dr.uncertified_map.empty());
}

TEST_CASE("fsp to fpp lift") {
  auto K = circle3();
  // A reflection fixes the edge {b,c} setwise.
  auto refl = SimplicialMap::make(K, K, {{"a", "a"}, {"b", "c"}, {"c", "b"}});
  auto f = face_poset_functor(refl);
  auto lr = fsp_to_fpp_lift(K, f);
  CHECK(lr.has_fixed);
  CHECK(!lr.fixed_point.empty());
  // The rotation lifts to a fixed-point-free square, matching refutation.
  auto rot = SimplicialMap::make(K, K, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  auto fr = face_poset_functor(rot);
  auto lr2 = fsp_to_fpp_lift(K, fr);
  CHECK_FALSE(lr2.has_fixed);
}
