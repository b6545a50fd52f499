#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scomplex.hpp"

using namespace fpt;

namespace {

SimplicialComplex triangle() {
  return SimplicialComplex::validate({{"a", "b", "c"}});
}

SimplicialComplex circle3() {
  return SimplicialComplex::validate({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

SimplicialComplex sphere2() {
  return SimplicialComplex::validate(
      {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

// Random complex on at most maxv vertices, for property tests.
SimplicialComplex random_complex(SplitMix64& rng, int maxv) {
  int nv = 2 + static_cast<int>(rng.next() % (maxv - 1));
  std::vector<std::string> verts;
  for (int i = 0; i < nv; ++i) verts.push_back("v" + std::to_string(i));
  int nf = 1 + static_cast<int>(rng.next() % (nv + 2));
  std::vector<std::vector<std::string>> facets;
  for (int f = 0; f < nf; ++f) {
    int sz = 1 + static_cast<int>(rng.next() % std::min(nv, 4));
    std::set<int> pick;
    while (static_cast<int>(pick.size()) < sz)
      pick.insert(static_cast<int>(rng.next() % nv));
    std::vector<std::string> fac;
    for (int i : pick) fac.push_back(verts[i]);
    facets.push_back(fac);
  }
  return SimplicialComplex::validate(facets);
}

}  // namespace

TEST_CASE("validate canonicalizes and absorbs faces") {
  auto K = SimplicialComplex::validate(
      {{"c", "a", "b"}, {"a", "b"}, {"b", "a", "c"}, {"d"}});
  CHECK(K.dim() == 2);
  CHECK(K.vertex_count() == 4);
  REQUIRE(K.facets().size() == 2);
  CHECK(K.names_of(K.facets()[0]) == std::vector<std::string>{"a", "b", "c"});
  CHECK(K.names_of(K.facets()[1]) == std::vector<std::string>{"d"});
  // Vertex ids follow lexicographic name order.
  CHECK(K.name_of(0) == "a");
  CHECK(K.name_of(3) == "d");
}

TEST_CASE("validate rejects malformed facets") {
  CHECK_THROWS_AS(SimplicialComplex::validate({{}}), input_error);
  CHECK_THROWS_AS(SimplicialComplex::validate({{"a", "a"}}), input_error);
}

TEST_CASE("f-vector and euler characteristic") {
  auto K = triangle();
  CHECK(K.f_vector() == std::vector<Int>{3, 3, 1});
  CHECK(K.euler_characteristic() == 1);
  CHECK(sphere2().euler_characteristic() == 2);
  CHECK(circle3().euler_characteristic() == 0);
}

TEST_CASE("simplex queries") {
  auto K = triangle();
  auto e = K.simplex_from_names({"a", "c"});
  REQUIRE(e.has_value());
  CHECK(K.has_simplex(*e));
  CHECK_FALSE(K.simplex_from_names({"a", "x"}).has_value());
  CHECK(K.all_simplices().size() == 7);
  CHECK(K.simplices_of_dim(1).size() == 3);
  CHECK(K.deg(*e) == 1);
}

TEST_CASE("barycentric subdivision of the triangle") {
  auto K = triangle();
  auto Kp = barycentric(K);
  CHECK(Kp.f_vector() == std::vector<Int>{7, 12, 6});
  // Barycenters are brace-named and labeled by their member vertices.
  CHECK(Kp.id_of("{a,b,c}").has_value());
  CHECK(Kp.id_of("{a}").has_value());
  auto it = Kp.labels().find("{a,b}");
  REQUIRE(it != Kp.labels().end());
  CHECK(it->second == std::vector<std::string>{"a", "b"});
}

TEST_CASE("iterated subdivision multiplies facets by (d+1)!") {
  auto K = sphere2();
  CHECK(iterated_barycentric(K, 1).facets().size() == 24);
  CHECK(iterated_barycentric(K, 2).facets().size() == 144);
  CHECK(same_complex(iterated_barycentric(K, 0), K));
}

TEST_CASE("degree transfer into the subdivision") {
  // deg_{K'}(b(s)) = (k+1)!(n-k)! deg_K(s) for an n-pseudomanifold.
  auto K = sphere2();
  auto Kp = barycentric(K);
  const int n = K.dim();
  for (const auto& s : K.all_simplices()) {
    int k = static_cast<int>(s.size()) - 1;
    Simplex b{Kp.require_id(brace_name(K.names_of(s)))};
    CHECK(Int(Kp.deg(b)) == factorial(k + 1) * factorial(n - k) * K.deg(s));
  }
}

TEST_CASE("stellar subdivision stars one simplex") {
  auto K = triangle();
  auto st = stellar_subdivide(K, {"a", "b", "c"});
  CHECK(st.new_vertex == "b({a,b,c})#0");
  CHECK(st.complex.facets().size() == 3);
  CHECK(st.complex.vertex_count() == 4);
  auto lab = st.complex.labels().find(st.new_vertex);
  REQUIRE(lab != st.complex.labels().end());
  CHECK(lab->second == std::vector<std::string>{"a", "b", "c"});
  // Starring an edge keeps the untouched facet.
  auto st2 = stellar_subdivide(sphere2(), {"a", "b"});
  CHECK(st2.complex.facets().size() == 6);
  CHECK_THROWS_AS(stellar_subdivide(K, {"a", "x"}), input_error);
}

TEST_CASE("pseudomanifold check distinguishes the standard cases") {
  auto sph = pseudomanifold_check(sphere2());
  CHECK(sph.closed_pseudomanifold());
  CHECK(sph.orientable);
  CHECK(sph.facet_signs.size() == 4);

  auto disk = pseudomanifold_check(triangle());
  CHECK(disk.pure);
  CHECK_FALSE(disk.closed);

  // Projective plane: closed but not orientable.
  auto rp2 = SimplicialComplex::validate(
      {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
       {"1", "2", "6"}, {"2", "3", "5"}, {"3", "4", "6"}, {"2", "4", "5"},
       {"3", "5", "6"}, {"2", "4", "6"}});
  auto r = pseudomanifold_check(rp2);
  CHECK(r.closed_pseudomanifold());
  CHECK_FALSE(r.orientable);

  // Mixed dimensions are not pure.
  auto mixed = SimplicialComplex::validate({{"a", "b", "c"}, {"c", "d"}});
  CHECK_FALSE(pseudomanifold_check(mixed).pure);
}

TEST_CASE("simplicial map validation and composition") {
  auto K = circle3();
  auto f = SimplicialMap::make(K, K, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK(f.image_name("a") == "b");
  auto f2 = f.compose_after(f);
  CHECK(f2.image_name("a") == "c");
  // Into the path a-b-c the identity on names fails: the edge {a,c} has
  // nowhere to go.
  auto path = SimplicialComplex::validate({{"a", "b"}, {"b", "c"}});
  CHECK_NOTHROW(
      SimplicialMap::make(K, path, {{"a", "a"}, {"b", "b"}, {"c", "b"}}));
  CHECK_THROWS_AS(
      SimplicialMap::make(K, path, {{"a", "a"}, {"b", "b"}, {"c", "c"}}),
      input_error);
  CHECK_THROWS_AS(SimplicialMap::make(K, K, {{"a", "b"}}), input_error);
}

TEST_CASE("identity mapping cylinder has (k+1) * f_k facets") {
  auto K = triangle();
  auto mc = mapping_cylinder(SimplicialMap::identity(K));
  CHECK(mc.Z.facets().size() == 3);  // one prism over the single 2-facet
  CHECK(mc.Z.dim() == 3);
  // Source copies are prefixed to avoid the collision with the target.
  CHECK(mc.include_source.image_name("a") == "src:a");
  CHECK(mc.include_target.image_name("a") == "a");
  // p . i = phi and p . j = id.
  auto pi = mc.project.compose_after(mc.include_source);
  auto pj = mc.project.compose_after(mc.include_target);
  for (const auto& v : K.vertex_names()) {
    CHECK(pi.image_name(v) == v);
    CHECK(pj.image_name(v) == v);
  }
}

TEST_CASE("cylinder target end is a full subcomplex") {
  auto K = circle3();
  auto psi = SimplicialMap::make(K, K, {{"a", "a"}, {"b", "a"}, {"c", "c"}});
  auto mc = mapping_cylinder(psi);
  std::set<std::string> tnames;
  for (const auto& v : K.vertex_names()) tnames.insert(v);
  auto sub = induced_subcomplex(mc.Z, tnames);
  CHECK(same_complex(sub, K));
  CHECK(is_full_subcomplex(mc.Z, sub));
}

TEST_CASE("mesh shrink factor") {
  CHECK(mesh_shrink(2, 3) == Rat(Int(8), Int(27)));
  CHECK(mesh_shrink(1, 1) == Rat(Int(1), Int(2)));
  CHECK(mesh_shrink(3, 0) == Rat(Int(1)));
}

TEST_CASE("relabel and prefix") {
  auto K = circle3();
  auto L = relabel(K, {{"a", "x"}});
  CHECK(L.id_of("x").has_value());
  CHECK_FALSE(L.id_of("a").has_value());
  CHECK(same_complex(relabel(L, {{"x", "a"}}), K));
  auto P = prefix_vertices(K, "p:");
  CHECK(P.id_of("p:a").has_value());
  CHECK(P.facets().size() == 3);
  // Colliding names are rejected.
  CHECK_THROWS_AS(relabel(K, {{"a", "b"}}), input_error);
}

TEST_CASE("glue union is associative and commutative") {
  SplitMix64 rng(0x5C0317EDu);
  for (int trial = 0; trial < 40; ++trial) {
    auto A = random_complex(rng, 6);
    auto B = random_complex(rng, 6);
    auto C = random_complex(rng, 6);
    auto left = glue_union(glue_union(A, B), C);
    auto right = glue_union(A, glue_union(B, C));
    CHECK(same_complex(left, right));
    CHECK(same_complex(glue_union(A, B), glue_union(B, A)));
    CHECK(same_complex(glue_union(A, A), A));
  }
}

TEST_CASE("induced subcomplex and fullness") {
  auto K = sphere2();
  auto sub = induced_subcomplex(K, {"a", "b", "c"});
  CHECK(sub.facets().size() == 1);
  CHECK(is_full_subcomplex(K, sub));
  // The hollow triangle on {a,b,c} misses the filled face, so not full.
  auto hollow =
      SimplicialComplex::validate({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK_FALSE(is_full_subcomplex(K, hollow));
}

TEST_CASE("induced barycentric map") {
  auto K = circle3();
  auto f = SimplicialMap::make(K, K, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  auto fp = induced_barycentric_map(f);
  CHECK(fp.image_name("{a}") == "{b}");
  CHECK(fp.image_name("{a,b}") == "{b,c}");
  CHECK(same_complex(fp.source, barycentric(K)));
}
