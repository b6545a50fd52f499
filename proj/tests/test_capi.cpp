// Exercises the shared-library surface through the C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "fpt/fpt.h"

namespace {

const char* kCircleComplex =
    R"({"facets": [["a","b"],["b","c"],["a","c"]]})";
const char* kTriangle = R"({"facets": [["a","b","c"]]})";
const char* kCrownPoset = R"({"points": ["a0","a1","b0","b1"],
  "covers": [["a0","b0"],["a0","b1"],["a1","b0"],["a1","b1"]]})";

struct Str {
  char* p = nullptr;
  ~Str() { fpt_string_free(p); }
  std::string view() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("version is a static string") {
  const char* v = fpt_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) > 0);
  CHECK(v == fpt_version());
}

TEST_CASE("complex parse, query, serialize") {
  Str err;
  fpt_complex* K = fpt_complex_parse(kCircleComplex, &err.p);
  REQUIRE(K != nullptr);
  CHECK(fpt_complex_dim(K) == 1);
  CHECK(fpt_complex_vertex_count(K) == 3);
  CHECK(fpt_complex_facet_count(K) == 3);
  Str text;
  text.p = fpt_complex_to_json(K);
  REQUIRE(text.p != nullptr);
  CHECK(text.view().back() == '\n');
  // The canonical text parses back to an equal complex.
  fpt_complex* K2 = fpt_complex_parse(text.p, nullptr);
  REQUIRE(K2 != nullptr);
  CHECK(fpt_complex_facet_count(K2) == 3);
  fpt_complex_free(K2);
  fpt_complex_free(K);
}

TEST_CASE("parse failures set the error string") {
  Str err;
  CHECK(fpt_complex_parse("{\"facets\": [[\"a\",]}", &err.p) == nullptr);
  REQUIRE(err.p != nullptr);
  CHECK(err.view().size() > 0);
  Str err2;
  CHECK(fpt_complex_parse(kCrownPoset, &err2.p) == nullptr);
  REQUIRE(err2.p != nullptr);
  Str err3;
  CHECK(fpt_poset_parse(kTriangle, 0, &err3.p) == nullptr);
  CHECK(fpt_complex_parse(nullptr, nullptr) == nullptr);
}

TEST_CASE("null handles are inert") {
  CHECK(fpt_complex_dim(nullptr) == -1);
  CHECK(fpt_complex_vertex_count(nullptr) == 0);
  CHECK(fpt_poset_point_count(nullptr) == 0);
  CHECK(fpt_complex_to_json(nullptr) == nullptr);
  CHECK(fpt_complex_subdivide(nullptr, 1) == nullptr);
  CHECK(fpt_poset_core(nullptr) == nullptr);
  fpt_complex_free(nullptr);
  fpt_poset_free(nullptr);
  fpt_string_free(nullptr);
}

TEST_CASE("subdivision and functors through the C surface") {
  fpt_complex* K = fpt_complex_parse(kTriangle, nullptr);
  REQUIRE(K != nullptr);
  fpt_complex* K1 = fpt_complex_subdivide(K, 1);
  REQUIRE(K1 != nullptr);
  CHECK(fpt_complex_vertex_count(K1) == 7);
  CHECK(fpt_complex_facet_count(K1) == 6);

  fpt_poset* X = fpt_complex_face_poset(K);
  REQUIRE(X != nullptr);
  CHECK(fpt_poset_point_count(X) == 7);
  // The face poset of a cone has a maximum, so its core is a point.
  fpt_poset* C = fpt_poset_core(X);
  REQUIRE(C != nullptr);
  CHECK(fpt_poset_point_count(C) == 1);
  fpt_complex* OC = fpt_poset_order_complex(X);
  REQUIRE(OC != nullptr);
  CHECK(fpt_complex_facet_count(OC) == 6);

  fpt_complex_free(OC);
  fpt_poset_free(C);
  fpt_poset_free(X);
  fpt_complex_free(K1);
  fpt_complex_free(K);
}

TEST_CASE("property checks return exit-style codes") {
  fpt_poset* X = fpt_poset_parse(kCrownPoset, 0, nullptr);
  REQUIRE(X != nullptr);
  Str rep;
  CHECK(fpt_poset_fpp(X, 0, &rep.p) == FPT_REFUTED);
  REQUIRE(rep.p != nullptr);
  CHECK(rep.view().find("refuted") != std::string::npos);
  CHECK(fpt_poset_fpp(X, 1, nullptr) == FPT_INCONCLUSIVE);
  fpt_poset_free(X);

  fpt_complex* K = fpt_complex_parse(kTriangle, nullptr);
  REQUIRE(K != nullptr);
  Str rep2;
  CHECK(fpt_complex_fsp(K, 0, &rep2.p) == FPT_OK);
  CHECK(rep2.view().find("holds") != std::string::npos);
  fpt_complex_free(K);
  CHECK(fpt_poset_fpp(nullptr, 0, nullptr) == FPT_INPUT_ERROR);
}

TEST_CASE("dispatch through the C boundary") {
  namespace fs = std::filesystem;
  fs::path dir =
      fs::temp_directory_path() / ("fpt-capi-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  fs::path file = dir / "c.scx";
  {
    std::ofstream out(file);
    out << kCircleComplex;
  }
  std::string fstr = file.string();
  const char* argv1[] = {"homology", fstr.c_str()};
  char* report = nullptr;
  char* human = nullptr;
  int code = fpt_dispatch(2, argv1, &report, &human);
  CHECK(code == FPT_OK);
  REQUIRE(report != nullptr);
  REQUIRE(human != nullptr);
  std::string rep(report);
  CHECK(rep.front() == '{');
  CHECK(rep.back() == '\n');
  CHECK(rep.find("\"betti\"") != std::string::npos);
  CHECK(std::string(human).find("betti") != std::string::npos);
  fpt_string_free(report);
  fpt_string_free(human);

  // Errors map to the documented codes; output pointers stay optional.
  const char* argv2[] = {"homology", "/no/such/file"};
  CHECK(fpt_dispatch(2, argv2, nullptr, nullptr) == FPT_INPUT_ERROR);
  const char* argv3[] = {"definitely-not-a-command"};
  CHECK(fpt_dispatch(1, argv3, nullptr, nullptr) == FPT_INPUT_ERROR);

  std::error_code ec;
  fs::remove_all(dir, ec);
}
