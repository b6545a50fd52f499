// Acceptance suite: one line per criterion, PASS or FAIL, exit code equal
// to the number of failures. Each criterion re-derives its expectations
// from first principles at run time; nothing is stubbed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "assembly.hpp"
#include "helpers.hpp"

using namespace fpt;
using namespace fpt::testing;

namespace {

int failures = 0;

void report(int idx, bool pass, const std::string& what) {
  std::printf("%s %2d: %s\n", pass ? "PASS" : "FAIL", idx, what.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

void criterion(int idx, const std::string& what,
               const std::function<bool(std::string&)>& body) {
  std::string note;
  bool pass = false;
  try {
    pass = body(note);
  } catch (const std::exception& e) {
    note = std::string("exception: ") + e.what();
  }
  report(idx, pass, what + (note.empty() ? "" : " [" + note + "]"));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// --- criterion 1 ---------------------------------------------------------

bool kun_suite(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  SearchBudget b;
  KunSpace ks = build_kun(b);
  KunReport again = verify_kun(ks.poset, b);
  double dt = seconds_since(t0);
  note = "built and re-verified in " + std::to_string(dt) + "s";
  if (dt >= 600) return false;
  if (!ks.report.all_pass || !again.all_pass) return false;
  // The six named guarantees must each be present and passing.
  const char* needed[] = {"fourteen points",
                          "circle homology",
                          "crown extremes",
                          "fixed point property",
                          "doubling cycle",
                          "crown class doubles the generator"};
  for (const char* n : needed) {
    bool found = false;
    for (const auto& c : again.checks)
      if (c.name == n && c.pass) found = true;
    if (!found) {
      note += "; missing check " + std::string(n);
      return false;
    }
  }
  return true;
}

// --- criterion 2 ---------------------------------------------------------

bool degree_formula_on(const SimplicialComplex& K) {
  const int n = K.dim();
  SimplicialComplex Kp = barycentric(K);
  for (const auto& s : K.all_simplices()) {
    int k = static_cast<int>(s.size()) - 1;
    Simplex b{Kp.require_id(brace_name(K.names_of(s)))};
    if (Int(Kp.deg(b)) != factorial(k + 1) * factorial(n - k) * K.deg(s))
      return false;
  }
  return true;
}

bool degree_formula(std::string& note) {
  bool sphere_ok = degree_formula_on(sphere2());
  bool torus_ok = degree_formula_on(torus7());
  note = std::string("sphere ") + (sphere_ok ? "ok" : "bad") + ", torus " +
         (torus_ok ? "ok" : "bad");
  return sphere_ok && torus_ok;
}

// --- criterion 3 ---------------------------------------------------------

bool norm_calculus(std::string& note) {
  auto tetra = SimplicialComplex::validate({{"a", "b", "c", "d"}});
  auto op = subdivision_operator(tetra);
  for (int k = 0; k <= 3; ++k)
    if (op.lambda.op_norm(k) != factorial(k + 1)) {
      note = "subdivision operator norm off at k=" + std::to_string(k);
      return false;
    }

  SplitMix64 rng(0x0AC3u);
  int made = 0;
  while (made < 100) {
    int nv = 2 + static_cast<int>(rng.next() % 7);  // at most 8 vertices
    std::vector<std::string> verts;
    for (int i = 0; i < nv; ++i) verts.push_back("v" + std::to_string(i));
    std::vector<std::vector<std::string>> facets;
    int nf = 1 + static_cast<int>(rng.next() % (nv + 2));
    for (int f = 0; f < nf; ++f) {
      int sz = 1 + static_cast<int>(rng.next() % std::min(nv, 4));
      std::set<int> pick;
      while (static_cast<int>(pick.size()) < sz)
        pick.insert(static_cast<int>(rng.next() % nv));
      std::vector<std::string> fac;
      for (int i : pick) fac.push_back(verts[i]);
      facets.push_back(fac);
    }
    auto K = SimplicialComplex::validate(facets);
    // Prefer identity-biased random assignments, which yield genuine folds
    // when they validate; fall back to a facet collapse, which always does.
    std::optional<SimplicialMap> phi;
    for (int attempt = 0; attempt < 20 && !phi; ++attempt) {
      std::map<std::string, std::string> assign;
      const auto& names = K.vertex_names();
      for (const auto& v : names)
        assign[v] = rng.next() % 2 == 0 ? v : names[rng.next() % names.size()];
      try {
        phi = SimplicialMap::make(K, K, assign);
      } catch (const input_error&) {
      }
    }
    if (!phi) {
      const auto& target = K.facets()[rng.next() % K.facets().size()];
      std::map<std::string, std::string> assign;
      for (const auto& v : K.vertex_names())
        assign[v] = K.name_of(target[rng.next() % target.size()]);
      phi = SimplicialMap::make(K, K, assign);
    }
    ChainComplex cc(K);
    auto f = induced_chain_map(*phi, cc, cc);
    for (int k = 0; k <= cc.top_dim(); ++k)
      if (f.op_norm(k) > 1) {
        note = "induced map norm above one";
        return false;
      }
    ++made;
  }
  note = "100 random maps within norm";
  return true;
}

// --- criterion 4 ---------------------------------------------------------

bool retraction_laws_on(const SimplicialComplex& K, std::string& note,
                        long long& checked) {
  CylinderRetraction cr = cylinder_retraction(K);
  for (int k = 0; k <= cr.ccZ.top_dim(); ++k) {
    Int bound = factorial(k + 1);
    checked += cr.ccZ.count(k);
    for (int idx = 0; idx < cr.ccZ.count(k); ++idx) {
      Chain unit;
      unit.dim = k;
      unit.add(idx, Int(1));
      Chain rS = cr.r.apply(unit);
      if (k >= 1 &&
          !(cr.ccKp.boundary(rS) == cr.r.apply(cr.ccZ.boundary(unit)))) {
        note = "boundary compatibility failed";
        return false;
      }
      auto names = cr.ccZ.complex().names_of(cr.ccZ.basis(k)[idx]);
      bool in_prime = true, in_coarse = true;
      for (const auto& nm : names) {
        if (!cr.Kprime.id_of(nm)) in_prime = false;
        if (!cr.K.id_of(nm)) in_coarse = false;
      }
      if (in_prime) {
        auto s = cr.Kprime.simplex_from_names(names);
        Chain want;
        want.dim = k;
        if (!s || cr.ccKp.index_of(k, *s) < 0) {
          note = "inclusion image missing";
          return false;
        }
        want.add(cr.ccKp.index_of(k, *s), Int(1));
        if (!(rS == want)) {
          note = "retraction is not the identity on the subdivision";
          return false;
        }
      }
      Int nrm = chain_norm(rS);
      if (nrm > bound) {
        note = "norm bound exceeded in dimension " + std::to_string(k);
        return false;
      }
      if (k >= 1 && nrm == bound && !in_coarse) {
        note = "norm saturated off the coarse end";
        return false;
      }
    }
  }
  return true;
}

bool retraction_laws(std::string& note) {
  long long total = 0;
  for (const auto& K : {circle3(), sphere2(), triangle()})
    if (!retraction_laws_on(K, note, total)) return false;
  note = std::to_string(total) + " cylinder simplices checked";
  return true;
}

// --- criterion 5 ---------------------------------------------------------

bool groups_equal(const HomologyResult& a, const HomologyResult& b) {
  if (a.groups.size() != b.groups.size()) return false;
  for (std::size_t k = 0; k < a.groups.size(); ++k)
    if (a.groups[k].rank != b.groups[k].rank ||
        a.groups[k].torsion != b.groups[k].torsion)
      return false;
  return true;
}

bool homology_regression(std::string& note) {
  struct Row {
    SimplicialComplex K;
    std::vector<Int> betti;
    std::vector<std::vector<Int>> torsion;
    const char* name;
  };
  std::vector<Row> rows = {
      {circle3(), {1, 1}, {{}, {}}, "circle"},
      {sphere2(), {1, 0, 1}, {{}, {}, {}}, "sphere"},
      {torus7(), {1, 2, 1}, {{}, {}, {}}, "torus"},
      {rp2_6(), {1, 0, 0}, {{}, {Int(2)}, {}}, "projective plane"},
  };
  for (const auto& row : rows) {
    auto h = homology(row.K);
    if (h.groups.size() != row.betti.size()) {
      note = std::string(row.name) + ": wrong top dimension";
      return false;
    }
    for (std::size_t k = 0; k < row.betti.size(); ++k)
      if (h.groups[k].rank != row.betti[k] ||
          h.groups[k].torsion != row.torsion[k]) {
        note = std::string(row.name) + ": wrong group at k=" +
               std::to_string(k);
        return false;
      }
    for (int rounds = 1; rounds <= 2; ++rounds)
      if (!groups_equal(h, homology(iterated_barycentric(row.K, rounds)))) {
        note = std::string(row.name) + ": not invariant under " +
               std::to_string(rounds) + " subdivision(s)";
        return false;
      }
  }
  note = "four spaces, each stable under one and two subdivisions";
  return true;
}

// --- criterion 6 ---------------------------------------------------------

bool oracle_agreement(std::string& note) {
  SearchBudget b;
  SplitMix64 rng(0x0DD5C0DEu);
  int poset_trials = 0;
  while (poset_trials < 200) {
    int n = 2 + static_cast<int>(rng.next() % 6);  // at most 7 points
    std::vector<std::string> pts;
    for (int i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> cov;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.next() % 3 == 0) cov.emplace_back(pts[i], pts[j]);
    auto X = FinitePoset::from_covers(pts, cov, true);
    auto fast = fpp_check(X, b);
    auto slow = fpp_check_naive(X, b);
    if (fast.status == CertStatus::inconclusive ||
        fast.status != slow.status) {
      note = "poset disagreement at trial " + std::to_string(poset_trials);
      return false;
    }
    ++poset_trials;
  }

  int complex_trials = 0;
  while (complex_trials < 100) {
    int nv = 2 + static_cast<int>(rng.next() % 5);  // at most 6 vertices
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
    auto K = SimplicialComplex::validate(facets);
    auto fast = fsp_check(K, b);
    auto slow = fsp_check_naive(K, b);
    if (fast.status == CertStatus::inconclusive ||
        fast.status != slow.status) {
      note = "complex disagreement at trial " + std::to_string(complex_trials);
      return false;
    }
    ++complex_trials;
  }
  note = "200 posets and 100 complexes agree";
  return true;
}

// --- criterion 7 ---------------------------------------------------------

bool asymmetrize_sphere(std::string& note) {
  auto t0 = std::chrono::steady_clock::now();
  auto ar = asymmetrize(sphere2());
  // Independent re-checks, not just the returned flags.
  bool strict = ar.apex_degree > ar.runner_up_degree;
  bool asym = is_asymmetric(ar.L);
  auto Lp = barycentric(ar.L);
  auto [dp, atp] = Lp.max_degree();
  bool doubled = Int(dp) == Int(2) * ar.apex_degree && atp.size() == 1 &&
                 Lp.name_of(atp.front()) == brace_name({ar.apex});
  double dt = seconds_since(t0);
  note = "apex " + ar.apex + " degree " + std::to_string(ar.apex_degree) +
         " vs " + std::to_string(ar.runner_up_degree) + ", " +
         std::to_string(dt) + "s";
  return strict && asym && doubled && ar.degree_formula_ok &&
         ar.unique_max_in_prime &&
         ar.certificate.status == CertStatus::holds && dt < 300;
}

// --- criterion 8 ---------------------------------------------------------

bool fsp_instance(std::string& note) {
  auto ar = asymmetrize(sphere2());
  SearchBudget b;
  auto cert = fsp_check(ar.L, b);
  if (cert.status == CertStatus::holds) {
    note = "direct search certificate (" + std::to_string(cert.nodes) +
           " nodes)";
    return true;
  }
  if (cert.status == CertStatus::refuted) {
    note = "refuted, which contradicts the construction";
    return false;
  }
  auto dr = fsp_decomposition_certify(ar.L, ar.apex, b);
  note = "decomposition certificate: " + std::to_string(dr.by_lefschetz) +
         " by trace, " + std::to_string(dr.by_automorphism) +
         " by symmetry";
  return dr.certified;
}

// --- criterion 9 ---------------------------------------------------------

bool thm4_toy(std::string& note) {
  auto K = sphere2();
  auto ar = asymmetrize(K);
  auto phi = unstar_map(ar.L, K);
  auto d = make_realization(2, ar.L, phi, K);
  auto plan = plan_depths(K, {d}, "explicit", {1});
  if (plan.s != std::vector<int>{0, 0, 1}) {
    note = "unexpected depth vector";
    return false;
  }
  if (!plan.buildable) {
    note = "toy plan not buildable: " + plan.detail;
    return false;
  }
  auto a = assemble_thm4(K, {d}, plan);
  auto h = homology(a.L);
  bool groups_ok = h.groups[0].rank == 1 && h.groups[1].rank == 0 &&
                   h.groups[2].rank == 1;
  for (const auto& g : h.groups)
    if (!g.torsion.empty()) groups_ok = false;
  note = "tower of " + std::to_string(a.L.facets().size()) + " facets, " +
         std::to_string(a.registry.size()) + " registered subobjects";
  return a.all_ok() && groups_ok && !a.registry.empty();
}

// --- criterion 10 --------------------------------------------------------

bool main_toy(std::string& note) {
  auto K = circle4();
  auto d = make_realization(1, K, SimplicialMap::identity(K), K);
  auto plan = plan_depths(K, {d}, "explicit", {}, true);
  if (!plan.buildable) {
    note = "plan not buildable: " + plan.detail;
    return false;
  }
  auto ms = assemble_main(K, {d}, plan);
  auto h = homology(ms.X);
  bool circle_ok = h.groups.size() >= 2 && h.groups[0].rank == 1 &&
                   h.groups[1].rank == 1 && h.groups[1].torsion.empty();
  bool one_copy = ms.kun_prefixes.size() == 1;
  bool degree_ok =
      ms.h_degree.size() == 1 &&
      (ms.h_degree[0] == 1 || ms.h_degree[0] == -1);
  note = std::to_string(ms.X.size()) + " points, crown map degree " +
         (ms.h_degree.empty() ? std::string("?")
                              : ms.h_degree[0].str());
  return ms.all_ok() && circle_ok && one_copy && degree_ok;
}

// --- criterion 11 --------------------------------------------------------

bool plan_honesty(std::string& note) {
  auto K = sphere2();
  auto psi = least_vertex_map(K);
  auto d = make_realization(2, psi.source, psi, K);
  auto plan = plan_depths(K, {d}, "bound");
  bool depth_ok = plan.entries.size() == 1 && plan.entries[0].s_k == 11 &&
                  plan.entries[0].N_k == 24;
  bool size_ok = plan.total_facets > Int("1000000000") && !plan.buildable;
  bool refused = false;
  try {
    assemble_thm4(K, {d}, plan);
  } catch (const input_error& e) {
    refused = std::string(e.what()).find("refuses") != std::string::npos;
  }
  note = "s=11, forecast " + plan.total_facets.str() + " facets";
  return depth_ok && size_ok && refused;
}

}  // namespace

int main() {
  criterion(1, "14-point model: build, verify all named checks", kun_suite);
  criterion(2, "degree transfer formula exact on sphere and torus",
            degree_formula);
  criterion(3, "subdivision operator norms and induced map contraction",
            norm_calculus);
  criterion(4, "cylinder retraction laws exhaustive on the three complexes",
            retraction_laws);
  criterion(5, "homology regression and subdivision invariance",
            homology_regression);
  criterion(6, "pruned searches agree with naive enumeration",
            oracle_agreement);
  criterion(7, "asymmetrization of the sphere with degree certificate",
            asymmetrize_sphere);
  criterion(8, "asymmetrized sphere: fixed simplex certificate, never inconclusive",
            fsp_instance);
  criterion(9, "toy tower pipeline preserves homology with verified retraction",
            thm4_toy);
  criterion(10, "toy main pipeline attaches one model copy at degree one",
            main_toy);
  criterion(11, "bound-mode plan reports depth 11 and refuses the build",
            plan_honesty);
  if (failures == 0)
    std::printf("all 11 criteria hold\n");
  else
    std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
