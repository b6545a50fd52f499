#include "dispatch.hpp"

#include <CLI11.hpp>

#include "report.hpp"

namespace fpt {

namespace {

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kInput = 2;
constexpr int kInconclusive = 3;
constexpr int kInternal = 4;

int cert_code(const Certificate& c) {
  switch (c.status) {
    case CertStatus::holds:
      return kOk;
    case CertStatus::refuted:
      return kRefuted;
    default:
      return kInconclusive;
  }
}

std::string status_word(CertStatus s) {
  return s == CertStatus::holds     ? "holds"
         : s == CertStatus::refuted ? "refuted"
                                    : "inconclusive";
}

json fvec_json(const SimplicialComplex& K) {
  json out = json::array();
  for (const auto& v : K.f_vector()) out.push_back(int_to_json(v));
  return out;
}

json complex_summary(const SimplicialComplex& K) {
  return {{"dim", K.dim()},
          {"vertices", K.vertex_count()},
          {"facets", K.facets().size()},
          {"f_vector", fvec_json(K)}};
}

json name_map_json(const std::map<std::string, std::string>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[k] = v;
  return out;
}

json omega_json(const std::map<std::pair<std::string, std::string>, Int>& w) {
  json out = json::array();
  for (const auto& [cov, val] : w)
    out.push_back({{"lower", cov.first},
                   {"upper", cov.second},
                   {"weight", int_to_json(val)}});
  return out;
}

// Exhaustive verification of the retraction laws on every cylinder simplex:
// boundary compatibility, identity on the subdivision, norm bounds, and the
// rule that only simplices of the coarse end attain the bound.
json retraction_laws(const CylinderRetraction& cr) {
  bool chain_rule = true, identity = true, norms = true, equality = true;
  long long checked = 0;
  for (int k = 0; k <= cr.ccZ.top_dim(); ++k) {
    Int bound = factorial(k + 1);
    for (int idx = 0; idx < cr.ccZ.count(k); ++idx) {
      ++checked;
      Chain unit;
      unit.dim = k;
      unit.add(idx, Int(1));
      Chain rS = cr.r.apply(unit);
      if (k >= 1) {
        Chain lhs = cr.ccKp.boundary(rS);
        Chain rhs = cr.r.apply(cr.ccZ.boundary(unit));
        if (!(lhs == rhs)) chain_rule = false;
      }
      auto names = cr.ccZ.complex().names_of(cr.ccZ.basis(k)[idx]);
      bool in_prime = true, in_coarse = true;
      for (const auto& nm : names) {
        if (!cr.Kprime.id_of(nm)) in_prime = false;
        if (!cr.K.id_of(nm)) in_coarse = false;
      }
      if (in_prime) {
        auto s = cr.Kprime.simplex_from_names(names);
        int pi = s ? cr.ccKp.index_of(k, *s) : -1;
        Chain want;
        want.dim = k;
        if (pi >= 0) want.add(pi, Int(1));
        if (pi < 0 || !(rS == want)) identity = false;
      }
      Int nrm = chain_norm(rS);
      if (nrm > bound) norms = false;
      if (k >= 1 && nrm == bound && !in_coarse) equality = false;
    }
  }
  return {{"checked_simplices", checked},
          {"boundary_compatible", chain_rule},
          {"identity_on_subdivision", identity},
          {"norm_bounds", norms},
          {"equality_only_on_coarse_end", equality},
          {"all", chain_rule && identity && norms && equality}};
}

KunSpace kun_from_poset(const FinitePoset& X, const SearchBudget& budget) {
  KunSpace ks;
  ks.poset = X;
  ks.crown = {"x", "y", "z", "w"};
  ks.crown_prime = {"x'", "y'", "z'", "w'"};
  ks.report = verify_kun(X, budget);
  if (!ks.report.all_pass)
    throw input_error("supplied model fails verification: " +
                      ks.report.failing());
  ks.omega = solve_degree_weights(X);
  return ks;
}

struct Options {
  std::string file;
  std::string out_path;
  std::string space_path;
  std::string map_path;
  std::string complex_path;
  std::string realizations_path;
  std::string kun_path;
  std::string mode = "bound";
  std::vector<std::string> order;
  std::vector<int> depths;
  long long ceiling = 2000000;
  int rounds = 1;
  int dim = 1;
  long long norm_bound = 2;
  bool repair = false;
  bool reduced = false;
  bool with_generators = false;
  bool check_laws = false;
  bool witness = false;
  bool naive = false;
  bool decompose = false;
  bool certify = false;
};

}  // namespace

DispatchResult dispatch(const std::vector<std::string>& args) {
  DispatchResult res;
  CLI::App app{"finite complexes, finite posets, and fixed point certification"};
  app.require_subcommand(1);

  long long budget_nodes = 50000000;
  int jobs = 1;
  bool seedless = false;
  app.add_option("--budget", budget_nodes, "search node budget")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "parallel workers for searches")
      ->capture_default_str();
  app.add_flag("--seedless", seedless,
               "assert fully deterministic operation (always the case)");

  Options o;
  InputTracker tr;
  json report;
  std::vector<std::string> human;
  int code = kOk;

  auto budget = [&]() {
    SearchBudget b;
    b.max_nodes = budget_nodes;
    b.jobs = jobs;
    return b;
  };
  auto maybe_write = [&](const json& doc) {
    if (!o.out_path.empty()) write_file(o.out_path, doc.dump(2) + "\n");
  };

  // validate
  {
    auto* c = app.add_subcommand(
        "validate", "parse a complex or poset file, report canonical form");
    c->add_option("file", o.file, "input file")->required();
    c->add_flag("--repair", o.repair,
                "drop transitively implied covers in poset files");
    c->callback([&] {
      json j = parse_json_text(tr.slurp(o.file), o.file);
      json result;
      if (is_complex_json(j)) {
        SimplicialComplex K = complex_from_json(j);
        result = complex_summary(K);
        result["type"] = "complex";
        result["canonical"] = complex_to_json(K);
        human.push_back("complex: " + std::to_string(K.vertex_count()) +
                        " vertices, " + std::to_string(K.facets().size()) +
                        " facets, dim " + std::to_string(K.dim()));
      } else if (is_poset_json(j)) {
        FinitePoset X = poset_from_json(j, o.repair);
        result = {{"type", "poset"},
                  {"points", X.size()},
                  {"covers", X.covers().size()},
                  {"canonical", poset_to_json(X)}};
        human.push_back("poset: " + std::to_string(X.size()) + " points, " +
                        std::to_string(X.covers().size()) + " covers");
      } else {
        throw input_error(o.file + ": neither a complex nor a poset file");
      }
      report = make_report("validate", tr, result);
    });
  }

  // subdivide
  {
    auto* c = app.add_subcommand("subdivide",
                                 "iterated barycentric subdivision");
    c->add_option("file", o.file, "complex file")->required();
    c->add_option("--rounds", o.rounds, "number of rounds")
        ->capture_default_str();
    c->add_option("-o,--output", o.out_path, "write the result here");
    c->callback([&] {
      SimplicialComplex K = load_complex(o.file, tr);
      SimplicialComplex Ks = iterated_barycentric(K, o.rounds);
      json result = complex_summary(Ks);
      result["rounds"] = o.rounds;
      result["complex"] = complex_to_json(Ks);
      maybe_write(complex_to_json(Ks));
      human.push_back("subdivided " + std::to_string(o.rounds) + "x: " +
                      std::to_string(Ks.vertex_count()) + " vertices, " +
                      std::to_string(Ks.facets().size()) + " facets");
      report = make_report("subdivide", tr, result);
    });
  }

  // face-poset
  {
    auto* c = app.add_subcommand("face-poset",
                                 "simplices of a complex ordered by inclusion");
    c->add_option("file", o.file, "complex file")->required();
    c->add_option("-o,--output", o.out_path, "write the poset here");
    c->callback([&] {
      SimplicialComplex K = load_complex(o.file, tr);
      FinitePoset X = face_poset(K);
      json result = {{"points", X.size()},
                     {"covers", X.covers().size()},
                     {"poset", poset_to_json(X)}};
      maybe_write(poset_to_json(X));
      human.push_back("face poset: " + std::to_string(X.size()) + " points");
      report = make_report("face-poset", tr, result);
    });
  }

  // order-complex
  {
    auto* c = app.add_subcommand("order-complex",
                                 "complex of chains of a poset");
    c->add_option("file", o.file, "poset file")->required();
    c->add_option("-o,--output", o.out_path, "write the complex here");
    c->callback([&] {
      FinitePoset X = load_poset(o.file, tr);
      SimplicialComplex K = order_complex(X);
      json result = complex_summary(K);
      result["complex"] = complex_to_json(K);
      maybe_write(complex_to_json(K));
      human.push_back("order complex: " + std::to_string(K.vertex_count()) +
                      " vertices, dim " + std::to_string(K.dim()));
      report = make_report("order-complex", tr, result);
    });
  }

  // cylinder
  {
    auto* c = app.add_subcommand("cylinder", "simplicial mapping cylinder");
    c->add_option("--map", o.map_path, "map file")->required();
    c->add_option("--order", o.order,
                  "total order on source vertices (default lexicographic)")
        ->delimiter(',');
    c->add_option("-o,--output", o.out_path, "write the cylinder here");
    c->callback([&] {
      LoadedMap lm = load_map(o.map_path, tr);
      if (!lm.simplicial)
        throw input_error("cylinder expects a simplicial map file");
      MappingCylinder mc = mapping_cylinder(lm.smap, o.order);
      json result = complex_summary(mc.Z);
      result["complex"] = complex_to_json(mc.Z);
      result["source_inclusion"] = name_map_json(mc.include_source.assign_by_name());
      maybe_write(complex_to_json(mc.Z));
      human.push_back("cylinder: " + std::to_string(mc.Z.vertex_count()) +
                      " vertices, " + std::to_string(mc.Z.facets().size()) +
                      " facets");
      report = make_report("cylinder", tr, result);
    });
  }

  // nh-cylinder
  {
    auto* c = app.add_subcommand(
        "nh-cylinder", "non-Hausdorff mapping cylinder of a monotone map");
    c->add_option("--map", o.map_path, "map file")->required();
    c->add_option("-o,--output", o.out_path, "write the poset here");
    c->callback([&] {
      LoadedMap lm = load_map(o.map_path, tr);
      if (lm.simplicial)
        throw input_error("nh-cylinder expects a monotone map file");
      NonHausdorffCylinder b = nh_cylinder(lm.mmap);
      json result = {{"points", b.B.size()},
                     {"poset", poset_to_json(b.B)},
                     {"source_inclusion",
                      name_map_json(b.include_source.assign_by_name())}};
      maybe_write(poset_to_json(b.B));
      human.push_back("cylinder poset: " + std::to_string(b.B.size()) +
                      " points");
      report = make_report("nh-cylinder", tr, result);
    });
  }

  // homology
  {
    auto* c = app.add_subcommand(
        "homology", "integer homology of a complex or poset order complex");
    c->add_option("file", o.file, "complex or poset file")->required();
    c->add_flag("--reduced", o.reduced, "reduced homology");
    c->add_flag("--with-generators", o.with_generators,
                "include generator chains");
    c->callback([&] {
      json j = parse_json_text(tr.slurp(o.file), o.file);
      SimplicialComplex K;
      if (is_complex_json(j)) {
        K = complex_from_json(j);
      } else if (is_poset_json(j)) {
        K = order_complex(poset_from_json(j));
      } else {
        throw input_error(o.file + ": neither a complex nor a poset file");
      }
      ChainComplex cc(K);
      HomologyResult h = homology(cc, o.reduced, o.with_generators);
      json result = homology_to_json(h, o.with_generators ? &cc : nullptr);
      std::string betti;
      for (const auto& g : h.groups)
        betti += (betti.empty() ? "" : ",") + g.rank.str();
      human.push_back("betti (" + betti + ")");
      report = make_report("homology", tr, result);
    });
  }

  // lefschetz
  {
    auto* c = app.add_subcommand("lefschetz",
                                 "Lefschetz number of a self-map");
    c->add_option("--space", o.space_path, "complex or poset file")
        ->required();
    c->add_option("--map", o.map_path, "self-map file")->required();
    c->callback([&] {
      json sj = parse_json_text(tr.slurp(o.space_path), o.space_path);
      LoadedMap lm = load_map(o.map_path, tr);
      Rat lambda;
      if (is_complex_json(sj)) {
        SimplicialComplex K = complex_from_json(sj);
        if (!lm.simplicial || !same_complex(lm.smap.source, K) ||
            !same_complex(lm.smap.target, K))
          throw input_error("map is not a simplicial self-map of the space");
        lambda = lefschetz_number(lm.smap);
      } else if (is_poset_json(sj)) {
        FinitePoset X = poset_from_json(sj);
        if (lm.simplicial || !(lm.mmap.source == X) || !(lm.mmap.target == X))
          throw input_error("map is not a monotone self-map of the space");
        lambda = lefschetz_number(lm.mmap);
      } else {
        throw input_error(o.space_path + ": neither a complex nor a poset");
      }
      json result = {{"lefschetz", rat_to_json(lambda)},
                     {"nonzero", lambda != Rat(0)}};
      human.push_back("lefschetz number " +
                      rat_to_json(lambda).dump());
      report = make_report("lefschetz", tr, result);
    });
  }

  // cycles
  {
    auto* c = app.add_subcommand(
        "cycles", "enumerate cycles up to a norm bound, canonical signs");
    c->add_option("file", o.file, "complex or poset file")->required();
    c->add_option("--dim", o.dim, "cycle dimension")->required();
    c->add_option("--norm-bound", o.norm_bound, "maximum chain norm")
        ->required();
    c->callback([&] {
      json j = parse_json_text(tr.slurp(o.file), o.file);
      SimplicialComplex K;
      if (is_complex_json(j)) {
        K = complex_from_json(j);
      } else if (is_poset_json(j)) {
        K = order_complex(poset_from_json(j));
      } else {
        throw input_error(o.file + ": neither a complex nor a poset file");
      }
      ChainComplex cc(K);
      std::vector<Chain> zs =
          enumerate_cycles(cc, o.dim, Int(o.norm_bound), budget());
      json list = json::array();
      for (const auto& z : zs) list.push_back(chain_to_json(cc, z));
      json result = {{"dim", o.dim},
                     {"norm_bound", o.norm_bound},
                     {"count", zs.size()},
                     {"cycles", list}};
      human.push_back(std::to_string(zs.size()) + " cycles of norm <= " +
                      std::to_string(o.norm_bound));
      report = make_report("cycles", tr, result);
    });
  }

  // retraction
  {
    auto* c = app.add_subcommand(
        "retraction",
        "cylinder retraction onto the barycentric subdivision");
    c->add_option("--complex", o.complex_path, "complex file")->required();
    c->add_flag("--check-laws,--check-lemma3", o.check_laws,
                "exhaustively verify the retraction laws");
    c->callback([&] {
      SimplicialComplex K = load_complex(o.complex_path, tr);
      CylinderRetraction cr = cylinder_retraction(K);
      json norms = json::array();
      for (int k = 0; k <= cr.ccZ.top_dim(); ++k)
        norms.push_back({{"dim", k},
                         {"op_norm", int_to_json(cr.r.op_norm(k))},
                         {"bound", int_to_json(factorial(k + 1))}});
      json result = {{"cylinder", complex_summary(cr.cyl.Z)},
                     {"subdivision", complex_summary(cr.Kprime)},
                     {"vertex_map", name_map_json(cr.psi.assign_by_name())},
                     {"norms", norms}};
      if (o.check_laws) {
        json laws = retraction_laws(cr);
        result["laws"] = laws;
        if (!laws["all"].get<bool>()) code = kRefuted;
        human.push_back(std::string("retraction laws ") +
                        (laws["all"].get<bool>() ? "verified" : "VIOLATED"));
      } else {
        human.push_back("retraction built; rerun with --check-laws to verify");
      }
      report = make_report("retraction", tr, result);
    });
  }

  // aut
  {
    auto* c = app.add_subcommand("aut",
                                 "automorphism group, listed exhaustively");
    c->add_option("file", o.file, "complex or poset file")->required();
    c->callback([&] {
      json j = parse_json_text(tr.slurp(o.file), o.file);
      json result;
      if (is_complex_json(j)) {
        SimplicialComplex K = complex_from_json(j);
        auto auts = automorphisms(K);
        json list = json::array();
        for (const auto& a : auts) {
          json m = json::object();
          for (std::size_t v = 0; v < a.size(); ++v)
            m[K.name_of(static_cast<VertexId>(v))] = K.name_of(a[v]);
          list.push_back(m);
        }
        json fixed = json::array();
        for (VertexId v : universally_fixed(K)) fixed.push_back(K.name_of(v));
        result = {{"type", "complex"},
                  {"count", auts.size()},
                  {"automorphisms", list},
                  {"universally_fixed", fixed},
                  {"asymmetric", is_asymmetric(K)}};
        human.push_back(std::to_string(auts.size()) + " automorphisms; " +
                        (is_asymmetric(K) ? "asymmetric" : "not asymmetric"));
      } else if (is_poset_json(j)) {
        FinitePoset X = poset_from_json(j);
        auto auts = automorphisms(X);
        json list = json::array();
        for (const auto& a : auts) {
          json m = json::object();
          for (std::size_t p = 0; p < a.size(); ++p)
            m[X.name_of(static_cast<PointId>(p))] = X.name_of(a[p]);
          list.push_back(m);
        }
        result = {{"type", "poset"},
                  {"count", auts.size()},
                  {"automorphisms", list}};
        human.push_back(std::to_string(auts.size()) + " automorphisms");
      } else {
        throw input_error(o.file + ": neither a complex nor a poset file");
      }
      report = make_report("aut", tr, result);
    });
  }

  // asymmetrize
  {
    auto* c = app.add_subcommand(
        "asymmetrize",
        "star facets at a max-degree vertex until no symmetry moves it");
    c->add_option("file", o.file, "complex file")->required();
    c->add_option("-o,--output", o.out_path, "write the result here");
    c->add_flag("--certify", o.certify,
                "include the exhaustive asymmetry certificate");
    c->callback([&] {
      SimplicialComplex M = load_complex(o.file, tr);
      AsymmetrizeResult ar = asymmetrize(M);
      json result = complex_summary(ar.L);
      result["complex"] = complex_to_json(ar.L);
      result["apex"] = ar.apex;
      result["passes"] = ar.passes;
      result["apex_degree"] = ar.apex_degree;
      result["runner_up_degree"] = ar.runner_up_degree;
      result["degree_formula_ok"] = ar.degree_formula_ok;
      result["unique_max_in_prime"] = ar.unique_max_in_prime;
      result["passes_all"] = ar.passes > 0 && ar.certificate.status ==
                                                  CertStatus::holds;
      if (o.certify)
        result["certificate"] = certificate_to_json(ar.certificate, true);
      maybe_write(complex_to_json(ar.L));
      bool ok = ar.certificate.status == CertStatus::holds &&
                ar.degree_formula_ok && ar.unique_max_in_prime;
      if (!ok) code = kRefuted;
      human.push_back("apex " + ar.apex + ", degree " +
                      std::to_string(ar.apex_degree) + " vs " +
                      std::to_string(ar.runner_up_degree) + ", " +
                      status_word(ar.certificate.status));
      report = make_report("asymmetrize", tr, result);
    });
  }

  // fsp
  {
    auto* c = app.add_subcommand(
        "fsp", "exhaustive fixed simplex property check");
    c->add_option("file", o.file, "complex file")->required();
    c->add_flag("--witness", o.witness, "include the witness map");
    c->add_flag("--naive", o.naive, "use the unpruned reference search");
    c->add_flag("--decompose", o.decompose,
                "fall back to the per-map certificate when the search "
                "exceeds its budget");
    c->callback([&] {
      SimplicialComplex K = load_complex(o.file, tr);
      Certificate cert =
          o.naive ? fsp_check_naive(K, budget()) : fsp_check(K, budget());
      json result = certificate_to_json(cert, true);
      code = cert_code(cert);
      if (cert.status == CertStatus::inconclusive && o.decompose) {
        auto [dmax, vlist] = K.max_degree();
        (void)dmax;
        std::string apex = vlist.empty() ? "" : K.name_of(vlist.front());
        DecompositionReport dr = fsp_decomposition_certify(K, apex, budget());
        result["decomposition"] = {{"certified", dr.certified},
                                   {"maps_total", dr.maps_total},
                                   {"by_lefschetz", dr.by_lefschetz},
                                   {"by_automorphism", dr.by_automorphism},
                                   {"uncertified_map", dr.uncertified_map},
                                   {"nodes", dr.nodes}};
        if (dr.certified) {
          code = kOk;
          result["status"] = "holds";
          result["detail"] = "certified map-by-map decomposition";
        }
      }
      json witnesses;
      if (o.witness && !cert.witness.empty())
        witnesses = name_map_json(cert.witness);
      human.push_back("fixed simplex property " +
                      result["status"].get<std::string>());
      report = make_report("fsp", tr, result, witnesses,
                           json{{"nodes", cert.nodes}});
    });
  }

  // fpp
  {
    auto* c = app.add_subcommand(
        "fpp", "exhaustive fixed point property check");
    c->add_option("file", o.file, "poset file")->required();
    c->add_flag("--witness", o.witness, "include the witness map");
    c->add_flag("--naive", o.naive, "use the unpruned reference search");
    c->callback([&] {
      FinitePoset X = load_poset(o.file, tr);
      Certificate cert =
          o.naive ? fpp_check_naive(X, budget()) : fpp_check(X, budget());
      json result = certificate_to_json(cert, true);
      code = cert_code(cert);
      json witnesses;
      if (o.witness && !cert.witness.empty())
        witnesses = name_map_json(cert.witness);
      human.push_back("fixed point property " + status_word(cert.status));
      report = make_report("fpp", tr, result, witnesses,
                           json{{"nodes", cert.nodes}});
    });
  }

  // kun
  {
    auto* c = app.add_subcommand(
        "kun", "the 14-point circle-like space with the fixed point property");
    c->require_subcommand(1);
    auto* cb = c->add_subcommand("build",
                                 "search the gluing family and verify");
    cb->add_option("-o,--output", o.out_path, "write the poset here");
    cb->callback([&] {
      KunSpace ks = build_kun(budget());
      json result = {{"poset", poset_to_json(ks.poset)},
                     {"candidate", ks.candidate},
                     {"surveyed", ks.surveyed},
                     {"omega", omega_json(ks.omega)},
                     {"verification", kun_report_to_json(ks.report)}};
      maybe_write(poset_to_json(ks.poset));
      human.push_back("model found at candidate " +
                      std::to_string(ks.candidate) + "; all checks pass");
      report = make_report("kun build", tr, result);
    });
    auto* cv = c->add_subcommand("verify", "run every check on a poset file");
    cv->add_option("file", o.file, "poset file")->required();
    cv->callback([&] {
      FinitePoset X = load_poset(o.file, tr);
      KunReport kr = verify_kun(X, budget());
      json result = kun_report_to_json(kr);
      result["omega"] = omega_json(solve_degree_weights(X));
      if (!kr.all_pass) code = kRefuted;
      human.push_back(kr.all_pass ? "all checks pass"
                                  : "failing: " + kr.failing());
      report = make_report("kun verify", tr, result);
    });
  }

  // thm4 / main-thm shared logic
  auto add_pipeline = [&](const std::string& name, bool for_main) {
    auto* c = app.add_subcommand(
        name, for_main ? "full pipeline: tower plus attached models"
                       : "tower pipeline over a base complex");
    c->require_subcommand(1);
    auto configure = [&](CLI::App* sc, bool with_output) {
      sc->add_option("--complex", o.complex_path, "base complex file")
          ->required();
      sc->add_option("--realizations", o.realizations_path,
                     "realization list file")
          ->required();
      sc->add_option("--mode", o.mode, "bound | toy")->capture_default_str();
      sc->add_option("--depths", o.depths,
                     "toy mode depths s_2..s_n, comma separated")
          ->delimiter(',');
      sc->add_option("--ceiling", o.ceiling, "facet forecast ceiling")
          ->capture_default_str();
      if (with_output)
        sc->add_option("-o,--output", o.out_path, "write the result here");
    };
    auto make_plan = [&, for_main]() {
      SimplicialComplex K = load_complex(o.complex_path, tr);
      auto data = load_realizations(o.realizations_path, K, tr);
      std::string mode = o.mode;
      if (mode == "toy") mode = "explicit";
      if (mode != "bound" && mode != "explicit")
        throw input_error("mode must be 'bound' or 'toy'");
      DepthPlan plan = plan_depths(K, data, mode, o.depths, for_main,
                                   Int(o.ceiling), budget());
      return std::make_tuple(std::move(K), std::move(data), std::move(plan));
    };
    auto* cp = c->add_subcommand("plan", "compute depths and size forecasts");
    configure(cp, false);
    cp->callback([&, name, make_plan] {
      auto [K, data, plan] = make_plan();
      (void)K;
      (void)data;
      report = make_report(name + " plan", tr, plan_to_json(plan));
      human.push_back(plan.detail);
    });
    auto* cb = c->add_subcommand("build", "assemble and check the space");
    configure(cb, true);
    if (for_main)
      cb->add_option("--kun", o.kun_path,
                     "verified 14-point model file to reuse");
    cb->callback([&, name, make_plan, for_main] {
      auto [K, data, plan] = make_plan();
      if (!for_main) {
        AssembledSpace a = assemble_thm4(K, data, plan, budget());
        json result = {{"plan", plan_to_json(plan)},
                       {"space", assembled_to_json(a)}};
        maybe_write(complex_to_json(a.L));
        if (!a.all_ok()) code = kRefuted;
        human.push_back("tower built: " +
                        std::to_string(a.L.facets().size()) + " facets; " +
                        (a.all_ok() ? "all checks pass" : "CHECKS FAILED"));
        report = make_report(name + " build", tr, result);
      } else {
        KunSpace pre;
        const KunSpace* prep = nullptr;
        if (!o.kun_path.empty()) {
          pre = kun_from_poset(load_poset(o.kun_path, tr), budget());
          prep = &pre;
        }
        MainSpace ms = assemble_main(K, data, plan, budget(), prep);
        json degs = json::array();
        for (const auto& d : ms.h_degree) degs.push_back(int_to_json(d));
        json result = {{"plan", plan_to_json(plan)},
                       {"base", assembled_to_json(ms.base)},
                       {"points", ms.X.size()},
                       {"model_copies", ms.kun_prefixes},
                       {"crown_map_degrees", degs},
                       {"homology_ok", ms.homology_ok},
                       {"copies_ok", ms.copies_ok},
                       {"degrees_ok", ms.degrees_ok},
                       {"all_ok", ms.all_ok()},
                       {"poset", poset_to_json(ms.X)},
                       {"log", ms.log}};
        maybe_write(poset_to_json(ms.X));
        if (!ms.all_ok()) code = kRefuted;
        human.push_back("space built: " + std::to_string(ms.X.size()) +
                        " points; " +
                        (ms.all_ok() ? "all checks pass" : "CHECKS FAILED"));
        report = make_report(name + " build", tr, result);
      }
    });
  };
  add_pipeline("thm4", false);
  add_pipeline("main-thm", true);

  // core
  {
    auto* c = app.add_subcommand("core",
                                 "remove beat points until none remain");
    c->add_option("file", o.file, "poset file")->required();
    c->add_option("-o,--output", o.out_path, "write the core here");
    c->callback([&] {
      FinitePoset X = load_poset(o.file, tr);
      FinitePoset C = core(X);
      json result = {{"points_before", X.size()},
                     {"points_after", C.size()},
                     {"contractible_by_dismantling", C.size() == 1},
                     {"poset", poset_to_json(C)}};
      maybe_write(poset_to_json(C));
      human.push_back("core: " + std::to_string(X.size()) + " -> " +
                      std::to_string(C.size()) + " points");
      report = make_report("core", tr, result);
    });
  }

  // weak-points
  {
    auto* c = app.add_subcommand("weak-points",
                                 "beat points and weak points of a poset");
    c->add_option("file", o.file, "poset file")->required();
    c->callback([&] {
      FinitePoset X = load_poset(o.file, tr);
      json weak = json::array(), beat = json::array();
      for (PointId p = 0; p < static_cast<PointId>(X.size()); ++p)
        if (is_weak_point(X, p)) weak.push_back(X.name_of(p));
      for (PointId p : beat_points(X)) beat.push_back(X.name_of(p));
      json result = {{"weak_points", weak}, {"beat_points", beat}};
      human.push_back(std::to_string(weak.size()) + " weak points, " +
                      std::to_string(beat.size()) + " beat points");
      report = make_report("weak-points", tr, result);
    });
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    res.code = code;
  } catch (const CLI::CallForHelp&) {
    res.code = kOk;
    report = json{{"command", "help"}, {"version", artifact_version()}};
    human.push_back(app.help());
  } catch (const CLI::CallForAllHelp&) {
    res.code = kOk;
    report = json{{"command", "help"}, {"version", artifact_version()}};
    human.push_back(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    res.code = kInput;
    report = json{{"command", "error"},
                  {"version", artifact_version()},
                  {"error", e.what()}};
    human.push_back(std::string("argument error: ") + e.what());
  } catch (const input_error& e) {
    res.code = kInput;
    report = json{{"command", "error"},
                  {"version", artifact_version()},
                  {"inputs", tr.hashes},
                  {"error", e.what()}};
    human.push_back(std::string("input error: ") + e.what());
  } catch (const budget_error& e) {
    res.code = kInconclusive;
    report = json{{"command", "error"},
                  {"version", artifact_version()},
                  {"inputs", tr.hashes},
                  {"error", e.what()}};
    human.push_back(std::string("inconclusive: ") + e.what());
  } catch (const std::exception& e) {
    res.code = kInternal;
    report = json{{"command", "error"},
                  {"version", artifact_version()},
                  {"error", e.what()}};
    human.push_back(std::string("internal error: ") + e.what());
  }

  res.report_json = dump_report(report);
  res.human.clear();
  for (const auto& line : human) res.human += line + "\n";
  return res;
}

}  // namespace fpt
