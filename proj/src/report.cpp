#include "report.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace fpt {

std::string artifact_version() { return "0.1.0"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << text;
  if (!out) throw input_error("write failed: " + path);
}

json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw input_error(where + ": " + e.what());
  }
}

std::string fingerprint(const std::string& bytes) {
  return hex64(fnv1a(bytes));
}

std::string InputTracker::slurp(const std::string& path) {
  std::string text = read_file(path);
  hashes[path] = fingerprint(text);
  return text;
}

bool is_complex_json(const json& j) {
  return j.is_object() && j.contains("facets");
}

bool is_poset_json(const json& j) {
  return j.is_object() && j.contains("points");
}

namespace {

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw input_error(where + ": expected an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string())
      throw input_error(where + ": expected an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string resolve_relative(const std::string& anchor_file,
                             const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(anchor_file).parent_path() / p).string();
}

std::map<std::string, std::string> assign_from_json(const json& j,
                                                    const std::string& where) {
  if (!j.is_object()) throw input_error(where + ": expected an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string())
      throw input_error(where + ": assignment values must be strings");
    out[k] = v.get<std::string>();
  }
  return out;
}

}  // namespace

SimplicialComplex complex_from_json(const json& j) {
  if (!is_complex_json(j))
    throw input_error("complex file needs a 'facets' array");
  std::vector<std::vector<std::string>> facets;
  for (std::size_t i = 0; i < j["facets"].size(); ++i)
    facets.push_back(
        string_list(j["facets"][i], "facets[" + std::to_string(i) + "]"));
  std::map<std::string, std::vector<std::string>> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_object())
      throw input_error("labels must be an object");
    for (const auto& [k, v] : j["labels"].items())
      labels[k] = string_list(v, "labels." + k);
  }
  return SimplicialComplex::validate(facets, std::move(labels));
}

json complex_to_json(const SimplicialComplex& K) {
  json facets = json::array();
  for (const auto& f : K.facets()) facets.push_back(K.names_of(f));
  json out = {{"facets", facets}};
  if (!K.labels().empty()) {
    json labels = json::object();
    for (const auto& [k, v] : K.labels()) labels[k] = v;
    out["labels"] = labels;
  }
  return out;
}

FinitePoset poset_from_json(const json& j, bool repair) {
  if (!is_poset_json(j)) throw input_error("poset file needs a 'points' array");
  std::vector<std::string> points = string_list(j["points"], "points");
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array())
      throw input_error("covers must be an array of pairs");
    for (std::size_t i = 0; i < j["covers"].size(); ++i) {
      auto pair =
          string_list(j["covers"][i], "covers[" + std::to_string(i) + "]");
      if (pair.size() != 2)
        throw input_error("covers[" + std::to_string(i) +
                          "]: expected exactly two point names");
      covers.emplace_back(pair[0], pair[1]);
    }
  }
  return FinitePoset::from_covers(points, covers, repair);
}

json poset_to_json(const FinitePoset& X) {
  json covers = json::array();
  for (const auto& [a, b] : X.covers_by_name())
    covers.push_back(json::array({a, b}));
  return {{"points", X.point_names()}, {"covers", covers}};
}

SimplicialComplex load_complex(const std::string& path, InputTracker& t) {
  return complex_from_json(parse_json_text(t.slurp(path), path));
}

FinitePoset load_poset(const std::string& path, InputTracker& t, bool repair) {
  return poset_from_json(parse_json_text(t.slurp(path), path), repair);
}

LoadedMap load_map(const std::string& path, InputTracker& t) {
  json j = parse_json_text(t.slurp(path), path);
  if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
      !j.contains("assign"))
    throw input_error(path + ": map file needs source, target and assign");
  std::string src_path = resolve_relative(path, j["source"].get<std::string>());
  std::string tgt_path = resolve_relative(path, j["target"].get<std::string>());
  json sj = parse_json_text(t.slurp(src_path), src_path);
  json tj = parse_json_text(t.slurp(tgt_path), tgt_path);
  auto assign = assign_from_json(j["assign"], path + ": assign");
  LoadedMap out;
  if (is_complex_json(sj) && is_complex_json(tj)) {
    out.simplicial = true;
    out.smap = SimplicialMap::make(complex_from_json(sj), complex_from_json(tj),
                                   assign);
  } else if (is_poset_json(sj) && is_poset_json(tj)) {
    out.simplicial = false;
    out.mmap =
        MonotoneMap::make(poset_from_json(sj), poset_from_json(tj), assign);
  } else {
    throw input_error(path +
                      ": source and target must both be complexes or both "
                      "be posets");
  }
  return out;
}

std::vector<RealizationDatum> load_realizations(const std::string& path,
                                                const SimplicialComplex& K,
                                                InputTracker& t) {
  json j = parse_json_text(t.slurp(path), path);
  if (!j.is_array())
    throw input_error(path + ": realization file must be a list");
  ChainComplex ccK(K);
  std::vector<RealizationDatum> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    std::string where = path + "[" + std::to_string(i) + "]";
    if (!e.is_object() || !e.contains("k") || !e.contains("M") ||
        !e.contains("map"))
      throw input_error(where + ": each entry needs k, M and map");
    RealizationDatum d;
    if (!e["k"].is_number_integer())
      throw input_error(where + ": k must be an integer");
    d.k = e["k"].get<int>();
    std::string mpath = resolve_relative(path, e["M"].get<std::string>());
    d.M = complex_from_json(parse_json_text(t.slurp(mpath), mpath));
    std::string fpath = resolve_relative(path, e["map"].get<std::string>());
    LoadedMap lm = load_map(fpath, t);
    if (!lm.simplicial)
      throw input_error(where + ": realization map must be simplicial");
    if (!same_complex(lm.smap.source, d.M))
      throw input_error(where + ": map source differs from M");
    if (!same_complex(lm.smap.target, K))
      throw input_error(where + ": map target differs from the base complex");
    d.phi = lm.smap;
    auto pm = pseudomanifold_check(d.M);
    if (!pm.closed_pseudomanifold() || !pm.orientable)
      throw input_error(where +
                        ": carrier must be a closed oriented pseudomanifold: " +
                        pm.detail);
    ChainComplex ccM(d.M);
    Chain fz = fundamental_cycle(ccM, pm);
    d.claimed_class = induced_chain_map(d.phi, ccM, ccK).apply(fz);
    out.push_back(std::move(d));
  }
  return out;
}

json int_to_json(const Int& v) {
  static const Int lim = Int(1) << 53;
  if (int_abs(v) <= lim) return v.template convert_to<std::int64_t>();
  return v.str();
}

json rat_to_json(const Rat& v) {
  if (v.denominator() == 1) return int_to_json(v.numerator());
  return v.numerator().str() + "/" + v.denominator().str();
}

json chain_to_json(const ChainComplex& cc, const Chain& c) {
  json out = json::array();
  for (const auto& [idx, coef] : c.coef) {
    out.push_back({{"simplex", cc.complex().names_of(cc.basis(c.dim)[idx])},
                   {"coef", int_to_json(coef)}});
  }
  return out;
}

json homology_to_json(const HomologyResult& h, const ChainComplex* cc) {
  json groups = json::array();
  json betti = json::array();
  for (std::size_t k = 0; k < h.groups.size(); ++k) {
    const HomologyGroup& g = h.groups[k];
    json jg = {{"dim", static_cast<int>(k)}, {"rank", int_to_json(g.rank)}};
    json tor = json::array();
    for (const auto& tv : g.torsion) tor.push_back(int_to_json(tv));
    jg["torsion"] = tor;
    if (cc && !g.generators.empty()) {
      json gens = json::array();
      for (const auto& gen : g.generators)
        gens.push_back(chain_to_json(*cc, gen));
      jg["generators"] = gens;
    }
    groups.push_back(jg);
    betti.push_back(int_to_json(g.rank));
  }
  return {{"groups", groups}, {"betti", betti}, {"reduced", h.reduced}};
}

json certificate_to_json(const Certificate& c, bool include_witness) {
  json out = {{"property", c.property},
              {"status", c.status == CertStatus::holds     ? "holds"
                         : c.status == CertStatus::refuted ? "refuted"
                                                           : "inconclusive"},
              {"detail", c.detail},
              {"nodes", c.nodes}};
  if (include_witness && !c.witness.empty()) out["witness"] = c.witness;
  return out;
}

json kun_report_to_json(const KunReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"all_pass", r.all_pass}, {"checks", checks}};
}

json plan_to_json(const DepthPlan& p) {
  json entries = json::array();
  for (const auto& e : p.entries) {
    json targets = json::array();
    for (const auto& t : e.targets)
      targets.push_back({{"target", t.target},
                         {"dim", t.dim},
                         {"verified", t.verified},
                         {"note", t.note}});
    entries.push_back({{"k", e.k},
                       {"N_k", int_to_json(e.N_k)},
                       {"s_k", e.s_k},
                       {"mode", e.mode},
                       {"targets", targets}});
  }
  json forecast = json::array();
  for (const auto& f : p.forecast)
    forecast.push_back({{"part", f.part},
                        {"vertices", int_to_json(f.vertices)},
                        {"facets", int_to_json(f.facets)},
                        {"exact", f.exact}});
  return {{"n", p.n},
          {"for_main", p.for_main},
          {"depths", p.s},
          {"N", int_to_json(p.N)},
          {"multiplier", int_to_json(p.multiplier)},
          {"entries", entries},
          {"forecast", forecast},
          {"total_facets", int_to_json(p.total_facets)},
          {"ceiling", int_to_json(p.ceiling)},
          {"buildable", p.buildable},
          {"detail", p.detail}};
}

json assembled_to_json(const AssembledSpace& a) {
  json registry = json::array();
  for (const auto& so : a.registry)
    registry.push_back({{"name", so.name},
                        {"vertices", so.piece.vertex_count()},
                        {"facets", so.piece.facets().size()},
                        {"full_subcomplex", so.full}});
  return {{"vertices", a.L.vertex_count()},
          {"facets", a.L.facets().size()},
          {"registry", registry},
          {"homology_ok", a.homology_ok},
          {"subobjects_ok", a.subobjects_ok},
          {"classes_ok", a.classes_ok},
          {"retraction_ok", a.retraction_ok},
          {"all_ok", a.all_ok()},
          {"log", a.log}};
}

json make_report(const std::string& command, const InputTracker& t,
                 json result, json witnesses, json stats) {
  json out = {{"command", command},
              {"version", artifact_version()},
              {"inputs", t.hashes},
              {"result", std::move(result)}};
  if (!witnesses.is_null()) out["witnesses"] = std::move(witnesses);
  if (!stats.is_null()) out["stats"] = std::move(stats);
  return out;
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace fpt
