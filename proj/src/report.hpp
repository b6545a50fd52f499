#pragma once

#include <json.hpp>

#include "assembly.hpp"

namespace fpt {

using json = nlohmann::json;

std::string artifact_version();

// File plumbing. Loaders throw input_error naming the offending path.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
json parse_json_text(const std::string& text, const std::string& where);
std::string fingerprint(const std::string& bytes);

// Records a content hash for every file a command touches.
struct InputTracker {
  json hashes = json::object();
  std::string slurp(const std::string& path);
};

bool is_complex_json(const json& j);
bool is_poset_json(const json& j);

SimplicialComplex complex_from_json(const json& j);
json complex_to_json(const SimplicialComplex& K);
FinitePoset poset_from_json(const json& j, bool repair = false);
json poset_to_json(const FinitePoset& X);

SimplicialComplex load_complex(const std::string& path, InputTracker& t);
FinitePoset load_poset(const std::string& path, InputTracker& t,
                       bool repair = false);

// A map file names its own source and target files, resolved relative to the
// map file's directory; the kind follows from what those files hold.
struct LoadedMap {
  bool simplicial = false;
  SimplicialMap smap;
  MonotoneMap mmap;
};
LoadedMap load_map(const std::string& path, InputTracker& t);

// Realization file: a list of {"k": int, "M": path, "map": path}. The claimed
// class of each datum is the pushed fundamental class of its carrier.
std::vector<RealizationDatum> load_realizations(const std::string& path,
                                                const SimplicialComplex& K,
                                                InputTracker& t);

json int_to_json(const Int& v);
json rat_to_json(const Rat& v);
json chain_to_json(const ChainComplex& cc, const Chain& c);
json homology_to_json(const HomologyResult& h, const ChainComplex* cc);
json certificate_to_json(const Certificate& c, bool include_witness);
json kun_report_to_json(const KunReport& r);
json plan_to_json(const DepthPlan& p);
json assembled_to_json(const AssembledSpace& a);

json make_report(const std::string& command, const InputTracker& t,
                 json result, json witnesses = json(), json stats = json());
std::string dump_report(const json& j);

}  // namespace fpt
