#pragma once

// Shared fixtures: the standard small spaces and the carrier maps used by
// the pipeline tests.

#include "assembly.hpp"

namespace fpt::testing {

inline SimplicialComplex triangle() {
  return SimplicialComplex::validate({{"a", "b", "c"}});
}

inline SimplicialComplex circle3() {
  return SimplicialComplex::validate({{"a", "b"}, {"b", "c"}, {"a", "c"}});
}

inline SimplicialComplex circle4() {
  return SimplicialComplex::validate(
      {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
}

inline SimplicialComplex sphere2() {
  return SimplicialComplex::validate(
      {{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
}

inline SimplicialComplex torus7() {
  std::vector<std::vector<std::string>> facets;
  auto v = [](int i) { return std::to_string(((i % 7) + 7) % 7); };
  for (int i = 0; i < 7; ++i) {
    facets.push_back({v(i), v(i + 1), v(i + 3)});
    facets.push_back({v(i), v(i + 2), v(i + 3)});
  }
  return SimplicialComplex::validate(facets);
}

inline SimplicialComplex rp2_6() {
  return SimplicialComplex::validate(
      {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
       {"1", "2", "6"}, {"2", "3", "5"}, {"3", "4", "6"}, {"2", "4", "5"},
       {"3", "5", "6"}, {"2", "4", "6"}});
}

// Collapse every starred vertex back onto the least vertex of the simplex
// it starred; the composition of the per-star collapses has degree +-1.
inline SimplicialMap unstar_map(const SimplicialComplex& L,
                                const SimplicialComplex& K) {
  std::map<std::string, std::string> assign;
  std::function<std::string(const std::string&)> resolve =
      [&](const std::string& v) -> std::string {
    if (K.id_of(v)) return v;
    auto it = L.labels().find(v);
    if (it == L.labels().end() || it->second.empty())
      throw std::logic_error("unlabeled starred vertex " + v);
    return resolve(it->second.front());
  };
  for (const auto& v : L.vertex_names()) assign[v] = resolve(v);
  return SimplicialMap::make(L, K, assign);
}

// The simplicial approximation of the identity on the subdivision: each
// barycenter goes to the least vertex of its simplex.
inline SimplicialMap least_vertex_map(const SimplicialComplex& K) {
  SimplicialComplex Kp = barycentric(K);
  std::map<std::string, std::string> assign;
  for (const auto& v : Kp.vertex_names())
    assign[v] = Kp.labels().at(v).front();
  return SimplicialMap::make(Kp, K, assign);
}

// Realization datum whose claimed class is the pushed fundamental class.
inline RealizationDatum make_realization(int k, const SimplicialComplex& M,
                                         const SimplicialMap& phi,
                                         const SimplicialComplex& K) {
  auto pm = pseudomanifold_check(M);
  ChainComplex ccM(M), ccK(K);
  RealizationDatum d;
  d.k = k;
  d.M = M;
  d.phi = phi;
  d.claimed_class = induced_chain_map(phi, ccM, ccK)
                        .apply(fundamental_cycle(ccM, pm));
  return d;
}

}  // namespace fpt::testing
