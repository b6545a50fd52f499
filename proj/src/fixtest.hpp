#pragma once

#include "zhomology.hpp"

namespace fpt {

enum class CertStatus { holds, refuted, inconclusive };

struct Certificate {
  std::string property;  // "fsp", "fpp", "asymmetric"
  CertStatus status = CertStatus::inconclusive;
  // For refutations: the witness self-map (lexicographically least in
  // vertex/point order). For asymmetry: the universally fixed vertex.
  std::map<std::string, std::string> witness;
  long long nodes = 0;
  std::string detail;
};

// All automorphisms, sorted by image tuple.
std::vector<std::vector<VertexId>> automorphisms(const SimplicialComplex& K);
std::vector<std::vector<PointId>> automorphisms(const FinitePoset& X);

std::vector<VertexId> universally_fixed(const SimplicialComplex& K);
// Some vertex is fixed by every automorphism.
bool is_asymmetric(const SimplicialComplex& K);

struct AsymmetrizeResult {
  SimplicialComplex L;
  std::string apex;  // vertex of strictly maximal degree
  int passes = 0;
  int apex_degree = 0;
  int runner_up_degree = 0;
  bool degree_formula_ok = false;   // subdivision degree scaling verified
  bool unique_max_in_prime = false; // d(L') attained only at the apex atom
  Certificate certificate;
};
// Repeatedly stars every facet containing the chosen apex until the apex
// degree strictly dominates and is at least dim+2, then certifies.
AsymmetrizeResult asymmetrize(const SimplicialComplex& M);

// Exhaustive search for a simplicial self-map without a fixed simplex.
Certificate fsp_check(const SimplicialComplex& K, const SearchBudget& budget);
// Exhaustive search for a monotone fixed-point-free self-map.
Certificate fpp_check(const FinitePoset& X, const SearchBudget& budget);

// Unpruned enumeration oracles for cross-validation on small inputs.
Certificate fsp_check_naive(const SimplicialComplex& K,
                            const SearchBudget& budget);
Certificate fpp_check_naive(const FinitePoset& X, const SearchBudget& budget);

// Certifies FSP map-by-map: nonzero Lefschetz number, or else a
// norm-preserving automorphism that must fix the apex. Every certified map
// is also directly checked to fix a simplex.
struct DecompositionReport {
  bool certified = false;
  long long maps_total = 0;
  long long by_lefschetz = 0;
  long long by_automorphism = 0;
  std::string uncertified_map;
  long long nodes = 0;
};
DecompositionReport fsp_decomposition_certify(const SimplicialComplex& K,
                                              const std::string& apex,
                                              const SearchBudget& budget);

// From a monotone self-map f of the face poset X(K), the simplicial map
// g(v) = least vertex of f({v}) satisfies X(g) <= f; a fixed simplex of g
// ascends to a fixed point of f.
struct LiftResult {
  std::map<std::string, std::string> g;  // simplicial self-map of K
  bool has_fixed = false;
  std::string fixed_simplex;  // of g, when any
  std::string fixed_point;    // of f, when any
};
LiftResult fsp_to_fpp_lift(const SimplicialComplex& K, const MonotoneMap& f);

}  // namespace fpt
