#pragma once

#include "fixtest.hpp"

namespace fpt {

// ---------------------------------------------------------------------------
// The 14-point circle model with the doubled cycle (the "wedge" space).
// ---------------------------------------------------------------------------

struct KunCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct KunReport {
  std::vector<KunCheck> checks;
  bool all_pass = false;
  std::string failing() const;
};

struct KunSpace {
  FinitePoset poset;                     // canonical point names
  std::vector<std::string> crown;        // x, y, z, w (doubling cycle)
  std::vector<std::string> crown_prime;  // x', y', z', w' (retract crown)
  // Integer weight per cover pair (lower, upper); extends to a circle-valued
  // degree functional on the order complex.
  std::map<std::pair<std::string, std::string>, Int> omega;
  int candidate = -1;   // accepted index in the deterministic map enumeration
  int surveyed = 0;     // candidates examined before acceptance
  KunReport report;
};

// Reconstructs the space by gluing two open cylinders over the 8-point
// circle (one mapping with degree 1, one with degree 2), coring to 14
// points, and renaming by structure. Deterministic; verified before return.
KunSpace build_kun(const SearchBudget& budget = {});

// Re-runs the verification suite on a poset carrying the canonical names.
KunReport verify_kun(const FinitePoset& X, const SearchBudget& budget = {});

// Solves for cover weights vanishing on triangle boundaries and taking value
// one on the degree-one generator; empty when no integer solution exists.
std::map<std::pair<std::string, std::string>, Int> solve_degree_weights(
    const FinitePoset& X);

// ---------------------------------------------------------------------------
// Realization data: oriented manifold-like carriers for homology classes.
// ---------------------------------------------------------------------------

struct RealizationDatum {
  int k = 0;
  SimplicialComplex M;
  SimplicialMap phi;    // M -> K
  Chain claimed_class;  // k-cycle in C_k(K)
};

// Structural validation shared by planning and assembly: closed oriented
// pseudomanifolds of the right dimension, pushed fundamental classes match
// the claims, and per degree the claims form a rational basis. Asymmetry of
// the carriers (k >= 2) is enforced only when check_asymmetry is set; the
// planning stage omits it. Returns each fundamental cycle.
std::vector<Chain> validate_realizations(const SimplicialComplex& K,
                                         const std::vector<RealizationDatum>& data,
                                         bool with_degree_one,
                                         bool check_asymmetry);

// ---------------------------------------------------------------------------
// Depth planning for the subdivision tower.
// ---------------------------------------------------------------------------

struct PlanTarget {
  std::string target;  // which complex the covering requirement is against
  int dim = 0;
  bool verified = false;
  std::string note;
};

struct PlanEntry {
  int k = 0;
  Int N_k;      // largest simplex count among the depth-(k-1) carriers
  int s_k = 0;  // subdivision depth fixed at stage k
  std::string mode;  // "bound" or "explicit"
  std::vector<PlanTarget> targets;
};

struct PartForecast {
  std::string part;
  Int vertices;
  Int facets;
  bool exact = false;  // bounds are upper bounds when not exact
};

struct DepthPlan {
  int n = 0;
  bool for_main = false;
  std::vector<int> s;  // s[0..n]
  std::vector<PlanEntry> entries;
  Int N;           // max of the N_k
  Int multiplier;  // middle-tower length: N, or (n+1)!*N with degree-one data
  std::vector<PartForecast> forecast;
  Int total_facets;
  Int ceiling;
  bool buildable = false;
  std::string detail;
};

// mode "bound": depths from the mesh-shrink inequality
//   N * (d/(d+1))^s < 1/(d+1) per covering target of dimension d.
// mode "explicit": user depths (values for s_2..s_n); the covering predicate
// is checked exhaustively when the target stays below the enumeration
// ceiling and is otherwise recorded as unverified.
DepthPlan plan_depths(const SimplicialComplex& K,
                      const std::vector<RealizationDatum>& data,
                      const std::string& mode,
                      const std::vector<int>& explicit_depths = {},
                      bool for_main = false,
                      const Int& facet_ceiling = Int(2000000),
                      const SearchBudget& budget = {});

// ---------------------------------------------------------------------------
// Assembled spaces.
// ---------------------------------------------------------------------------

struct Subobject {
  std::string name;
  SimplicialComplex piece;  // vertex names as they appear in the ambient space
  bool full = false;        // verified full subcomplex
};

struct AssembledSpace {
  SimplicialComplex L;
  std::vector<Subobject> registry;
  DepthPlan plan;
  std::vector<std::string> log;
  bool homology_ok = false;
  bool subobjects_ok = false;
  bool classes_ok = false;
  bool retraction_ok = false;
  bool all_ok() const {
    return homology_ok && subobjects_ok && classes_ok && retraction_ok;
  }
};

// Carrier-and-cylinder tower over K for degrees two and up. Requires a
// buildable plan with for_main unset and H_1(K) = 0.
AssembledSpace assemble_thm4(const SimplicialComplex& K,
                             const std::vector<RealizationDatum>& data,
                             const DepthPlan& plan,
                             const SearchBudget& budget = {});

struct MainSpace {
  FinitePoset X;
  AssembledSpace base;
  KunSpace kun;
  std::vector<std::string> kun_prefixes;  // one fresh copy per degree-one datum
  std::vector<Int> h_degree;              // certified degree of each crown map
  std::vector<std::string> log;
  bool homology_ok = false;
  bool copies_ok = false;
  bool degrees_ok = false;
  bool all_ok() const {
    return base.all_ok() && homology_ok && copies_ok && degrees_ok;
  }
};

// Full pipeline: the tower for all degrees including one, face poset, and one
// cylinder onto a fresh copy of the 14-point model per degree-one carrier.
// Requires a buildable plan with for_main set. A pre-built verified model
// can be supplied to skip its reconstruction.
MainSpace assemble_main(const SimplicialComplex& K,
                        const std::vector<RealizationDatum>& data,
                        const DepthPlan& plan,
                        const SearchBudget& budget = {},
                        const KunSpace* prebuilt = nullptr);

}  // namespace fpt
