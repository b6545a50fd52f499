#pragma once

#include "fposet.hpp"
#include "matrix.hpp"
#include "scomplex.hpp"

namespace fpt {

// Sparse integer chain over the canonical basis (k-simplices sorted by
// vertex ids, each oriented by ascending vertex order).
struct Chain {
  int dim = 0;
  std::map<int, Int> coef;  // basis index -> nonzero coefficient

  bool zero() const { return coef.empty(); }
  Int norm() const;
  Chain& add(int idx, const Int& c);
  Chain& axpy(const Int& t, const Chain& other);  // this += t * other
  Chain negated() const;
  // Flips sign so the lowest-index coefficient is positive.
  Chain canonical_sign() const;
  bool operator==(const Chain&) const = default;
};

using SparseCol = std::vector<std::pair<int, Int>>;  // (row, coeff), row-sorted

class ChainComplex {
 public:
  ChainComplex() = default;
  explicit ChainComplex(const SimplicialComplex& K);

  const SimplicialComplex& complex() const { return K_; }
  int top_dim() const { return static_cast<int>(bases_.size()) - 1; }
  int count(int k) const {
    return k >= 0 && k <= top_dim() ? static_cast<int>(bases_[k].size()) : 0;
  }
  const std::vector<Simplex>& basis(int k) const { return bases_[k]; }
  int index_of(int k, const Simplex& s) const;
  // Boundary of the j-th basis k-simplex.
  const SparseCol& boundary_col(int k, int j) const {
    return boundary_[k][j];
  }
  Chain boundary(const Chain& c) const;
  DenseMat boundary_dense(int k) const;
  SparseTriplets boundary_sparse(int k) const;
  Chain chain_of(int k, const Simplex& s, Int c = Int(1)) const;
  std::vector<Int> to_vector(const Chain& c) const;
  Chain from_vector(int k, const std::vector<Int>& v) const;

 private:
  SimplicialComplex K_;
  std::vector<std::vector<Simplex>> bases_;
  std::vector<std::map<Simplex, int>> index_;
  std::vector<std::vector<SparseCol>> boundary_;
};

struct HomologyGroup {
  Int rank = 0;
  std::vector<Int> torsion;        // invariant factors > 1
  std::vector<Chain> generators;   // free part only, when requested
};

struct HomologyResult {
  std::vector<HomologyGroup> groups;  // index k = dimension
  bool reduced = false;
};

// with_generators selects the dense transform-carrying elimination; otherwise
// only invariant factors are computed (sparse, scales further).
HomologyResult homology(const ChainComplex& C, bool reduced = false,
                        bool with_generators = false);
HomologyResult homology(const SimplicialComplex& K, bool reduced = false,
                        bool with_generators = false);
// Homology of the order complex.
HomologyResult homology(const FinitePoset& X, bool reduced = false,
                        bool with_generators = false);

// Chain map stored column-wise per dimension.
struct ChainMap {
  std::vector<std::vector<SparseCol>> cols;  // cols[k][j] = image of e_j

  int max_dim() const { return static_cast<int>(cols.size()) - 1; }
  Chain apply(const Chain& c) const;
  Int op_norm(int k) const;  // max column 1-norm, 0 when empty
  ChainMap compose_after(const ChainMap& inner) const;
};

ChainMap induced_chain_map(const SimplicialMap& f, const ChainComplex& src,
                           const ChainComplex& tgt);

Int chain_norm(const Chain& c);

// Chain-level barycentric subdivision operator lambda : C(K) -> C(K').
struct SubdivisionOperator {
  SimplicialComplex Kprime;
  ChainComplex src, dst;
  ChainMap lambda;
};
SubdivisionOperator subdivision_operator(const SimplicialComplex& K);

// All nonzero k-cycles with 1-norm <= bound, in canonical sign, sorted.
// Counts enumeration nodes against the budget.
std::vector<Chain> enumerate_cycles(const ChainComplex& C, int k,
                                    const Int& bound, const SearchBudget& budget);

struct ClassNormResult {
  Int min_norm;
  Chain argmin;
};
// Exact minimum 1-norm over the homology class of cycle z.
ClassNormResult homology_class_norm(const ChainComplex& C, const Chain& z,
                                    const SearchBudget& budget);

// Whether two k-cycles differ by a boundary; S is an SNF of boundary_dense(k+1).
bool homologous(const ChainComplex& C, const SnfResult& S, const Chain& a,
                const Chain& b);

// Rational matrix of the map induced on H_k by a chain map, in the bases of
// the given (generator-carrying) homology results.
RatMat homology_matrix(const ChainMap& f, int k, const ChainComplex& tgt,
                       const HomologyResult& hsrc, const HomologyResult& htgt);

Rat lefschetz_number(const SimplicialMap& f);
Rat lefschetz_number(const MonotoneMap& f);

// Fundamental cycle of a closed oriented pseudomanifold from facet signs.
Chain fundamental_cycle(const ChainComplex& cc, const PseudomanifoldReport& rep);

// Norm-controlled chain retraction r : C(Z_psi) -> C(K') for the cylinder
// of psi : K' -> K (psi maps each barycenter to the least vertex of its
// simplex; cylinder source order puts higher-dimensional barycenters first).
struct CylinderRetraction {
  SimplicialComplex K, Kprime;
  std::vector<std::string> ordering;
  SimplicialMap psi;
  MappingCylinder cyl;
  ChainComplex ccZ, ccKp;
  ChainMap r;
};
CylinderRetraction cylinder_retraction(const SimplicialComplex& K);

// Integer edge weights on cover relations extended additively along chains.
class Winding {
 public:
  // Verifies the triangle (cocycle) condition on the order complex and
  // throws input_error when inconsistent.
  Winding(const FinitePoset& X,
          const std::map<std::pair<std::string, std::string>, Int>& cover_weights);

  const FinitePoset& poset() const { return X_; }
  // Weight of the oriented comparable pair a < b.
  Int pair_weight(PointId a, PointId b) const;
  // Evaluate on a 1-chain of the order complex of X.
  Int eval(const ChainComplex& ccKX, const Chain& z) const;
  std::map<std::pair<std::string, std::string>, Int> cover_weights() const;

 private:
  FinitePoset X_;
  std::map<std::pair<PointId, PointId>, Int> w_;  // all comparable pairs
};

struct WindingReport {
  std::vector<Int> generator_values;  // omega on each H1 generator of K(X)
  bool injective = false;             // induced H1 -> Z injective
  bool iso = false;
  Int cycle_value;                    // on the supplied cycle, when given
};
WindingReport winding_report(const Winding& w, const ChainComplex& ccKX,
                             const Chain* z = nullptr);

}  // namespace fpt
