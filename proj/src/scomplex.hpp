#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "common.hpp"

namespace fpt {

using VertexId = std::uint32_t;
// Vertex ids in strictly increasing order. Ids follow lexicographic name
// order, so a sorted id vector is also name-sorted.
using Simplex = std::vector<VertexId>;

// Canonical name of a simplex given its sorted member names: "{a,b,c}".
std::string brace_name(const std::vector<std::string>& sorted_parts);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // the empty complex, dim -1

  // Canonicalizes: sorts vertices, absorbs non-maximal facets, dedupes.
  // Rejects empty facets and facets with repeated vertices.
  static SimplicialComplex validate(
      const std::vector<std::vector<std::string>>& raw_facets,
      std::map<std::string, std::vector<std::string>> labels = {});

  int dim() const { return dim_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<std::string>& vertex_names() const { return vertices_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  const std::map<std::string, std::vector<std::string>>& labels() const {
    return labels_;
  }

  const std::string& name_of(VertexId v) const { return vertices_[v]; }
  std::optional<VertexId> id_of(const std::string& name) const;
  VertexId require_id(const std::string& name) const;
  std::vector<std::string> names_of(const Simplex& s) const;
  std::optional<Simplex> simplex_from_names(
      const std::vector<std::string>& names) const;

  bool has_simplex(const Simplex& s) const;
  // All nonempty simplices, sorted by (dimension, vertex ids).
  std::vector<Simplex> all_simplices() const;
  std::vector<Simplex> simplices_of_dim(int k) const;
  std::vector<Int> f_vector() const;  // f[k] = number of k-simplices
  Int euler_characteristic() const;

  // Number of facets containing s.
  int deg(const Simplex& s) const;
  // (max vertex degree, vertices attaining it).
  std::pair<int, std::vector<VertexId>> max_degree() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<std::string> vertices_;  // sorted lexicographically
  std::vector<Simplex> facets_;        // each sorted, list sorted
  std::map<std::string, std::vector<std::string>> labels_;
  int dim_ = -1;
};

struct SimplicialMap {
  SimplicialComplex source, target;
  std::vector<VertexId> assign;  // source vertex id -> target vertex id

  // Checks totality and that every facet image is a simplex of the target.
  static SimplicialMap make(SimplicialComplex src, SimplicialComplex tgt,
                            const std::map<std::string, std::string>& by_name);
  static SimplicialMap identity(const SimplicialComplex& K);

  VertexId operator()(VertexId v) const { return assign[v]; }
  std::string image_name(const std::string& src_vertex) const;
  Simplex image(const Simplex& s) const;  // sorted, deduped
  std::map<std::string, std::string> assign_by_name() const;
  SimplicialMap compose_after(const SimplicialMap& inner) const;  // this(inner(x))
};

// Barycentric subdivision. Vertices are named "{a,b,c}" after the sorted
// vertex names of the simplex they subdivide, and carry that vertex list as
// their label, so repeated subdivision nests deterministically.
SimplicialComplex barycentric(const SimplicialComplex& K);
SimplicialComplex iterated_barycentric(const SimplicialComplex& K, int rounds);
// K' -> L' induced by phi: b(s) -> b(phi(s)).
SimplicialMap induced_barycentric_map(const SimplicialMap& phi);
SimplicialMap iterated_barycentric_map(const SimplicialMap& phi, int rounds);

// Stellar subdivision at a simplex s (starring). The new vertex is named
// "b({...})#t" with the smallest t that avoids a collision.
struct StellarResult {
  SimplicialComplex complex;
  std::string new_vertex;
};
StellarResult stellar_subdivide(const SimplicialComplex& K,
                                const std::vector<std::string>& simplex);

struct PseudomanifoldReport {
  int dim = -1;
  bool pure = false;
  bool strongly_connected = false;
  bool closed = false;      // every (n-1)-simplex in exactly two facets
  bool orientable = false;  // only evaluated when closed
  // Facet signs of a coherent orientation, aligned with facets(); empty when
  // not closed+orientable.
  std::vector<int> facet_signs;
  std::string detail;
  bool closed_pseudomanifold() const {
    return pure && strongly_connected && closed;
  }
};
PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& K);

struct MappingCylinder {
  SimplicialComplex Z;
  SimplicialMap include_source;  // i : K -> Z
  SimplicialMap include_target;  // j : L -> Z, full subcomplex
  SimplicialMap project;         // p : Z -> L, p.i = phi, p.j = id
};
// Simplicial mapping cylinder of phi. source_order is a total order on the
// source vertices (all of them, by name); empty means lexicographic. If the
// two vertex name sets collide, source copies are prefixed with "src:".
MappingCylinder mapping_cylinder(const SimplicialMap& phi,
                                 const std::vector<std::string>& source_order = {});

// Convex-carrier hull: given simplices of K that are pairwise comparable or
// disjoint and whose total union is again a simplex of K, returns the
// subcomplex of K' spanned by barycenters of all unions (the order complex of
// the union poset).
SimplicialComplex carrier_hull(
    const SimplicialComplex& K,
    const std::vector<std::vector<std::string>>& members);

// (n/(n+1))^rounds, the mesh shrink factor of iterated barycentric
// subdivision in dimension n.
Rat mesh_shrink(int dim, int rounds);

// Renaming utilities. relabel maps listed names and keeps the rest; the
// result must still have distinct vertex names.
SimplicialComplex relabel(const SimplicialComplex& K,
                          const std::map<std::string, std::string>& ren);
SimplicialComplex prefix_vertices(const SimplicialComplex& K,
                                  const std::string& prefix);
// Union of facet sets; shared vertex names are identified. Labels merge and
// must agree where both sides define them.
SimplicialComplex glue_union(const SimplicialComplex& A,
                             const SimplicialComplex& B);
// Subcomplex induced on the given vertex names.
SimplicialComplex induced_subcomplex(const SimplicialComplex& K,
                                     const std::set<std::string>& verts);
// Structural equality: same vertex names and facet sets (labels ignored).
bool same_complex(const SimplicialComplex& A, const SimplicialComplex& B);
// True when every simplex of L with all vertices in sub's vertex set is a
// simplex of sub (sub must itself be a subcomplex of L).
bool is_full_subcomplex(const SimplicialComplex& L,
                        const SimplicialComplex& sub);

}  // namespace fpt
