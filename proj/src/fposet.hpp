#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scomplex.hpp"

namespace fpt {

using PointId = std::uint32_t;

class FinitePoset {
 public:
  FinitePoset() = default;

  // Builds from a cover relation. Rejects cycles; rejects redundant
  // (transitive) covers unless repair is set, in which case they are dropped.
  static FinitePoset from_covers(
      const std::vector<std::string>& points,
      const std::vector<std::pair<std::string, std::string>>& covers,
      bool repair = false);
  // Builds from any generating set of strict relations (transitively closes,
  // then reduces to covers).
  static FinitePoset from_relations(
      const std::vector<std::string>& points,
      const std::vector<std::pair<std::string, std::string>>& less);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& point_names() const { return points_; }
  const std::string& name_of(PointId p) const { return points_[p]; }
  std::optional<PointId> id_of(const std::string& name) const;
  PointId require_id(const std::string& name) const;
  const std::vector<std::pair<PointId, PointId>>& covers() const {
    return covers_;
  }
  std::vector<std::pair<std::string, std::string>> covers_by_name() const;

  bool leq(PointId a, PointId b) const { return leq_[a][b]; }
  bool lt(PointId a, PointId b) const { return a != b && leq_[a][b]; }
  bool comparable(PointId a, PointId b) const {
    return leq_[a][b] || leq_[b][a];
  }

  std::vector<PointId> strict_up(PointId p) const;
  std::vector<PointId> strict_down(PointId p) const;
  std::vector<PointId> minimal_points() const;
  std::vector<PointId> maximal_points() const;

  // Subposet induced on the given points (names keep their identity).
  FinitePoset induced(const std::vector<PointId>& pts) const;
  FinitePoset without(PointId p) const;

  bool operator==(const FinitePoset&) const = default;

 private:
  std::vector<std::string> points_;                  // sorted lexicographically
  std::vector<std::pair<PointId, PointId>> covers_;  // irredundant, sorted
  std::vector<std::vector<std::uint8_t>> leq_;
};

struct MonotoneMap {
  FinitePoset source, target;
  std::vector<PointId> assign;

  static MonotoneMap make(FinitePoset src, FinitePoset tgt,
                          const std::map<std::string, std::string>& by_name);
  static MonotoneMap identity(const FinitePoset& X);
  PointId operator()(PointId p) const { return assign[p]; }
  std::string image_name(const std::string& src_point) const;
  std::map<std::string, std::string> assign_by_name() const;
  MonotoneMap compose_after(const MonotoneMap& inner) const;
};

// Face poset X(K): points are the simplices of K named "{a,b,c}", ordered by
// inclusion.
FinitePoset face_poset(const SimplicialComplex& K);
// Order complex K(X): vertices are the points, facets the maximal chains.
SimplicialComplex order_complex(const FinitePoset& X);
// X(phi): the simplex map induced on face posets.
MonotoneMap face_poset_functor(const SimplicialMap& phi);
// K(f): the simplicial map induced on order complexes.
SimplicialMap order_complex_functor(const MonotoneMap& f);

struct NonHausdorffCylinder {
  FinitePoset B;
  MonotoneMap include_source;  // X -> B, points prefixed when names collide
  MonotoneMap include_target;  // Y -> B
};
// B(f) = X disjoint-union Y with x < y iff f(x) <= y.
NonHausdorffCylinder nh_cylinder(const MonotoneMap& f);

bool is_up_beat(const FinitePoset& X, PointId p);
bool is_down_beat(const FinitePoset& X, PointId p);
std::vector<PointId> beat_points(const FinitePoset& X);
// Removes the lexicographically least beat point until none remain.
FinitePoset core(const FinitePoset& X);
bool is_contractible(const FinitePoset& X);
// p is a weak point when its strict up-set or strict down-set is nonempty
// and contractible.
bool is_weak_point(const FinitePoset& X, PointId p);

FinitePoset relabel(const FinitePoset& X,
                    const std::map<std::string, std::string>& ren);
FinitePoset prefix_points(const FinitePoset& X, const std::string& prefix);
// Union of points and cover-generated relations of two posets that agree on
// shared points; rejects cycles introduced by the union.
FinitePoset glue_posets(const FinitePoset& A, const FinitePoset& B);

}  // namespace fpt
