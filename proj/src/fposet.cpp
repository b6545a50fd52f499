#include "fposet.hpp"

#include <algorithm>

namespace fpt {

namespace {

std::vector<std::string> sorted_unique_points(std::vector<std::string> pts) {
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
    throw input_error("duplicate point name");
  return pts;
}

// leq as a closure matrix from a DAG of generators; throws on cycles.
std::vector<std::vector<std::uint8_t>> close_relations(
    std::size_t n, const std::vector<std::pair<PointId, PointId>>& gen) {
  std::vector<std::vector<PointId>> succ(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : gen) {
    if (a == b) throw input_error("point related strictly to itself");
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::vector<PointId> order;
  std::vector<PointId> ready;
  for (PointId p = 0; p < n; ++p)
    if (indeg[p] == 0) ready.push_back(p);
  while (!ready.empty()) {
    PointId p = ready.back();
    ready.pop_back();
    order.push_back(p);
    for (PointId q : succ[p])
      if (--indeg[q] == 0) ready.push_back(q);
  }
  if (order.size() != n) throw input_error("relation contains a cycle");

  std::vector<std::vector<std::uint8_t>> leq(
      n, std::vector<std::uint8_t>(n, 0));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    PointId p = *it;
    leq[p][p] = 1;
    for (PointId q : succ[p])
      for (std::size_t r = 0; r < n; ++r)
        if (leq[q][r]) leq[p][r] = 1;
  }
  return leq;
}

std::vector<std::pair<PointId, PointId>> reduce_to_covers(
    const std::vector<std::vector<std::uint8_t>>& leq) {
  const std::size_t n = leq.size();
  std::vector<std::pair<PointId, PointId>> covers;
  for (PointId a = 0; a < n; ++a)
    for (PointId b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool direct = true;
      for (PointId c = 0; c < n && direct; ++c)
        if (c != a && c != b && leq[a][c] && leq[c][b]) direct = false;
      if (direct) covers.emplace_back(a, b);
    }
  return covers;
}

}  // namespace

FinitePoset FinitePoset::from_covers(
    const std::vector<std::string>& points,
    const std::vector<std::pair<std::string, std::string>>& covers,
    bool repair) {
  FinitePoset X;
  X.points_ = sorted_unique_points(points);
  std::set<std::pair<PointId, PointId>> gen;
  for (const auto& [a, b] : covers)
    gen.emplace(X.require_id(a), X.require_id(b));
  std::vector<std::pair<PointId, PointId>> gv(gen.begin(), gen.end());
  X.leq_ = close_relations(X.points_.size(), gv);
  X.covers_ = reduce_to_covers(X.leq_);
  if (!repair) {
    std::set<std::pair<PointId, PointId>> strict(X.covers_.begin(),
                                                 X.covers_.end());
    for (auto [a, b] : gv)
      if (!strict.count({a, b}))
        throw input_error("redundant cover " + X.points_[a] + " < " +
                          X.points_[b] + " (transitive); pass repair to drop");
  }
  return X;
}

FinitePoset FinitePoset::from_relations(
    const std::vector<std::string>& points,
    const std::vector<std::pair<std::string, std::string>>& less) {
  FinitePoset X;
  X.points_ = sorted_unique_points(points);
  std::set<std::pair<PointId, PointId>> gen;
  for (const auto& [a, b] : less) gen.emplace(X.require_id(a), X.require_id(b));
  std::vector<std::pair<PointId, PointId>> gv(gen.begin(), gen.end());
  X.leq_ = close_relations(X.points_.size(), gv);
  X.covers_ = reduce_to_covers(X.leq_);
  return X;
}

std::optional<PointId> FinitePoset::id_of(const std::string& name) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), name);
  if (it == points_.end() || *it != name) return std::nullopt;
  return static_cast<PointId>(it - points_.begin());
}

PointId FinitePoset::require_id(const std::string& name) const {
  auto id = id_of(name);
  if (!id) throw input_error("unknown point '" + name + "'");
  return *id;
}

std::vector<std::pair<std::string, std::string>> FinitePoset::covers_by_name()
    const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : covers_) out.emplace_back(points_[a], points_[b]);
  return out;
}

std::vector<PointId> FinitePoset::strict_up(PointId p) const {
  std::vector<PointId> out;
  for (PointId q = 0; q < size(); ++q)
    if (lt(p, q)) out.push_back(q);
  return out;
}

std::vector<PointId> FinitePoset::strict_down(PointId p) const {
  std::vector<PointId> out;
  for (PointId q = 0; q < size(); ++q)
    if (lt(q, p)) out.push_back(q);
  return out;
}

std::vector<PointId> FinitePoset::minimal_points() const {
  std::vector<PointId> out;
  for (PointId p = 0; p < size(); ++p)
    if (strict_down(p).empty()) out.push_back(p);
  return out;
}

std::vector<PointId> FinitePoset::maximal_points() const {
  std::vector<PointId> out;
  for (PointId p = 0; p < size(); ++p)
    if (strict_up(p).empty()) out.push_back(p);
  return out;
}

FinitePoset FinitePoset::induced(const std::vector<PointId>& pts) const {
  std::vector<std::string> names;
  for (PointId p : pts) names.push_back(points_[p]);
  std::vector<std::pair<std::string, std::string>> rel;
  for (PointId a : pts)
    for (PointId b : pts)
      if (lt(a, b)) rel.emplace_back(points_[a], points_[b]);
  return from_relations(names, rel);
}

FinitePoset FinitePoset::without(PointId p) const {
  std::vector<PointId> keep;
  for (PointId q = 0; q < size(); ++q)
    if (q != p) keep.push_back(q);
  return induced(keep);
}

MonotoneMap MonotoneMap::make(FinitePoset src, FinitePoset tgt,
                              const std::map<std::string, std::string>& by_name) {
  MonotoneMap m;
  m.assign.resize(src.size());
  for (PointId p = 0; p < src.size(); ++p) {
    auto it = by_name.find(src.name_of(p));
    if (it == by_name.end())
      throw input_error("map does not assign point '" + src.name_of(p) + "'");
    m.assign[p] = tgt.require_id(it->second);
  }
  for (auto [a, b] : src.covers())
    if (!tgt.leq(m.assign[a], m.assign[b]))
      throw input_error("map is not monotone on " + src.name_of(a) + " < " +
                        src.name_of(b));
  m.source = std::move(src);
  m.target = std::move(tgt);
  return m;
}

MonotoneMap MonotoneMap::identity(const FinitePoset& X) {
  MonotoneMap m;
  m.source = X;
  m.target = X;
  m.assign.resize(X.size());
  for (PointId p = 0; p < X.size(); ++p) m.assign[p] = p;
  return m;
}

std::string MonotoneMap::image_name(const std::string& src_point) const {
  return target.name_of(assign[source.require_id(src_point)]);
}

std::map<std::string, std::string> MonotoneMap::assign_by_name() const {
  std::map<std::string, std::string> out;
  for (PointId p = 0; p < source.size(); ++p)
    out[source.name_of(p)] = target.name_of(assign[p]);
  return out;
}

MonotoneMap MonotoneMap::compose_after(const MonotoneMap& inner) const {
  if (!(inner.target.point_names() == source.point_names() &&
        inner.target.covers() == source.covers()))
    throw input_error("composition mismatch: inner target differs from outer source");
  MonotoneMap m;
  m.source = inner.source;
  m.target = target;
  m.assign.resize(inner.assign.size());
  for (std::size_t p = 0; p < inner.assign.size(); ++p)
    m.assign[p] = assign[inner.assign[p]];
  return m;
}

FinitePoset face_poset(const SimplicialComplex& K) {
  std::vector<std::string> points;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& s : K.all_simplices()) {
    std::string name = brace_name(K.names_of(s));
    points.push_back(name);
    if (s.size() > 1)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) face.push_back(s[i]);
        covers.emplace_back(brace_name(K.names_of(face)), name);
      }
  }
  return FinitePoset::from_covers(points, covers);
}

SimplicialComplex order_complex(const FinitePoset& X) {
  if (X.size() == 0) return {};
  std::vector<std::vector<PointId>> succ(X.size());
  for (auto [a, b] : X.covers()) succ[a].push_back(b);

  std::vector<std::vector<std::string>> chains;
  std::vector<PointId> chain;
  auto extend = [&](auto&& self, PointId at) -> void {
    chain.push_back(at);
    if (succ[at].empty()) {
      std::vector<std::string> names;
      for (PointId p : chain) names.push_back(X.name_of(p));
      chains.push_back(std::move(names));
    } else {
      for (PointId nxt : succ[at]) self(self, nxt);
    }
    chain.pop_back();
  };
  for (PointId p : X.minimal_points()) extend(extend, p);
  return SimplicialComplex::validate(chains);
}

MonotoneMap face_poset_functor(const SimplicialMap& phi) {
  FinitePoset X = face_poset(phi.source);
  FinitePoset Y = face_poset(phi.target);
  std::map<std::string, std::string> by_name;
  for (const auto& s : phi.source.all_simplices())
    by_name[brace_name(phi.source.names_of(s))] =
        brace_name(phi.target.names_of(phi.image(s)));
  return MonotoneMap::make(std::move(X), std::move(Y), by_name);
}

SimplicialMap order_complex_functor(const MonotoneMap& f) {
  SimplicialComplex K = order_complex(f.source);
  SimplicialComplex L = order_complex(f.target);
  std::map<std::string, std::string> by_name;
  for (PointId p = 0; p < f.source.size(); ++p)
    by_name[f.source.name_of(p)] = f.target.name_of(f.assign[p]);
  return SimplicialMap::make(std::move(K), std::move(L), by_name);
}

NonHausdorffCylinder nh_cylinder(const MonotoneMap& f) {
  const FinitePoset& X = f.source;
  const FinitePoset& Y = f.target;
  std::string prefix;
  {
    bool collide = true;
    while (collide) {
      collide = false;
      for (const auto& x : X.point_names())
        if (Y.id_of(prefix + x)) {
          collide = true;
          prefix = "src:" + prefix;
          break;
        }
    }
  }
  std::vector<std::string> points;
  for (const auto& x : X.point_names()) points.push_back(prefix + x);
  for (const auto& y : Y.point_names()) points.push_back(y);

  std::vector<std::pair<std::string, std::string>> rel;
  for (PointId a = 0; a < X.size(); ++a)
    for (PointId b = 0; b < X.size(); ++b)
      if (X.lt(a, b))
        rel.emplace_back(prefix + X.name_of(a), prefix + X.name_of(b));
  for (PointId a = 0; a < Y.size(); ++a)
    for (PointId b = 0; b < Y.size(); ++b)
      if (Y.lt(a, b)) rel.emplace_back(Y.name_of(a), Y.name_of(b));
  for (PointId x = 0; x < X.size(); ++x)
    for (PointId y = 0; y < Y.size(); ++y)
      if (Y.leq(f.assign[x], y))
        rel.emplace_back(prefix + X.name_of(x), Y.name_of(y));

  NonHausdorffCylinder out;
  out.B = FinitePoset::from_relations(points, rel);
  std::map<std::string, std::string> i_assign, j_assign;
  for (const auto& x : X.point_names()) i_assign[x] = prefix + x;
  for (const auto& y : Y.point_names()) j_assign[y] = y;
  out.include_source = MonotoneMap::make(X, out.B, i_assign);
  out.include_target = MonotoneMap::make(Y, out.B, j_assign);
  return out;
}

bool is_up_beat(const FinitePoset& X, PointId p) {
  auto up = X.strict_up(p);
  if (up.empty()) return false;
  for (PointId q : up) {
    bool is_min = true;
    for (PointId r : up)
      if (!X.leq(q, r)) {
        is_min = false;
        break;
      }
    if (is_min) return true;
  }
  return false;
}

bool is_down_beat(const FinitePoset& X, PointId p) {
  auto down = X.strict_down(p);
  if (down.empty()) return false;
  for (PointId q : down) {
    bool is_max = true;
    for (PointId r : down)
      if (!X.leq(r, q)) {
        is_max = false;
        break;
      }
    if (is_max) return true;
  }
  return false;
}

std::vector<PointId> beat_points(const FinitePoset& X) {
  std::vector<PointId> out;
  for (PointId p = 0; p < X.size(); ++p)
    if (is_up_beat(X, p) || is_down_beat(X, p)) out.push_back(p);
  return out;
}

FinitePoset core(const FinitePoset& X) {
  FinitePoset cur = X;
  for (;;) {
    auto beats = beat_points(cur);
    if (beats.empty()) return cur;
    cur = cur.without(beats.front());
  }
}

bool is_contractible(const FinitePoset& X) {
  return X.size() > 0 && core(X).size() == 1;
}

bool is_weak_point(const FinitePoset& X, PointId p) {
  auto up = X.strict_up(p);
  if (!up.empty() && is_contractible(X.induced(up))) return true;
  auto down = X.strict_down(p);
  return !down.empty() && is_contractible(X.induced(down));
}

FinitePoset relabel(const FinitePoset& X,
                    const std::map<std::string, std::string>& ren) {
  auto newname = [&](const std::string& v) {
    auto it = ren.find(v);
    return it == ren.end() ? v : it->second;
  };
  std::vector<std::string> points;
  for (const auto& p : X.point_names()) points.push_back(newname(p));
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [a, b] : X.covers())
    covers.emplace_back(newname(X.name_of(a)), newname(X.name_of(b)));
  return FinitePoset::from_covers(points, covers);
}

FinitePoset prefix_points(const FinitePoset& X, const std::string& prefix) {
  std::map<std::string, std::string> ren;
  for (const auto& p : X.point_names()) ren[p] = prefix + p;
  return relabel(X, ren);
}

FinitePoset glue_posets(const FinitePoset& A, const FinitePoset& B) {
  std::set<std::string> names(A.point_names().begin(), A.point_names().end());
  names.insert(B.point_names().begin(), B.point_names().end());
  std::vector<std::pair<std::string, std::string>> rel;
  for (auto [a, b] : A.covers()) rel.emplace_back(A.name_of(a), A.name_of(b));
  for (auto [a, b] : B.covers()) rel.emplace_back(B.name_of(a), B.name_of(b));
  return FinitePoset::from_relations(
      std::vector<std::string>(names.begin(), names.end()), rel);
}

}  // namespace fpt
