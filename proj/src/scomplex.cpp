#include "scomplex.hpp"

#include <algorithm>
#include <iterator>

namespace fpt {

std::string brace_name(const std::vector<std::string>& sorted_parts) {
  return "{" + join(sorted_parts, ",") + "}";
}

namespace {

bool subset_of(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::validate(
    const std::vector<std::vector<std::string>>& raw_facets,
    std::map<std::string, std::vector<std::string>> labels) {
  SimplicialComplex K;
  std::set<std::string> names;
  for (const auto& f : raw_facets) {
    if (f.empty()) throw input_error("facet must be a nonempty vertex list");
    std::set<std::string> seen;
    for (const auto& v : f) {
      if (!seen.insert(v).second)
        throw input_error("facet repeats vertex '" + v + "'");
      names.insert(v);
    }
  }
  K.vertices_.assign(names.begin(), names.end());

  std::set<Simplex> sets;
  for (const auto& f : raw_facets) {
    Simplex s;
    for (const auto& v : f) s.push_back(K.require_id(v));
    std::sort(s.begin(), s.end());
    sets.insert(std::move(s));
  }
  // Absorb non-maximal facets. Larger sets first so one pass suffices.
  std::vector<Simplex> by_size(sets.begin(), sets.end());
  std::stable_sort(by_size.begin(), by_size.end(),
                   [](const Simplex& a, const Simplex& b) {
                     return a.size() > b.size();
                   });
  for (const auto& s : by_size) {
    bool absorbed = false;
    for (const auto& kept : K.facets_)
      if (subset_of(s, kept)) {
        absorbed = true;
        break;
      }
    if (!absorbed) K.facets_.push_back(s);
  }
  std::sort(K.facets_.begin(), K.facets_.end());
  for (const auto& f : K.facets_)
    K.dim_ = std::max(K.dim_, static_cast<int>(f.size()) - 1);
  for (auto& [k, v] : labels)
    if (K.id_of(k)) K.labels_.emplace(k, std::move(v));
  return K;
}

std::optional<VertexId> SimplicialComplex::id_of(const std::string& name) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - vertices_.begin());
}

VertexId SimplicialComplex::require_id(const std::string& name) const {
  auto id = id_of(name);
  if (!id) throw input_error("unknown vertex '" + name + "'");
  return *id;
}

std::vector<std::string> SimplicialComplex::names_of(const Simplex& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(vertices_.at(v));
  return out;
}

std::optional<Simplex> SimplicialComplex::simplex_from_names(
    const std::vector<std::string>& names) const {
  Simplex s;
  for (const auto& n : names) {
    auto id = id_of(n);
    if (!id) return std::nullopt;
    s.push_back(*id);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!has_simplex(s)) return std::nullopt;
  return s;
}

bool SimplicialComplex::has_simplex(const Simplex& s) const {
  if (s.empty()) return false;
  for (const auto& f : facets_)
    if (subset_of(s, f)) return true;
  return false;
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
  std::set<Simplex> out;
  for (const auto& f : facets_) {
    const std::size_t n = f.size();
    if (n > 28) throw input_error("facet dimension too large to enumerate");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      out.insert(std::move(s));
    }
  }
  std::vector<Simplex> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return v;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int k) const {
  std::vector<Simplex> out;
  for (auto& s : all_simplices())
    if (static_cast<int>(s.size()) == k + 1) out.push_back(s);
  return out;
}

std::vector<Int> SimplicialComplex::f_vector() const {
  std::vector<Int> f(dim_ + 1, Int(0));
  for (const auto& s : all_simplices()) f[s.size() - 1] += 1;
  return f;
}

Int SimplicialComplex::euler_characteristic() const {
  Int chi = 0;
  int sign = 1;
  for (const auto& fk : f_vector()) {
    chi += sign * fk;
    sign = -sign;
  }
  return chi;
}

int SimplicialComplex::deg(const Simplex& s) const {
  int d = 0;
  for (const auto& f : facets_)
    if (subset_of(s, f)) ++d;
  return d;
}

std::pair<int, std::vector<VertexId>> SimplicialComplex::max_degree() const {
  std::vector<int> d(vertices_.size(), 0);
  for (const auto& f : facets_)
    for (VertexId v : f) ++d[v];
  int best = 0;
  for (int x : d) best = std::max(best, x);
  std::vector<VertexId> at;
  for (VertexId v = 0; v < d.size(); ++v)
    if (d[v] == best) at.push_back(v);
  return {best, at};
}

SimplicialMap SimplicialMap::make(
    SimplicialComplex src, SimplicialComplex tgt,
    const std::map<std::string, std::string>& by_name) {
  SimplicialMap m;
  m.assign.resize(src.vertex_count());
  for (VertexId v = 0; v < src.vertex_count(); ++v) {
    auto it = by_name.find(src.name_of(v));
    if (it == by_name.end())
      throw input_error("map does not assign vertex '" + src.name_of(v) + "'");
    m.assign[v] = tgt.require_id(it->second);
  }
  m.source = std::move(src);
  m.target = std::move(tgt);
  for (const auto& f : m.source.facets())
    if (!m.target.has_simplex(m.image(f)))
      throw input_error("map is not simplicial: image of facet {" +
                        join(m.source.names_of(f), ",") +
                        "} is not a simplex of the target");
  return m;
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& K) {
  SimplicialMap m;
  m.source = K;
  m.target = K;
  m.assign.resize(K.vertex_count());
  for (VertexId v = 0; v < K.vertex_count(); ++v) m.assign[v] = v;
  return m;
}

std::string SimplicialMap::image_name(const std::string& src_vertex) const {
  return target.name_of(assign[source.require_id(src_vertex)]);
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(assign[v]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<std::string, std::string> SimplicialMap::assign_by_name() const {
  std::map<std::string, std::string> out;
  for (VertexId v = 0; v < source.vertex_count(); ++v)
    out[source.name_of(v)] = target.name_of(assign[v]);
  return out;
}

SimplicialMap SimplicialMap::compose_after(const SimplicialMap& inner) const {
  if (!same_complex(inner.target, source))
    throw input_error("composition mismatch: inner target differs from outer source");
  SimplicialMap m;
  m.source = inner.source;
  m.target = target;
  m.assign.resize(inner.assign.size());
  for (std::size_t v = 0; v < inner.assign.size(); ++v)
    m.assign[v] = assign[inner.assign[v]];
  return m;
}

SimplicialComplex barycentric(const SimplicialComplex& K) {
  std::map<std::string, std::vector<std::string>> labels;
  for (const auto& s : K.all_simplices()) {
    auto names = K.names_of(s);
    labels[brace_name(names)] = names;
  }
  std::vector<std::vector<std::string>> flags;
  for (const auto& f : K.facets()) {
    std::vector<VertexId> perm(f);
    std::sort(perm.begin(), perm.end());
    do {
      std::vector<std::string> chain;
      Simplex prefix;
      for (VertexId v : perm) {
        prefix.push_back(v);
        Simplex sorted(prefix);
        std::sort(sorted.begin(), sorted.end());
        chain.push_back(brace_name(K.names_of(sorted)));
      }
      flags.push_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return SimplicialComplex::validate(flags, std::move(labels));
}

SimplicialComplex iterated_barycentric(const SimplicialComplex& K, int rounds) {
  SimplicialComplex out = K;
  for (int i = 0; i < rounds; ++i) out = barycentric(out);
  return out;
}

SimplicialMap induced_barycentric_map(const SimplicialMap& phi) {
  SimplicialComplex Kp = barycentric(phi.source);
  SimplicialComplex Lp = barycentric(phi.target);
  std::map<std::string, std::string> by_name;
  for (const auto& name : Kp.vertex_names()) {
    const auto& parts = Kp.labels().at(name);
    std::vector<std::string> img;
    for (const auto& v : parts) img.push_back(phi.image_name(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    by_name[name] = brace_name(img);
  }
  return SimplicialMap::make(std::move(Kp), std::move(Lp), by_name);
}

SimplicialMap iterated_barycentric_map(const SimplicialMap& phi, int rounds) {
  SimplicialMap out = phi;
  for (int i = 0; i < rounds; ++i) out = induced_barycentric_map(out);
  return out;
}

StellarResult stellar_subdivide(const SimplicialComplex& K,
                                const std::vector<std::string>& simplex) {
  auto s = K.simplex_from_names(simplex);
  if (!s) throw input_error("stellar subdivision: not a simplex of the complex");
  auto snames = K.names_of(*s);
  std::string base = "b(" + brace_name(snames) + ")";
  std::string fresh = base + "#0";
  for (int t = 1; K.id_of(fresh); ++t) fresh = base + "#" + std::to_string(t);

  std::vector<std::vector<std::string>> facets;
  for (const auto& f : K.facets()) {
    if (!subset_of(*s, f)) {
      facets.push_back(K.names_of(f));
      continue;
    }
    for (VertexId w : *s) {
      std::vector<std::string> g{fresh};
      for (VertexId u : f)
        if (u != w) g.push_back(K.name_of(u));
      facets.push_back(std::move(g));
    }
  }
  auto labels = K.labels();
  labels[fresh] = snames;
  return {SimplicialComplex::validate(facets, std::move(labels)), fresh};
}

PseudomanifoldReport pseudomanifold_check(const SimplicialComplex& K) {
  PseudomanifoldReport rep;
  rep.dim = K.dim();
  if (K.dim() < 0) {
    rep.detail = "empty complex";
    return rep;
  }
  rep.pure = true;
  for (const auto& f : K.facets())
    if (static_cast<int>(f.size()) != K.dim() + 1) rep.pure = false;
  if (!rep.pure) {
    rep.detail = "not pure";
    return rep;
  }

  // (n-1)-face -> incident facet indices.
  std::map<Simplex, std::vector<int>> star;
  const auto& facets = K.facets();
  for (int i = 0; i < static_cast<int>(facets.size()); ++i) {
    const auto& f = facets[i];
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Simplex face;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != drop) face.push_back(f[j]);
      star[face].push_back(i);
    }
  }

  std::vector<int> comp(facets.size(), -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    const auto& f = facets[i];
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Simplex face;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != drop) face.push_back(f[j]);
      for (int k : star[face])
        if (comp[k] < 0) {
          comp[k] = 0;
          stack.push_back(k);
        }
    }
  }
  rep.strongly_connected =
      std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });

  rep.closed = true;
  for (const auto& [face, inc] : star)
    if (inc.size() != 2) rep.closed = false;
  if (!rep.closed) {
    rep.detail = "has boundary or branching along a codimension-1 face";
    return rep;
  }
  if (!rep.strongly_connected) {
    rep.detail = "facet adjacency graph is disconnected";
    return rep;
  }

  // Propagate coherent facet signs from the first facet; a conflict on any
  // shared face means non-orientable.
  auto face_sign = [&](int fi, const Simplex& face) {
    const auto& f = facets[fi];
    for (std::size_t j = 0; j < f.size(); ++j)
      if (!std::binary_search(face.begin(), face.end(), f[j]))
        return (j % 2 == 0) ? 1 : -1;
    throw std::logic_error("face not in facet");
  };
  std::vector<int> sign(facets.size(), 0);
  sign[0] = 1;
  stack = {0};
  bool ok = true;
  while (!stack.empty() && ok) {
    int i = stack.back();
    stack.pop_back();
    const auto& f = facets[i];
    for (std::size_t drop = 0; drop < f.size() && ok; ++drop) {
      Simplex face;
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != drop) face.push_back(f[j]);
      for (int k : star[face]) {
        if (k == i) continue;
        int want = -sign[i] * face_sign(i, face) * face_sign(k, face);
        if (sign[k] == 0) {
          sign[k] = want;
          stack.push_back(k);
        } else if (sign[k] != want) {
          ok = false;
          break;
        }
      }
    }
  }
  rep.orientable = ok;
  if (ok) {
    rep.facet_signs = sign;
    rep.detail = "closed orientable pseudomanifold";
  } else {
    rep.detail = "closed non-orientable pseudomanifold";
  }
  return rep;
}

MappingCylinder mapping_cylinder(const SimplicialMap& phi,
                                 const std::vector<std::string>& source_order) {
  const SimplicialComplex& K = phi.source;
  const SimplicialComplex& L = phi.target;
  if (K.dim() < 0) throw input_error("mapping cylinder of an empty source");

  std::vector<std::string> order =
      source_order.empty() ? K.vertex_names() : source_order;
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != K.vertex_names())
      throw input_error("cylinder order must list every source vertex once");
  }
  std::vector<int> rank(K.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i)
    rank[K.require_id(order[i])] = static_cast<int>(i);

  // Source copies keep their names unless they collide with target names.
  std::string prefix;
  {
    bool collide = true;
    while (collide) {
      collide = false;
      for (const auto& v : K.vertex_names())
        if (L.id_of(prefix + v)) {
          collide = true;
          prefix = "src:" + prefix;
          break;
        }
    }
  }
  auto src_name = [&](VertexId v) { return prefix + K.name_of(v); };

  std::vector<std::vector<std::string>> gens;
  for (const auto& f : L.facets()) gens.push_back(L.names_of(f));
  for (const auto& s : K.all_simplices()) {
    std::vector<VertexId> vs(s);
    std::sort(vs.begin(), vs.end(),
              [&](VertexId a, VertexId b) { return rank[a] < rank[b]; });
    for (std::size_t l = 0; l < vs.size(); ++l) {
      std::set<std::string> g;
      for (std::size_t i = 0; i <= l; ++i) g.insert(src_name(vs[i]));
      for (std::size_t i = l; i < vs.size(); ++i)
        g.insert(L.name_of(phi.assign[vs[i]]));
      gens.emplace_back(g.begin(), g.end());
    }
  }

  std::map<std::string, std::vector<std::string>> labels = L.labels();
  for (const auto& [k, v] : K.labels()) labels[prefix + k] = v;

  MappingCylinder out;
  out.Z = SimplicialComplex::validate(gens, std::move(labels));

  std::map<std::string, std::string> i_assign, j_assign, p_assign;
  for (VertexId v = 0; v < K.vertex_count(); ++v) {
    i_assign[K.name_of(v)] = src_name(v);
    p_assign[src_name(v)] = L.name_of(phi.assign[v]);
  }
  for (const auto& w : L.vertex_names()) {
    j_assign[w] = w;
    p_assign[w] = w;
  }
  out.include_source = SimplicialMap::make(K, out.Z, i_assign);
  out.include_target = SimplicialMap::make(L, out.Z, j_assign);
  out.project = SimplicialMap::make(out.Z, L, p_assign);
  return out;
}

SimplicialComplex carrier_hull(
    const SimplicialComplex& K,
    const std::vector<std::vector<std::string>>& members) {
  if (members.empty()) throw input_error("carrier hull of an empty family");
  if (members.size() > 24)
    throw input_error("carrier hull family too large");
  std::vector<Simplex> ms;
  for (const auto& m : members) {
    auto s = K.simplex_from_names(m);
    if (!s) throw input_error("carrier hull: member is not a simplex");
    ms.push_back(*s);
  }
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      Simplex inter;
      std::set_intersection(ms[i].begin(), ms[i].end(), ms[j].begin(),
                            ms[j].end(), std::back_inserter(inter));
      bool ok = inter.empty() || subset_of(ms[i], ms[j]) || subset_of(ms[j], ms[i]);
      if (!ok)
        throw input_error(
            "carrier hull: members must be pairwise comparable or disjoint");
    }

  std::set<Simplex> unions;
  for (std::uint32_t mask = 1; mask < (1u << ms.size()); ++mask) {
    Simplex u;
    for (std::size_t i = 0; i < ms.size(); ++i)
      if (mask & (1u << i)) {
        Simplex merged;
        std::set_union(u.begin(), u.end(), ms[i].begin(), ms[i].end(),
                       std::back_inserter(merged));
        u = std::move(merged);
      }
    unions.insert(std::move(u));
  }
  if (!K.has_simplex(*unions.rbegin()))
    throw input_error("carrier hull: total union is not a simplex");

  // Facets of the hull are the maximal chains of the union poset.
  std::vector<Simplex> U(unions.begin(), unions.end());
  std::vector<std::vector<std::string>> chains;
  std::vector<int> chain;
  auto extend = [&](auto&& self, int at) -> void {
    chain.push_back(at);
    bool extended = false;
    for (int nxt = 0; nxt < static_cast<int>(U.size()); ++nxt) {
      if (nxt == at || U[nxt].size() <= U[at].size()) continue;
      if (!subset_of(U[at], U[nxt])) continue;
      // Saturated step: no member strictly between.
      bool saturated = true;
      for (int mid = 0; mid < static_cast<int>(U.size()) && saturated; ++mid) {
        if (mid == at || mid == nxt) continue;
        if (U[mid].size() > U[at].size() && U[mid].size() < U[nxt].size() &&
            subset_of(U[at], U[mid]) && subset_of(U[mid], U[nxt]))
          saturated = false;
      }
      if (saturated) {
        extended = true;
        self(self, nxt);
      }
    }
    if (!extended) {
      std::vector<std::string> names;
      for (int i : chain) names.push_back(brace_name(K.names_of(U[i])));
      chains.push_back(std::move(names));
    }
    chain.pop_back();
  };
  for (int i = 0; i < static_cast<int>(U.size()); ++i) {
    bool minimal = true;
    for (int j = 0; j < static_cast<int>(U.size()); ++j)
      if (j != i && subset_of(U[j], U[i])) minimal = false;
    if (minimal) extend(extend, i);
  }

  std::map<std::string, std::vector<std::string>> labels;
  for (const auto& u : U) {
    auto names = K.names_of(u);
    labels[brace_name(names)] = names;
  }
  return SimplicialComplex::validate(chains, std::move(labels));
}

Rat mesh_shrink(int dim, int rounds) {
  if (dim < 0) throw input_error("mesh shrink of an empty complex");
  if (rounds < 0) throw input_error("negative subdivision depth");
  Rat r(1);
  Rat step(Int(dim), Int(dim + 1));
  for (int i = 0; i < rounds; ++i) r *= step;
  return r;
}

SimplicialComplex relabel(const SimplicialComplex& K,
                          const std::map<std::string, std::string>& ren) {
  auto newname = [&](const std::string& v) {
    auto it = ren.find(v);
    return it == ren.end() ? v : it->second;
  };
  std::set<std::string> seen;
  for (const auto& v : K.vertex_names())
    if (!seen.insert(newname(v)).second)
      throw input_error("relabel collides on '" + newname(v) + "'");
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : K.facets()) {
    std::vector<std::string> g;
    for (VertexId v : f) g.push_back(newname(K.name_of(v)));
    facets.push_back(std::move(g));
  }
  std::map<std::string, std::vector<std::string>> labels;
  for (const auto& [k, v] : K.labels()) labels[newname(k)] = v;
  return SimplicialComplex::validate(facets, std::move(labels));
}

SimplicialComplex prefix_vertices(const SimplicialComplex& K,
                                  const std::string& prefix) {
  std::map<std::string, std::string> ren;
  for (const auto& v : K.vertex_names()) ren[v] = prefix + v;
  return relabel(K, ren);
}

SimplicialComplex glue_union(const SimplicialComplex& A,
                             const SimplicialComplex& B) {
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : A.facets()) facets.push_back(A.names_of(f));
  for (const auto& f : B.facets()) facets.push_back(B.names_of(f));
  std::map<std::string, std::vector<std::string>> labels = A.labels();
  for (const auto& [k, v] : B.labels()) {
    auto it = labels.find(k);
    if (it != labels.end() && it->second != v)
      throw input_error("glue: conflicting labels on vertex '" + k + "'");
    labels.emplace(k, v);
  }
  return SimplicialComplex::validate(facets, std::move(labels));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& K,
                                     const std::set<std::string>& verts) {
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : K.facets()) {
    std::vector<std::string> g;
    for (VertexId v : f)
      if (verts.count(K.name_of(v))) g.push_back(K.name_of(v));
    if (!g.empty()) facets.push_back(std::move(g));
  }
  if (facets.empty()) return {};
  return SimplicialComplex::validate(facets);
}

bool same_complex(const SimplicialComplex& A, const SimplicialComplex& B) {
  return A.vertex_names() == B.vertex_names() && A.facets() == B.facets();
}

bool is_full_subcomplex(const SimplicialComplex& L,
                        const SimplicialComplex& sub) {
  std::set<std::string> verts(sub.vertex_names().begin(),
                              sub.vertex_names().end());
  for (const auto& f : sub.facets())
    if (!L.simplex_from_names(sub.names_of(f))) return false;
  return same_complex(induced_subcomplex(L, verts), sub);
}

}  // namespace fpt
