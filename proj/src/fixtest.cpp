#include "fixtest.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <thread>

namespace fpt {

namespace {

bool facet_image_extends(const SimplicialComplex& K,
                         const std::vector<int>& assign, const Simplex& facet) {
  // Image of the assigned part of the facet must fit inside some facet;
  // if fully assigned it must not matter here whether it is proper.
  Simplex img;
  for (VertexId v : facet)
    if (assign[v] >= 0) img.push_back(static_cast<VertexId>(assign[v]));
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  if (img.empty()) return true;
  return K.has_simplex(img);
}

std::string serialize_map(const SimplicialComplex& K,
                          const std::vector<int>& assign) {
  std::vector<std::string> parts;
  for (VertexId v = 0; v < K.vertex_count(); ++v)
    parts.push_back(K.name_of(v) + "->" +
                    K.name_of(static_cast<VertexId>(assign[v])));
  return join(parts, ", ");
}

struct FspSearch {
  const SimplicialComplex& K;
  std::vector<Simplex> simplices;
  std::vector<std::vector<int>> simplices_by_max;  // simplex indices
  std::vector<std::vector<int>> facets_with;       // facet indices per vertex
  long long max_nodes;
  long long nodes = 0;
  bool blown = false;
  std::vector<int> assign;
  std::optional<std::vector<int>> witness;

  FspSearch(const SimplicialComplex& k, long long budget)
      : K(k), max_nodes(budget) {
    simplices = K.all_simplices();
    simplices_by_max.resize(K.vertex_count());
    for (std::size_t i = 0; i < simplices.size(); ++i)
      simplices_by_max[simplices[i].back()].push_back(static_cast<int>(i));
    facets_with.resize(K.vertex_count());
    for (std::size_t f = 0; f < K.facets().size(); ++f)
      for (VertexId v : K.facets()[f]) facets_with[v].push_back(static_cast<int>(f));
    assign.assign(K.vertex_count(), -1);
  }

  bool admissible(VertexId v) const {
    for (int fi : facets_with[v])
      if (!facet_image_extends(K, assign, K.facets()[fi])) return false;
    // Prune branches whose assigned part already fixes a simplex.
    for (int si : simplices_by_max[v]) {
      const Simplex& s = simplices[si];
      Simplex img;
      for (VertexId u : s) img.push_back(static_cast<VertexId>(assign[u]));
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (img == s) return false;
    }
    return true;
  }

  // Returns true to stop the whole search.
  bool dfs(VertexId v) {
    if (++nodes > max_nodes) {
      blown = true;
      return true;
    }
    if (v == K.vertex_count()) {
      witness = assign;
      return true;
    }
    for (VertexId w = 0; w < K.vertex_count(); ++w) {
      assign[v] = static_cast<int>(w);
      if (admissible(v) && dfs(v + 1)) return true;
    }
    assign[v] = -1;
    return false;
  }
};

Certificate merge_candidate_results(std::vector<Certificate> per_candidate) {
  Certificate out;
  long long nodes = 0;
  for (auto& c : per_candidate) {
    nodes += c.nodes;
    if (c.status == CertStatus::refuted) {
      c.nodes = nodes;
      return c;
    }
    if (c.status == CertStatus::inconclusive) {
      c.nodes = nodes;
      return c;
    }
    out = c;
  }
  out.nodes = nodes;
  return out;
}

// Runs fn(candidate) for each first-level candidate, in parallel when asked,
// and merges in canonical candidate order.
Certificate fan_out(int candidates, int jobs,
                    const std::function<Certificate(int)>& fn) {
  std::vector<Certificate> results(candidates);
  if (jobs <= 1 || candidates <= 1) {
    for (int c = 0; c < candidates; ++c) {
      results[c] = fn(c);
      if (results[c].status != CertStatus::holds) {
        results.resize(c + 1);
        break;
      }
    }
    return merge_candidate_results(std::move(results));
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      int c = next.fetch_add(1);
      if (c >= candidates) return;
      results[c] = fn(c);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < std::min(jobs, candidates); ++t)
    pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return merge_candidate_results(std::move(results));
}

}  // namespace

Certificate fsp_check(const SimplicialComplex& K, const SearchBudget& budget) {
  Certificate base;
  base.property = "fsp";
  if (K.dim() < 0) {
    base.status = CertStatus::holds;
    base.detail = "empty complex has no self-maps to refute";
    return base;
  }
  auto run = [&](int first) {
    FspSearch s(K, budget.max_nodes);
    Certificate c;
    c.property = "fsp";
    s.assign[0] = first;
    bool stopped = s.admissible(0) && s.dfs(1);
    ++s.nodes;
    c.nodes = s.nodes;
    if (s.blown) {
      c.status = CertStatus::inconclusive;
      c.detail = "node budget exceeded";
    } else if (stopped && s.witness) {
      c.status = CertStatus::refuted;
      c.detail = "self-map without fixed simplex";
      std::vector<int> w = *s.witness;
      for (VertexId v = 0; v < K.vertex_count(); ++v)
        c.witness[K.name_of(v)] = K.name_of(static_cast<VertexId>(w[v]));
    } else {
      c.status = CertStatus::holds;
    }
    return c;
  };
  Certificate out = fan_out(static_cast<int>(K.vertex_count()), budget.jobs, run);
  if (out.status == CertStatus::holds)
    out.detail = "every simplicial self-map fixes a simplex";
  return out;
}

Certificate fsp_check_naive(const SimplicialComplex& K,
                            const SearchBudget& budget) {
  Certificate c;
  c.property = "fsp";
  const int n = static_cast<int>(K.vertex_count());
  if (n == 0) {
    c.status = CertStatus::holds;
    return c;
  }
  auto simplices = K.all_simplices();
  std::vector<int> assign(n, 0);
  for (;;) {
    if (++c.nodes > budget.max_nodes) {
      c.status = CertStatus::inconclusive;
      c.detail = "node budget exceeded";
      return c;
    }
    bool simplicial = true;
    for (const auto& f : K.facets()) {
      Simplex img;
      for (VertexId v : f) img.push_back(static_cast<VertexId>(assign[v]));
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (!K.has_simplex(img)) {
        simplicial = false;
        break;
      }
    }
    if (simplicial) {
      bool fixes = false;
      for (const auto& s : simplices) {
        Simplex img;
        for (VertexId v : s) img.push_back(static_cast<VertexId>(assign[v]));
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (img == s) {
          fixes = true;
          break;
        }
      }
      if (!fixes) {
        c.status = CertStatus::refuted;
        c.detail = "self-map without fixed simplex";
        for (VertexId v = 0; v < K.vertex_count(); ++v)
          c.witness[K.name_of(v)] = K.name_of(static_cast<VertexId>(assign[v]));
        return c;
      }
    }
    int i = n - 1;
    while (i >= 0 && assign[i] == n - 1) assign[i--] = 0;
    if (i < 0) break;
    ++assign[i];
  }
  c.status = CertStatus::holds;
  c.detail = "every simplicial self-map fixes a simplex";
  return c;
}

namespace {

struct FppSearch {
  const FinitePoset& X;
  std::vector<PointId> order;  // processing order
  long long max_nodes;
  long long nodes = 0;
  bool blown = false;
  std::vector<int> assign;  // by point id
  std::optional<std::vector<int>> witness;

  FppSearch(const FinitePoset& x, std::vector<PointId> ord, long long budget)
      : X(x), order(std::move(ord)), max_nodes(budget) {
    assign.assign(X.size(), -1);
  }

  bool admissible(PointId p, PointId q) const {
    if (p == q) return false;  // would be a fixed point
    for (PointId r = 0; r < X.size(); ++r) {
      if (assign[r] < 0 || r == p) continue;
      PointId fr = static_cast<PointId>(assign[r]);
      if (X.lt(r, p) && !X.leq(fr, q)) return false;
      if (X.lt(p, r) && !X.leq(q, fr)) return false;
    }
    return true;
  }

  bool dfs(std::size_t step) {
    if (++nodes > max_nodes) {
      blown = true;
      return true;
    }
    if (step == order.size()) {
      witness = assign;
      return true;
    }
    PointId p = order[step];
    for (PointId q = 0; q < X.size(); ++q) {
      if (!admissible(p, q)) continue;
      assign[p] = static_cast<int>(q);
      if (dfs(step + 1)) return true;
      assign[p] = -1;
    }
    return false;
  }
};

std::vector<PointId> linear_extension(const FinitePoset& X) {
  std::vector<int> indeg(X.size(), 0);
  std::vector<std::vector<PointId>> succ(X.size());
  for (auto [a, b] : X.covers()) {
    succ[a].push_back(b);
    ++indeg[b];
  }
  std::set<PointId> ready;
  for (PointId p = 0; p < X.size(); ++p)
    if (indeg[p] == 0) ready.insert(p);
  std::vector<PointId> order;
  while (!ready.empty()) {
    PointId p = *ready.begin();  // least available point first
    ready.erase(ready.begin());
    order.push_back(p);
    for (PointId q : succ[p])
      if (--indeg[q] == 0) ready.insert(q);
  }
  return order;
}

Certificate fpp_from_search(const FinitePoset& X, FppSearch& s, bool stopped) {
  Certificate c;
  c.property = "fpp";
  c.nodes = s.nodes;
  if (s.blown) {
    c.status = CertStatus::inconclusive;
    c.detail = "node budget exceeded";
  } else if (stopped && s.witness) {
    c.status = CertStatus::refuted;
    c.detail = "monotone self-map without fixed point";
    for (PointId p = 0; p < X.size(); ++p)
      c.witness[X.name_of(p)] = X.name_of(static_cast<PointId>((*s.witness)[p]));
  } else {
    c.status = CertStatus::holds;
    c.detail = "every monotone self-map has a fixed point";
  }
  return c;
}

}  // namespace

Certificate fpp_check(const FinitePoset& X, const SearchBudget& budget) {
  Certificate base;
  base.property = "fpp";
  if (X.size() == 0) {
    base.status = CertStatus::holds;
    base.detail = "empty poset";
    return base;
  }
  std::vector<PointId> ext = linear_extension(X);
  auto run = [&](int first) {
    FppSearch s(X, ext, budget.max_nodes);
    Certificate c;
    c.property = "fpp";
    PointId p0 = ext[0];
    if (!s.admissible(p0, static_cast<PointId>(first))) {
      ++s.nodes;
      c.nodes = s.nodes;
      c.status = CertStatus::holds;
      return c;
    }
    s.assign[p0] = first;
    bool stopped = s.dfs(1);
    ++s.nodes;
    return fpp_from_search(X, s, stopped);
  };
  Certificate out = fan_out(static_cast<int>(X.size()), budget.jobs, run);
  if (out.status == CertStatus::holds)
    out.detail = "every monotone self-map has a fixed point";

  if (out.status == CertStatus::refuted) {
    // Canonical witness: redo the search processing points in name order, so
    // the first map found is the least in pointwise lexicographic order.
    std::vector<PointId> ids(X.size());
    for (PointId p = 0; p < X.size(); ++p) ids[p] = p;
    FppSearch s(X, ids, budget.max_nodes);
    bool stopped = s.dfs(0);
    if (!s.blown && stopped && s.witness) {
      Certificate canon = fpp_from_search(X, s, stopped);
      canon.nodes += out.nodes;
      return canon;
    }
  }
  return out;
}

Certificate fpp_check_naive(const FinitePoset& X, const SearchBudget& budget) {
  Certificate c;
  c.property = "fpp";
  const int n = static_cast<int>(X.size());
  if (n == 0) {
    c.status = CertStatus::holds;
    return c;
  }
  std::vector<int> assign(n, 0);
  for (;;) {
    if (++c.nodes > budget.max_nodes) {
      c.status = CertStatus::inconclusive;
      c.detail = "node budget exceeded";
      return c;
    }
    bool ok = true;
    for (int p = 0; p < n && ok; ++p)
      if (assign[p] == p) ok = false;
    for (int p = 0; p < n && ok; ++p)
      for (int q = 0; q < n && ok; ++q)
        if (X.lt(static_cast<PointId>(p), static_cast<PointId>(q)) &&
            !X.leq(static_cast<PointId>(assign[p]),
                   static_cast<PointId>(assign[q])))
          ok = false;
    if (ok) {
      c.status = CertStatus::refuted;
      c.detail = "monotone self-map without fixed point";
      for (PointId p = 0; p < X.size(); ++p)
        c.witness[X.name_of(p)] = X.name_of(static_cast<PointId>(assign[p]));
      return c;
    }
    int i = n - 1;
    while (i >= 0 && assign[i] == n - 1) assign[i--] = 0;
    if (i < 0) break;
    ++assign[i];
  }
  c.status = CertStatus::holds;
  c.detail = "every monotone self-map has a fixed point";
  return c;
}

std::vector<std::vector<VertexId>> automorphisms(const SimplicialComplex& K) {
  std::vector<std::vector<VertexId>> out;
  const int n = static_cast<int>(K.vertex_count());
  if (n == 0) return out;

  std::vector<std::vector<int>> inv(n);
  std::vector<std::vector<int>> facets_with(n);
  for (std::size_t f = 0; f < K.facets().size(); ++f)
    for (VertexId v : K.facets()[f]) {
      inv[v].push_back(static_cast<int>(K.facets()[f].size()));
      facets_with[v].push_back(static_cast<int>(f));
    }
  for (auto& i : inv) std::sort(i.begin(), i.end());

  std::set<Simplex> facet_set(K.facets().begin(), K.facets().end());
  std::vector<int> assign(n, -1);
  std::vector<char> used(n, 0);

  std::function<void(int)> dfs = [&](int v) {
    if (v == n) {
      out.emplace_back(assign.begin(), assign.end());
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || inv[v] != inv[w]) continue;
      assign[v] = w;
      bool ok = true;
      for (int fi : facets_with[v]) {
        const Simplex& f = K.facets()[fi];
        Simplex img;
        bool full = true;
        for (VertexId u : f) {
          if (assign[u] < 0) {
            full = false;
            continue;
          }
          img.push_back(static_cast<VertexId>(assign[u]));
        }
        std::sort(img.begin(), img.end());
        if (full ? !facet_set.count(img) : !K.has_simplex(img)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[w] = 1;
        dfs(v + 1);
        used[w] = 0;
      }
      assign[v] = -1;
    }
  };
  dfs(0);
  return out;
}

std::vector<std::vector<PointId>> automorphisms(const FinitePoset& X) {
  std::vector<std::vector<PointId>> out;
  const int n = static_cast<int>(X.size());
  if (n == 0) return out;

  std::vector<std::array<int, 4>> inv(n);
  {
    std::vector<int> into(n, 0), from(n, 0);
    for (auto [a, b] : X.covers()) {
      ++from[a];
      ++into[b];
    }
    for (int p = 0; p < n; ++p)
      inv[p] = {into[p], from[p],
                static_cast<int>(X.strict_down(static_cast<PointId>(p)).size()),
                static_cast<int>(X.strict_up(static_cast<PointId>(p)).size())};
  }

  std::vector<int> assign(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> dfs = [&](int p) {
    if (p == n) {
      out.emplace_back(assign.begin(), assign.end());
      return;
    }
    for (int q = 0; q < n; ++q) {
      if (used[q] || inv[p] != inv[q]) continue;
      bool ok = true;
      for (int r = 0; r < p && ok; ++r) {
        PointId fr = static_cast<PointId>(assign[r]);
        if (X.lt(static_cast<PointId>(p), static_cast<PointId>(r)) !=
            X.lt(static_cast<PointId>(q), fr))
          ok = false;
        if (X.lt(static_cast<PointId>(r), static_cast<PointId>(p)) !=
            X.lt(fr, static_cast<PointId>(q)))
          ok = false;
      }
      if (ok) {
        assign[p] = q;
        used[q] = 1;
        dfs(p + 1);
        used[q] = 0;
        assign[p] = -1;
      }
    }
  };
  dfs(0);
  return out;
}

std::vector<VertexId> universally_fixed(const SimplicialComplex& K) {
  std::vector<VertexId> fixed;
  auto auts = automorphisms(K);
  for (VertexId v = 0; v < K.vertex_count(); ++v) {
    bool all = true;
    for (const auto& a : auts)
      if (a[v] != v) {
        all = false;
        break;
      }
    if (all) fixed.push_back(v);
  }
  return fixed;
}

bool is_asymmetric(const SimplicialComplex& K) {
  return K.vertex_count() > 0 && !universally_fixed(K).empty();
}

AsymmetrizeResult asymmetrize(const SimplicialComplex& M) {
  const int n = M.dim();
  auto pm = pseudomanifold_check(M);
  if (n < 2) {
    if (n == 1 && pm.closed_pseudomanifold())
      throw input_error("no 1-dimensional pseudomanifold is asymmetric");
    throw input_error("asymmetrize requires dimension >= 2");
  }
  if (!pm.closed_pseudomanifold())
    throw input_error("asymmetrize requires a closed pseudomanifold: " +
                      pm.detail);

  AsymmetrizeResult res;
  res.L = M;
  {
    auto [d, at] = M.max_degree();
    (void)d;
    res.apex = M.name_of(at.front());
  }

  for (res.passes = 0; res.passes < 10; ++res.passes) {
    VertexId apex = res.L.require_id(res.apex);
    auto [dmax, at] = res.L.max_degree();
    int apex_deg = res.L.deg({apex});
    bool strict = apex_deg == dmax && at.size() == 1 && at.front() == apex;
    if (strict && apex_deg >= n + 2) break;

    std::vector<std::vector<std::string>> snapshot;
    for (const auto& f : res.L.facets())
      if (std::binary_search(f.begin(), f.end(), apex))
        snapshot.push_back(res.L.names_of(f));
    for (const auto& f : snapshot) res.L = stellar_subdivide(res.L, f).complex;
  }

  VertexId apex = res.L.require_id(res.apex);
  auto [dmax, at] = res.L.max_degree();
  res.apex_degree = res.L.deg({apex});
  res.runner_up_degree = 0;
  {
    for (VertexId v = 0; v < res.L.vertex_count(); ++v)
      if (v != apex)
        res.runner_up_degree = std::max(res.runner_up_degree, res.L.deg({v}));
  }
  bool strict = res.apex_degree == dmax && at.size() == 1 && at.front() == apex &&
                res.apex_degree >= n + 2;

  res.certificate.property = "asymmetric";
  if (!strict) {
    res.certificate.status = CertStatus::inconclusive;
    res.certificate.detail = "apex degree did not dominate within the pass cap";
    return res;
  }

  // Exhaustive symmetry check: every automorphism must fix the apex.
  auto auts = automorphisms(res.L);
  bool apex_fixed = true;
  for (const auto& a : auts)
    if (a[apex] != apex) apex_fixed = false;

  // Degree scaling under barycentric subdivision, and uniqueness of the
  // maximal degree at the apex atom.
  SimplicialComplex Lp = barycentric(res.L);
  res.degree_formula_ok = true;
  for (const auto& s : res.L.all_simplices()) {
    int k = static_cast<int>(s.size()) - 1;
    Int expected = factorial(k + 1) * factorial(n - k) * res.L.deg(s);
    Simplex bs{Lp.require_id(brace_name(res.L.names_of(s)))};
    if (Int(Lp.deg(bs)) != expected) res.degree_formula_ok = false;
  }
  {
    auto [dp, atp] = Lp.max_degree();
    std::string apex_atom = brace_name({res.apex});
    res.unique_max_in_prime =
        Int(dp) == factorial(n) * res.apex_degree && atp.size() == 1 &&
        Lp.name_of(atp.front()) == apex_atom;
  }

  if (apex_fixed && res.degree_formula_ok && res.unique_max_in_prime) {
    res.certificate.status = CertStatus::holds;
    res.certificate.witness["fixed_vertex"] = res.apex;
    res.certificate.detail =
        "all " + std::to_string(auts.size()) + " automorphisms fix the apex";
  } else {
    res.certificate.status = CertStatus::inconclusive;
    res.certificate.detail = "certification checks failed";
  }
  return res;
}

DecompositionReport fsp_decomposition_certify(const SimplicialComplex& K,
                                              const std::string& apex,
                                              const SearchBudget& budget) {
  DecompositionReport rep;
  VertexId apex_id = K.require_id(apex);
  ChainComplex cc(K);
  HomologyResult hom = homology(cc, false, true);
  auto simplices = K.all_simplices();
  std::set<Simplex> facet_set(K.facets().begin(), K.facets().end());

  FspSearch search(K, budget.max_nodes);
  rep.certified = true;

  // Enumerate every simplicial self-map (prune only on simpliciality).
  std::vector<int>& assign = search.assign;
  std::function<bool(VertexId)> walk = [&](VertexId v) -> bool {
    if (++rep.nodes > budget.max_nodes) return false;
    if (v == K.vertex_count()) {
      ++rep.maps_total;
      std::vector<VertexId> a(assign.begin(), assign.end());

      ChainMap fm;
      fm.cols.resize(cc.top_dim() + 1);
      for (int k = 0; k <= cc.top_dim(); ++k) {
        fm.cols[k].resize(cc.count(k));
        for (int j = 0; j < cc.count(k); ++j) {
          const Simplex& s = cc.basis(k)[j];
          std::vector<VertexId> img;
          for (VertexId u : s) img.push_back(a[u]);
          std::vector<VertexId> sorted(img);
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            continue;
          int par = 1;
          for (std::size_t x = 0; x < img.size(); ++x)
            for (std::size_t y = x + 1; y < img.size(); ++y)
              if (img[y] < img[x]) par = -par;
          fm.cols[k][j] = {{cc.index_of(k, sorted), Int(par)}};
        }
      }
      Rat L(0);
      for (int k = 0; k <= cc.top_dim(); ++k) {
        RatMat Mk = homology_matrix(fm, k, cc, hom, hom);
        Rat tr(0);
        for (int i = 0; i < std::min(Mk.rows, Mk.cols); ++i) tr += Mk.at(i, i);
        L += (k % 2 == 0 ? tr : -tr);
      }

      bool certified = false;
      if (L != Rat(0)) {
        ++rep.by_lefschetz;
        certified = true;
      } else {
        std::vector<char> hit(K.vertex_count(), 0);
        bool bijective = true;
        for (VertexId u = 0; u < K.vertex_count(); ++u) {
          if (hit[a[u]]) bijective = false;
          hit[a[u]] = 1;
        }
        bool facets_ok = bijective;
        if (bijective)
          for (const auto& f : K.facets()) {
            Simplex img;
            for (VertexId u : f) img.push_back(a[u]);
            std::sort(img.begin(), img.end());
            if (!facet_set.count(img)) {
              facets_ok = false;
              break;
            }
          }
        if (facets_ok && a[apex_id] == apex_id) {
          ++rep.by_automorphism;
          certified = true;
        }
      }

      bool fixes = false;
      for (const auto& s : simplices) {
        Simplex img;
        for (VertexId u : s) img.push_back(a[u]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        if (img == s) {
          fixes = true;
          break;
        }
      }
      if (!certified || !fixes) {
        rep.certified = false;
        rep.uncertified_map = serialize_map(K, assign);
        return false;
      }
      return true;
    }
    for (VertexId w = 0; w < K.vertex_count(); ++w) {
      assign[v] = static_cast<int>(w);
      bool simplicial = true;
      for (int fi : search.facets_with[v])
        if (!facet_image_extends(K, assign, K.facets()[fi])) {
          simplicial = false;
          break;
        }
      if (simplicial && !walk(v + 1)) return false;
    }
    assign[v] = -1;
    return true;
  };
  if (!walk(0) && rep.certified) {
    rep.certified = false;
    if (rep.uncertified_map.empty())
      rep.uncertified_map = "(node budget exceeded)";
  }
  return rep;
}

LiftResult fsp_to_fpp_lift(const SimplicialComplex& K, const MonotoneMap& f) {
  FinitePoset X = face_poset(K);
  if (!(f.source == X) || !(f.target == X))
    throw input_error("lift requires a self-map of the face poset");

  std::map<std::string, Simplex> decode;
  for (const auto& s : K.all_simplices()) decode[brace_name(K.names_of(s))] = s;

  LiftResult res;
  for (VertexId v = 0; v < K.vertex_count(); ++v) {
    const Simplex& img = decode.at(f.image_name(brace_name({K.name_of(v)})));
    res.g[K.name_of(v)] = K.name_of(img.front());
  }
  SimplicialMap g = SimplicialMap::make(K, K, res.g);

  // X(g) <= f, pointwise.
  for (const auto& s : K.all_simplices()) {
    const Simplex& fs = decode.at(f.image_name(brace_name(K.names_of(s))));
    Simplex gs = g.image(s);
    if (!std::includes(fs.begin(), fs.end(), gs.begin(), gs.end()))
      throw std::logic_error("lift violates X(g) <= f");
  }

  for (const auto& s : K.all_simplices()) {
    if (g.image(s) != s) continue;
    res.has_fixed = true;
    res.fixed_simplex = brace_name(K.names_of(s));
    std::string p = res.fixed_simplex;
    for (std::size_t guard = 0; guard <= X.size(); ++guard) {
      std::string next = f.image_name(p);
      if (next == p) break;
      p = next;
    }
    res.fixed_point = p;
    break;
  }
  return res;
}

}  // namespace fpt
