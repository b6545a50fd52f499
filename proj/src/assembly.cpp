#include "assembly.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>

namespace fpt {

namespace {

int to_small_int(const Int& v, const char* what) {
  if (v < 0 || v > Int(1) << 30)
    throw std::logic_error(std::string(what) + " out of range");
  return static_cast<int>(v);
}

Int int_pow(const Int& b, int e) {
  Int r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Extended gcd, g >= 0 with a*x + b*y = g.
Int egcd(const Int& a, const Int& b, Int& x, Int& y) {
  if (b == 0) {
    if (a < 0) {
      x = -1;
      y = 0;
      return -a;
    }
    x = 1;
    y = 0;
    return a;
  }
  Int x1, y1;
  Int g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

using Rename = std::function<std::string(const std::string&)>;

// Re-expresses a chain in another chain complex by simplex vertex names,
// tracking the orientation sign of the id reordering.
Chain transport_chain(const ChainComplex& src, const Chain& c,
                      const ChainComplex& dst, const Rename& ren = {}) {
  Chain out;
  out.dim = c.dim;
  for (const auto& [idx, coef] : c.coef) {
    const Simplex& s = src.basis(c.dim)[idx];
    std::vector<std::string> names = src.complex().names_of(s);
    Simplex ids;
    ids.reserve(names.size());
    for (const auto& nm : names)
      ids.push_back(dst.complex().require_id(ren ? ren(nm) : nm));
    Int sgn(1);
    for (std::size_t i = 0; i + 1 < ids.size(); ++i)
      for (std::size_t j = 0; j + 1 < ids.size() - i; ++j)
        if (ids[j] > ids[j + 1]) {
          std::swap(ids[j], ids[j + 1]);
          sgn = -sgn;
        }
    int di = dst.index_of(c.dim, ids);
    if (di < 0) throw std::logic_error("chain transport hit a missing simplex");
    out.add(di, sgn * coef);
  }
  return out;
}

Int group_rank(const HomologyResult& h, int k) {
  return k >= 0 && k < static_cast<int>(h.groups.size()) ? h.groups[k].rank
                                                         : Int(0);
}

std::vector<Int> group_torsion(const HomologyResult& h, int k) {
  return k >= 0 && k < static_cast<int>(h.groups.size()) ? h.groups[k].torsion
                                                         : std::vector<Int>{};
}

bool same_homology(const HomologyResult& a, const HomologyResult& b,
                   std::string& why) {
  int m = static_cast<int>(std::max(a.groups.size(), b.groups.size()));
  for (int k = 0; k < m; ++k) {
    if (group_rank(a, k) != group_rank(b, k) ||
        group_torsion(a, k) != group_torsion(b, k)) {
      why = "H_" + std::to_string(k) + " differs";
      return false;
    }
  }
  return true;
}

// Rank of the (k1)-boundary matrix with extra columns appended.
int rank_with_columns(const ChainComplex& cc, int k1,
                      const std::vector<Chain>& extra) {
  SparseTriplets T = cc.boundary_sparse(k1);
  int base = T.cols;
  T.cols += static_cast<int>(extra.size());
  for (std::size_t j = 0; j < extra.size(); ++j)
    for (const auto& [r, v] : extra[j].coef)
      T.entries.emplace_back(r, base + static_cast<int>(j), v);
  return integer_rank(T);
}

// One barycentric round on an f-vector: counts flags of nonempty faces.
std::vector<Int> barycentric_f(const std::vector<Int>& f) {
  int mmax = static_cast<int>(f.size());
  std::vector<std::vector<Int>> g(mmax + 1, std::vector<Int>(mmax, Int(0)));
  for (int m = 1; m <= mmax; ++m) g[m][0] = 1;
  for (int j = 1; j < mmax; ++j)
    for (int m = 1; m <= mmax; ++m) {
      Int acc(0);
      for (int t = 1; t < m; ++t) acc += binomial(m, t) * g[t][j - 1];
      g[m][j] = acc;
    }
  std::vector<Int> out(mmax, Int(0));
  for (int j = 0; j < mmax; ++j) {
    Int acc(0);
    for (int m = j + 1; m <= mmax; ++m) acc += f[m - 1] * g[m][j];
    out[j] = acc;
  }
  return out;
}

std::vector<Int> f_after_rounds(const SimplicialComplex& K, int s) {
  std::vector<Int> f = K.f_vector();
  for (int r = 0; r < s; ++r) f = barycentric_f(f);
  return f;
}

Int facet_count_after(const SimplicialComplex& K, int s) {
  std::map<int, Int> per_dim;
  for (const auto& f : K.facets())
    per_dim[static_cast<int>(f.size()) - 1] += 1;
  Int acc(0);
  for (const auto& [d, c] : per_dim) acc += c * int_pow(factorial(d + 1), s);
  return acc;
}

// Smallest depth at which the mesh bound forces star-sized pieces:
// N * (d/(d+1))^s < 1/(d+1).
int bound_depth(const Int& N, int d) {
  if (N <= 0 || d <= 0) return 0;
  Rat rhs(Int(1), Int(d + 1));
  Rat n(N, Int(1));
  int s = 0;
  while (n * mesh_shrink(d, s) >= rhs) {
    ++s;
    if (s > 100000) throw std::logic_error("mesh bound failed to converge");
  }
  return s;
}

struct CoverOutcome {
  bool verified = false;
  std::string note;
};

// Exhaustively tests that every connected set of at most N simplices of the
// depth-s subdivision lies in a closed star of the base complex, detected
// through carrier unfolding.
CoverOutcome covering_explicit(const SimplicialComplex& P, int s, const Int& N,
                               const SearchBudget& budget) {
  CoverOutcome out;
  if (N <= 1) {
    out.verified = true;
    out.note = "single closed simplices lie in the closed star of any vertex";
    return out;
  }
  const Int simplex_cap(4000);
  {
    std::vector<Int> fs = f_after_rounds(P, s);
    Int total(0);
    for (const auto& v : fs) total += v;
    if (total > simplex_cap) {
      out.note = "depth-" + std::to_string(s) + " target has " + total.str() +
                 " simplices, beyond the enumeration cap; accepted unverified";
      return out;
    }
  }
  std::vector<SimplicialComplex> tower{P};
  for (int r = 0; r < s; ++r) tower.push_back(barycentric(tower.back()));
  const SimplicialComplex& Ps = tower.back();
  std::vector<Simplex> sims = Ps.all_simplices();
  int m = static_cast<int>(sims.size());
  int NN = to_small_int(N, "covering set size");
  int V0 = static_cast<int>(P.vertex_count());
  std::vector<std::vector<char>> allowed(m, std::vector<char>(V0, 0));
  for (int i = 0; i < m; ++i) {
    std::vector<std::string> names;
    for (VertexId v : sims[i]) names.push_back(Ps.name_of(v));
    for (int j = s; j > 0; --j) {
      std::set<std::string> u;
      for (const auto& nm : names) {
        const auto& lab = tower[j].labels().at(nm);
        u.insert(lab.begin(), lab.end());
      }
      names.assign(u.begin(), u.end());
    }
    Simplex car;
    for (const auto& nm : names) car.push_back(P.require_id(nm));
    std::sort(car.begin(), car.end());
    for (int v = 0; v < V0; ++v) {
      Simplex ext = car;
      if (std::find(ext.begin(), ext.end(), static_cast<VertexId>(v)) ==
          ext.end()) {
        ext.push_back(static_cast<VertexId>(v));
        std::sort(ext.begin(), ext.end());
      }
      if (P.has_simplex(ext)) allowed[i][v] = 1;
    }
  }
  std::vector<std::vector<int>> by_vertex(Ps.vertex_count());
  for (int i = 0; i < m; ++i)
    for (VertexId v : sims[i]) by_vertex[v].push_back(i);
  std::vector<std::vector<int>> nb(m);
  for (const auto& bucket : by_vertex)
    for (int i : bucket)
      for (int j : bucket)
        if (i != j) nb[i].push_back(j);
  for (auto& v : nb) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  long long nodes = 0;
  bool blown = false, failed = false;
  std::vector<int> S, witness;
  std::vector<char> inS(m, 0), forb(m, 0), cur(V0, 0);
  int root = 0;
  std::function<void()> rec = [&]() {
    if (blown || failed) return;
    if (++nodes > budget.max_nodes) {
      blown = true;
      return;
    }
    if (static_cast<int>(S.size()) >= NN) return;
    std::set<int> cs;
    for (int i : S)
      for (int j : nb[i])
        if (j > root && !inS[j] && !forb[j]) cs.insert(j);
    std::vector<int> taken;
    for (int u : cs) {
      std::vector<char> save = cur;
      bool any = false;
      for (int v = 0; v < V0; ++v) {
        cur[v] = cur[v] && allowed[u][v];
        if (cur[v]) any = true;
      }
      S.push_back(u);
      inS[u] = 1;
      if (!any) {
        failed = true;
        witness = S;
        return;
      }
      rec();
      S.pop_back();
      inS[u] = 0;
      cur = save;
      if (blown || failed) return;
      forb[u] = 1;
      taken.push_back(u);
    }
    for (int u : taken) forb[u] = 0;
  };
  for (root = 0; root < m && !blown && !failed; ++root) {
    S.assign(1, root);
    inS[root] = 1;
    cur = allowed[root];
    if (std::find(cur.begin(), cur.end(), static_cast<char>(1)) == cur.end()) {
      failed = true;
      witness = S;
      break;
    }
    rec();
    inS[root] = 0;
  }
  if (failed) {
    std::vector<std::string> parts;
    for (int i : witness) {
      std::vector<std::string> nm;
      for (VertexId v : sims[i]) nm.push_back(Ps.name_of(v));
      parts.push_back(brace_name(nm));
    }
    out.note = "connected set escapes every closed star: " + join(parts, " ");
    return out;
  }
  if (blown) {
    out.note = "enumeration budget exhausted after " + std::to_string(nodes) +
               " sets; accepted unverified";
    return out;
  }
  out.verified = true;
  out.note = "all connected sets of at most " + N.str() +
             " simplices lie in closed stars (" + std::to_string(nodes) +
             " sets examined)";
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// degree weighting
// ---------------------------------------------------------------------------

std::string KunReport::failing() const {
  std::vector<std::string> bad;
  for (const auto& c : checks)
    if (!c.pass) bad.push_back(c.name);
  return join(bad, ", ");
}

std::map<std::pair<std::string, std::string>, Int> solve_degree_weights(
    const FinitePoset& X) {
  SimplicialComplex KX = order_complex(X);
  ChainComplex cc(KX);
  HomologyResult h;
  try {
    h = homology(cc, false, true);
  } catch (const std::exception&) {
    return {};
  }
  if (h.groups.size() < 2 || h.groups[1].rank != 1 ||
      !h.groups[1].torsion.empty() || h.groups[1].generators.empty())
    return {};
  std::vector<Int> gv = cc.to_vector(h.groups[1].generators[0]);
  int E = cc.count(1), F = cc.count(2);
  std::vector<std::vector<Int>> kb;
  if (F == 0) {
    for (int e = 0; e < E; ++e) {
      std::vector<Int> unit(E, Int(0));
      unit[e] = 1;
      kb.push_back(std::move(unit));
    }
  } else {
    DenseMat B = cc.boundary_dense(2);
    DenseMat Bt(F, E);
    for (int r = 0; r < E; ++r)
      for (int c = 0; c < F; ++c) Bt.at(c, r) = B.at(r, c);
    kb = kernel_basis(smith_normal_form(Bt));
  }
  std::vector<Int> w(E, Int(0));
  Int g(0);
  for (const auto& kvec : kb) {
    Int v(0);
    for (int e = 0; e < E; ++e) v += kvec[e] * gv[e];
    if (v == 0) continue;
    if (g == 0) {
      w = kvec;
      g = v;
      if (g < 0) {
        g = -g;
        for (auto& we : w) we = -we;
      }
    } else {
      Int xq, yq;
      Int g2 = egcd(g, v, xq, yq);
      for (int e = 0; e < E; ++e) w[e] = xq * w[e] + yq * kvec[e];
      g = g2;
    }
    if (g == 1) break;
  }
  if (g != 1) return {};
  std::map<std::pair<std::string, std::string>, Int> out;
  for (const auto& [p, q] : X.covers()) {
    VertexId a = KX.require_id(X.name_of(p));
    VertexId b = KX.require_id(X.name_of(q));
    Simplex e{std::min(a, b), std::max(a, b)};
    int ei = cc.index_of(1, e);
    if (ei < 0) return {};
    Int val = w[ei];
    if (a > b) val = -val;
    out[{X.name_of(p), X.name_of(q)}] = val;
  }
  return out;
}

// ---------------------------------------------------------------------------
// the 14-point model
// ---------------------------------------------------------------------------

namespace {

FinitePoset crown4(const std::string& pre) {
  std::vector<std::string> pts = {pre + ".lo0", pre + ".lo1", pre + ".hi0",
                                  pre + ".hi1"};
  std::vector<std::pair<std::string, std::string>> cov;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      cov.emplace_back(pre + ".lo" + std::to_string(i),
                       pre + ".hi" + std::to_string(j));
  return FinitePoset::from_covers(pts, cov);
}

FinitePoset circle8() {
  std::vector<std::string> pts;
  std::vector<std::pair<std::string, std::string>> cov;
  for (int i = 0; i < 4; ++i) {
    pts.push_back("a" + std::to_string(i));
    pts.push_back("b" + std::to_string(i));
  }
  for (int i = 0; i < 4; ++i) {
    cov.emplace_back("a" + std::to_string(i), "b" + std::to_string(i));
    cov.emplace_back("a" + std::to_string((i + 1) % 4),
                     "b" + std::to_string(i));
  }
  return FinitePoset::from_covers(pts, cov);
}

int crown_pos(const std::string& name) {
  std::string tail = name.substr(name.find('.') + 1);
  if (tail == "lo0") return 0;
  if (tail == "hi0") return 1;
  if (tail == "lo1") return 2;
  return 3;
}

// Net number of times the 8-cycle walk wraps the 4-crown under g.
std::optional<int> cycle_winding(const FinitePoset& C8, const FinitePoset& T,
                                 const std::vector<int>& g) {
  static const std::array<const char*, 8> walk = {"a0", "b0", "a1", "b1",
                                                  "a2", "b2", "a3", "b3"};
  int total = 0;
  for (int i = 0; i < 8; ++i) {
    int u = crown_pos(T.name_of(static_cast<PointId>(g[C8.require_id(walk[i])])));
    int v = crown_pos(T.name_of(
        static_cast<PointId>(g[C8.require_id(walk[(i + 1) % 8])])));
    int d = ((v - u) % 4 + 4) % 4;
    if (d == 2) return std::nullopt;
    total += (d == 3) ? -1 : d;
  }
  if (total % 4 != 0) return std::nullopt;
  return total / 4;
}

// Derives the canonical names from structure: the unique short doubled cycle
// fixes the outer crown, the core after deleting its tops fixes the inner
// one, everything else becomes p1..p6 in name order.
std::optional<FinitePoset> name_model(const FinitePoset& P,
                                      const SearchBudget& budget) {
  if (P.size() != 14) return std::nullopt;
  SimplicialComplex KX = order_complex(P);
  ChainComplex cc(KX);
  HomologyResult h;
  try {
    h = homology(cc, false, true);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (group_rank(h, 0) != 1 || !group_torsion(h, 0).empty()) return std::nullopt;
  if (group_rank(h, 1) != 1 || !group_torsion(h, 1).empty()) return std::nullopt;
  for (std::size_t k = 2; k < h.groups.size(); ++k)
    if (h.groups[k].rank != 0 || !h.groups[k].torsion.empty())
      return std::nullopt;
  Chain gen = h.groups[1].generators[0];
  Chain tg;
  tg.dim = 1;
  tg.axpy(Int(2), gen);
  SnfResult S2 = smith_normal_form(cc.boundary_dense(2));
  std::vector<Chain> hits;
  try {
    for (const auto& z : enumerate_cycles(cc, 1, Int(4), budget))
      if (homologous(cc, S2, z, tg) || homologous(cc, S2, z, tg.negated()))
        hits.push_back(z);
  } catch (const budget_error&) {
    return std::nullopt;
  }
  if (hits.size() != 1) return std::nullopt;
  const Chain& dz = hits[0];
  if (dz.coef.size() != 4) return std::nullopt;
  std::set<std::string> uppers, lowers;
  for (const auto& [idx, cf] : dz.coef) {
    if (int_abs(cf) != 1) return std::nullopt;
    auto names = KX.names_of(cc.basis(1)[idx]);
    PointId pa = P.require_id(names[0]);
    PointId pb = P.require_id(names[1]);
    if (P.lt(pa, pb)) {
      lowers.insert(names[0]);
      uppers.insert(names[1]);
    } else if (P.lt(pb, pa)) {
      lowers.insert(names[1]);
      uppers.insert(names[0]);
    } else {
      return std::nullopt;
    }
  }
  if (uppers.size() != 2 || lowers.size() != 2) return std::nullopt;
  for (const auto& lo : lowers)
    for (const auto& up : uppers)
      if (!P.lt(P.require_id(lo), P.require_id(up))) return std::nullopt;
  std::string x = *uppers.begin(), y = *uppers.rbegin();
  std::string z = *lowers.begin(), w = *lowers.rbegin();

  FinitePoset noxy = P.without(P.require_id(x));
  noxy = noxy.without(noxy.require_id(y));
  FinitePoset Q = core(noxy);
  if (Q.size() != 4) return std::nullopt;
  std::vector<std::string> qup, qlo;
  for (PointId p : Q.maximal_points()) qup.push_back(Q.name_of(p));
  for (PointId p : Q.minimal_points()) qlo.push_back(Q.name_of(p));
  if (qup.size() != 2 || qlo.size() != 2) return std::nullopt;
  for (const auto& lo : qlo)
    for (const auto& up : qup)
      if (!Q.lt(Q.require_id(lo), Q.require_id(up))) return std::nullopt;
  std::sort(qup.begin(), qup.end());
  std::sort(qlo.begin(), qlo.end());

  std::map<std::string, std::string> ren = {
      {x, "x"},      {y, "y"},      {z, "z"},      {w, "w"},
      {qup[0], "x'"}, {qup[1], "y'"}, {qlo[0], "z'"}, {qlo[1], "w'"}};
  if (ren.size() != 8) return std::nullopt;
  std::vector<std::string> rest;
  for (const auto& nm : P.point_names())
    if (!ren.count(nm)) rest.push_back(nm);
  if (rest.size() != 6) return std::nullopt;
  for (std::size_t i = 0; i < rest.size(); ++i)
    ren[rest[i]] = "p" + std::to_string(i + 1);
  return relabel(P, ren);
}

}  // namespace

KunReport verify_kun(const FinitePoset& X, const SearchBudget& budget) {
  KunReport rep;
  bool sofar = true;
  auto add = [&](std::string name, bool pass, std::string detail) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
    sofar = sofar && pass;
    return pass;
  };

  add("fourteen points", X.size() == 14,
      std::to_string(X.size()) + " points");
  std::vector<std::string> want = {"p1", "p2", "p3", "p4", "p5", "p6", "w",
                                   "w'", "x", "x'", "y", "y'", "z", "z'"};
  add("canonical names", X.point_names() == want,
      join(X.point_names(), " "));
  if (!sofar) {
    rep.all_pass = false;
    return rep;
  }

  SimplicialComplex KX = order_complex(X);
  ChainComplex cc(KX);
  Chain gen;
  {
    bool ok = false;
    std::string note;
    try {
      HomologyResult h = homology(cc, false, true);
      ok = group_rank(h, 0) == 1 && group_torsion(h, 0).empty() &&
           group_rank(h, 1) == 1 && group_torsion(h, 1).empty();
      for (std::size_t k = 2; k < h.groups.size(); ++k)
        ok = ok && h.groups[k].rank == 0 && h.groups[k].torsion.empty();
      if (ok) gen = h.groups[1].generators[0];
      note = ok ? "order complex has circle homology"
                : "order complex is not a homology circle";
    } catch (const std::exception& e) {
      note = e.what();
    }
    add("circle homology", ok, note);
  }

  {
    PointId x = X.require_id("x"), y = X.require_id("y");
    PointId z = X.require_id("z"), w = X.require_id("w");
    bool ok = X.strict_up(x).empty() && X.strict_up(y).empty() &&
              X.strict_down(z).empty() && X.strict_down(w).empty() &&
              is_weak_point(X, x) && is_weak_point(X, y);
    add("crown extremes", ok,
        "x, y maximal weak points; z, w minimal");
  }

  Chain tg;
  tg.dim = 1;
  tg.axpy(Int(2), gen);
  SnfResult S2 = smith_normal_form(cc.boundary_dense(2));
  auto edge_index = [&](const std::string& u, const std::string& v) {
    auto a = KX.id_of(u), b = KX.id_of(v);
    if (!a || !b) return -1;
    Simplex e{std::min(*a, *b), std::max(*a, *b)};
    return cc.index_of(1, e);
  };
  Chain doubling;
  {
    bool ok = false;
    std::string note;
    if (sofar) {
      try {
        std::vector<Chain> hits;
        for (const auto& zc : enumerate_cycles(cc, 1, Int(4), budget))
          if (homologous(cc, S2, zc, tg) ||
              homologous(cc, S2, zc, tg.negated()))
            hits.push_back(zc);
        std::set<int> expect = {edge_index("x", "z"), edge_index("w", "x"),
                                edge_index("w", "y"), edge_index("y", "z")};
        if (hits.size() == 1 && !expect.count(-1)) {
          std::set<int> support;
          bool unit = true;
          for (const auto& [idx, cf] : hits[0].coef) {
            support.insert(idx);
            unit = unit && int_abs(cf) == 1;
          }
          ok = unit && support == expect;
          if (ok) doubling = hits[0];
        }
        note = std::to_string(hits.size()) +
               " short cycle(s) in the doubled class";
      } catch (const budget_error& e) {
        note = e.what();
      }
    } else {
      note = "not attempted after earlier failures";
    }
    add("doubling cycle", ok, note);
  }

  {
    bool ok = false;
    std::string note;
    if (sofar) {
      try {
        std::vector<PointId> crown = {X.require_id("x"), X.require_id("y"),
                                      X.require_id("z"), X.require_id("w")};
        FinitePoset Xc = X.induced(crown);
        SimplicialComplex KXc = order_complex(Xc);
        ChainComplex ccc(KXc);
        auto pm = pseudomanifold_check(KXc);
        if (pm.closed_pseudomanifold() && pm.orientable) {
          Chain fz = fundamental_cycle(ccc, pm);
          std::map<std::string, std::string> idassign;
          for (const auto& nm : KXc.vertex_names()) idassign[nm] = nm;
          SimplicialMap incl = SimplicialMap::make(KXc, KX, idassign);
          Chain pushed = induced_chain_map(incl, ccc, cc).apply(fz);
          ok = homologous(cc, S2, pushed, tg) ||
               homologous(cc, S2, pushed, tg.negated());
        }
        note = ok ? "crown cycle represents twice the generator"
                  : "crown cycle is not the doubled generator";
      } catch (const std::exception& e) {
        note = e.what();
      }
    } else {
      note = "not attempted after earlier failures";
    }
    add("crown class doubles the generator", ok, note);
  }

  {
    bool ok = false;
    std::string note;
    try {
      FinitePoset noxy = X.without(X.require_id("x"));
      noxy = noxy.without(noxy.require_id("y"));
      FinitePoset Q = core(noxy);
      std::vector<std::string> wantq = {"w'", "x'", "y'", "z'"};
      ok = Q.point_names() == wantq;
      if (ok)
        for (const auto& lo : {"z'", "w'"})
          for (const auto& up : {"x'", "y'"})
            ok = ok && Q.lt(Q.require_id(lo), Q.require_id(up));
      if (ok)
        ok = !Q.comparable(Q.require_id("x'"), Q.require_id("y'")) &&
             !Q.comparable(Q.require_id("z'"), Q.require_id("w'"));
      note = "deleting x, y cores to " + join(Q.point_names(), " ");
    } catch (const std::exception& e) {
      note = e.what();
    }
    add("retract crown", ok, note);
  }

  {
    std::set<std::string> down;
    for (const auto& nm : {"x", "y", "z", "w"}) {
      PointId p = X.require_id(nm);
      down.insert(nm);
      for (PointId q : X.strict_down(p)) down.insert(X.name_of(q));
    }
    std::set<std::string> expect = {"x",  "y",  "z",  "w",  "p1",
                                    "p2", "p3", "p4", "p5", "p6"};
    add("crown downset", down == expect,
        std::to_string(down.size()) + " points below the crown");
  }

  {
    bool ok = false;
    std::string note;
    if (sofar) {
      auto weights = solve_degree_weights(X);
      if (weights.empty()) {
        note = "no integer weighting normalizes the generator";
      } else {
        try {
          Winding wd(X, weights);
          WindingReport wr = winding_report(wd, cc, &doubling);
          ok = wr.iso && int_abs(wr.cycle_value) == 2;
          note = "doubling cycle evaluates to " + wr.cycle_value.str();
        } catch (const input_error& e) {
          note = e.what();
        }
      }
    } else {
      note = "not attempted after earlier failures";
    }
    add("degree weighting", ok, note);
  }

  if (sofar) {
    Certificate fc = fpp_check(X, budget);
    add("fixed point property", fc.status == CertStatus::holds,
        fc.detail + " (" + std::to_string(fc.nodes) + " nodes)");
  } else {
    add("fixed point property", false, "not attempted after earlier failures");
  }

  rep.all_pass = sofar;
  return rep;
}

KunSpace build_kun(const SearchBudget& budget) {
  FinitePoset C8 = circle8();
  FinitePoset T1 = crown4("t1");
  FinitePoset T2 = crown4("t2");
  std::map<std::string, std::string> f2n = {
      {"a0", "t2.lo0"}, {"b0", "t2.hi0"}, {"a1", "t2.lo1"}, {"b1", "t2.hi1"},
      {"a2", "t2.lo0"}, {"b2", "t2.hi0"}, {"a3", "t2.lo1"}, {"b3", "t2.hi1"}};
  MonotoneMap f2 = MonotoneMap::make(C8, T2, f2n);
  {
    std::vector<int> gf2(8);
    for (PointId p = 0; p < 8; ++p) gf2[p] = static_cast<int>(f2.assign[p]);
    auto wf2 = cycle_winding(C8, T2, gf2);
    if (!wf2 || (*wf2 != 2 && *wf2 != -2))
      throw std::logic_error("double cover winding is wrong");
  }

  std::vector<std::string> all_points = C8.point_names();
  for (const auto& nm : T1.point_names()) all_points.push_back(nm);
  for (const auto& nm : T2.point_names()) all_points.push_back(nm);
  std::vector<std::pair<std::string, std::string>> base_rels =
      C8.covers_by_name();
  for (const auto& cv : T1.covers_by_name()) base_rels.push_back(cv);
  for (const auto& cv : T2.covers_by_name()) base_rels.push_back(cv);
  for (PointId c = 0; c < 8; ++c)
    for (PointId t = 0; t < 4; ++t)
      if (T2.leq(f2.assign[c], t))
        base_rels.emplace_back(C8.name_of(c), T2.name_of(t));

  int surveyed = 0;
  for (int code = 0; code < 1 << 16; ++code) {
    std::vector<int> g(8);
    int tmp = code;
    for (int i = 7; i >= 0; --i) {
      g[i] = tmp & 3;
      tmp >>= 2;
    }
    bool mono = true;
    for (const auto& [p, q] : C8.covers())
      if (!T1.leq(static_cast<PointId>(g[p]), static_cast<PointId>(g[q]))) {
        mono = false;
        break;
      }
    if (!mono) continue;
    auto wq = cycle_winding(C8, T1, g);
    if (!wq || (*wq != 1 && *wq != -1)) continue;

    auto rels = base_rels;
    for (PointId c = 0; c < 8; ++c)
      for (PointId t = 0; t < 4; ++t)
        if (T1.leq(static_cast<PointId>(g[c]), t))
          rels.emplace_back(C8.name_of(c), T1.name_of(t));
    FinitePoset glued = FinitePoset::from_relations(all_points, rels);
    FinitePoset cored = core(glued);
    if (cored.size() != 14) continue;
    auto named = name_model(cored, budget);
    if (!named) continue;
    ++surveyed;
    KunReport rep = verify_kun(*named, budget);
    if (!rep.all_pass) continue;

    KunSpace out;
    out.poset = *named;
    out.crown = {"x", "y", "z", "w"};
    out.crown_prime = {"x'", "y'", "z'", "w'"};
    out.omega = solve_degree_weights(out.poset);
    out.candidate = code;
    out.surveyed = surveyed;
    out.report = std::move(rep);
    return out;
  }
  throw budget_error("no degree-one gluing produced a verified model");
}

// ---------------------------------------------------------------------------
// realization validation
// ---------------------------------------------------------------------------

std::vector<Chain> validate_realizations(
    const SimplicialComplex& K, const std::vector<RealizationDatum>& data,
    bool with_degree_one, bool check_asymmetry) {
  if (K.dim() < 0) throw input_error("base complex is empty");
  int n = K.dim();
  ChainComplex ccK(K);
  HomologyResult hK = homology(K);
  if (!with_degree_one &&
      (group_rank(hK, 1) != 0 || !group_torsion(hK, 1).empty()))
    throw input_error(
        "the tower pipeline requires trivial first homology; use the full "
        "pipeline");

  std::vector<Chain> fund;
  std::map<int, std::vector<Chain>> claims_by_k;
  for (const auto& d : data) {
    if (d.k < 1 || d.k > n)
      throw input_error("realization degree must lie between 1 and " +
                        std::to_string(n));
    if (!with_degree_one && d.k == 1)
      throw input_error("degree-one realizations require the full pipeline");
    if (d.M.dim() != d.k)
      throw input_error("realization carrier dimension mismatch in degree " +
                        std::to_string(d.k));
    auto pm = pseudomanifold_check(d.M);
    if (!pm.closed_pseudomanifold() || !pm.orientable)
      throw input_error(
          "realization carrier must be a closed oriented pseudomanifold: " +
          pm.detail);
    if (check_asymmetry && d.k >= 2 && !is_asymmetric(d.M))
      throw input_error("realization carrier must be asymmetric in degree " +
                        std::to_string(d.k));
    if (!same_complex(d.phi.source, d.M) || !same_complex(d.phi.target, K))
      throw input_error(
          "realization map must go from the carrier to the base complex");
    if (d.claimed_class.dim != d.k)
      throw input_error("claimed class dimension mismatch");
    if (!ccK.boundary(d.claimed_class).zero())
      throw input_error("claimed class is not a cycle");
    ChainComplex ccM(d.M);
    Chain fz = fundamental_cycle(ccM, pm);
    Chain pushed = induced_chain_map(d.phi, ccM, ccK).apply(fz);
    Chain diff = pushed;
    diff.axpy(Int(-1), d.claimed_class);
    if (!diff.zero()) {
      int base = integer_rank(ccK.boundary_sparse(d.k + 1));
      if (rank_with_columns(ccK, d.k + 1, {diff}) != base)
        throw input_error(
            "claimed class differs from the pushed fundamental class");
    }
    claims_by_k[d.k].push_back(d.claimed_class);
    fund.push_back(std::move(fz));
  }

  for (int k = 1; k <= n; ++k) {
    Int dk = group_rank(hK, k);
    int need =
        (k == 1 && !with_degree_one) ? 0 : to_small_int(dk, "betti number");
    int have = claims_by_k.count(k)
                   ? static_cast<int>(claims_by_k[k].size())
                   : 0;
    if (have != need)
      throw input_error("degree " + std::to_string(k) + " needs " +
                        std::to_string(need) + " realizations, got " +
                        std::to_string(have));
  }
  for (const auto& [k, cs] : claims_by_k) {
    int base = integer_rank(ccK.boundary_sparse(k + 1));
    if (rank_with_columns(ccK, k + 1, cs) !=
        base + static_cast<int>(cs.size()))
      throw input_error("claimed classes are not independent in degree " +
                        std::to_string(k));
  }
  return fund;
}

// ---------------------------------------------------------------------------
// depth planning
// ---------------------------------------------------------------------------

DepthPlan plan_depths(const SimplicialComplex& K,
                      const std::vector<RealizationDatum>& data,
                      const std::string& mode,
                      const std::vector<int>& explicit_depths, bool for_main,
                      const Int& facet_ceiling, const SearchBudget& budget) {
  if (K.dim() < 0) throw input_error("depth planning requires a nonempty complex");
  if (mode != "bound" && mode != "explicit")
    throw input_error("plan mode must be 'bound' or 'explicit'");
  int n = K.dim();
  DepthPlan plan;
  plan.n = n;
  plan.for_main = for_main;
  plan.ceiling = facet_ceiling;
  validate_realizations(K, data, for_main, false);

  std::map<int, std::vector<const RealizationDatum*>> byk;
  for (const auto& d : data) byk[d.k].push_back(&d);

  std::vector<int> sx;
  if (mode == "explicit") {
    sx = explicit_depths;
    if (static_cast<int>(sx.size()) != std::max(0, n - 1))
      throw input_error("explicit mode needs " +
                        std::to_string(std::max(0, n - 1)) +
                        " depth values (s_2 through s_n)");
    int prev = 0;
    for (int v : sx) {
      if (v < prev)
        throw input_error("depths must be nondecreasing and nonnegative");
      prev = v;
    }
  } else if (!explicit_depths.empty()) {
    throw input_error("bound mode computes its own depths");
  }

  plan.s.assign(n + 1, 0);
  plan.N = 0;
  if (for_main && byk.count(1)) {
    PlanEntry e;
    e.k = 1;
    e.N_k = 1;
    e.s_k = 0;
    e.mode = mode;
    if (n == 1) {
      PlanTarget t;
      t.target = "K";
      t.dim = n;
      t.verified = true;
      t.note = "single closed simplices lie in the closed star of any vertex";
      e.targets.push_back(t);
    }
    plan.entries.push_back(std::move(e));
    plan.N = 1;
  }

  for (int k = 2; k <= n; ++k) {
    PlanEntry e;
    e.k = k;
    e.mode = mode;
    Int Nk(0);
    for (const auto* d : byk[k]) {
      Int cnt =
          d->M.f_vector()[k] * int_pow(factorial(k + 1), plan.s[k - 1]);
      if (cnt > Nk) Nk = cnt;
    }
    e.N_k = Nk;
    if (Nk > plan.N) plan.N = Nk;

    int sk = plan.s[k - 1];
    if (mode == "explicit") sk = std::max(sk, sx[k - 2]);

    struct Target {
      std::string name;
      const SimplicialComplex* P;
      int dim;
      Int N_used;
    };
    std::vector<Target> targets;
    for (int k2 = k + 1; k2 <= n; ++k2) {
      int li = 0;
      for (const auto* d : byk[k2]) {
        ++li;
        targets.push_back({"M[" + std::to_string(k2) + "." +
                               std::to_string(li) + "]",
                           &d->M, k2, Nk});
      }
    }
    if (k == n) targets.push_back({"K", &K, n, Int(0)});

    if (mode == "bound") {
      for (auto& t : targets) {
        Int Nu = t.name == "K" ? plan.N : t.N_used;
        int req = bound_depth(Nu, t.dim);
        sk = std::max(sk, req);
        PlanTarget pt;
        pt.target = t.name;
        pt.dim = t.dim;
        pt.verified = true;
        pt.note = "mesh bound gives depth " + std::to_string(req) +
                  " for N = " + Nu.str();
        e.targets.push_back(std::move(pt));
      }
    } else {
      for (auto& t : targets) {
        Int Nu = t.name == "K" ? plan.N : t.N_used;
        CoverOutcome co = covering_explicit(*t.P, sk, Nu, budget);
        PlanTarget pt;
        pt.target = t.name;
        pt.dim = t.dim;
        pt.verified = co.verified;
        pt.note = co.note;
        e.targets.push_back(std::move(pt));
      }
    }
    e.s_k = sk;
    plan.s[k] = sk;
    plan.entries.push_back(std::move(e));
  }

  plan.multiplier = for_main ? factorial(n + 1) * plan.N : plan.N;

  int sn = plan.s[n];
  {
    PartForecast pf;
    pf.part = "K^" + std::to_string(sn);
    pf.vertices = f_after_rounds(K, sn)[0];
    pf.facets = facet_count_after(K, sn);
    pf.exact = true;
    plan.forecast.push_back(std::move(pf));
  }
  Int Kfacets = plan.forecast[0].facets;
  std::map<int, int> lcount;
  for (const auto& d : data) {
    int l = ++lcount[d.k];
    std::string tag = std::to_string(d.k) + "." + std::to_string(l);
    int sk1 = plan.s[d.k - 1];
    std::vector<std::vector<Int>> fM(sn + 1);
    fM[0] = d.M.f_vector();
    for (int r = 1; r <= sn; ++r) fM[r] = barycentric_f(fM[r - 1]);
    const std::vector<Int>& top = fM[sn];
    Int topk = top[d.k];
    {
      PartForecast pf;
      pf.part = "C[" + tag + "].a";
      pf.vertices = top[0] + plan.forecast[0].vertices;
      pf.facets = Int(d.k + 1) * topk + Kfacets;
      pf.exact = false;
      plan.forecast.push_back(std::move(pf));
    }
    {
      PartForecast pf;
      pf.part = "C[" + tag + "].b";
      pf.vertices = (plan.multiplier + 1) * top[0];
      pf.facets = plan.multiplier * Int(d.k + 1) * topk;
      pf.exact = true;
      plan.forecast.push_back(std::move(pf));
    }
    if (sk1 < sn) {
      PartForecast pf;
      pf.part = "C[" + tag + "].c";
      pf.vertices = 0;
      pf.facets = 0;
      for (int lvl = sk1; lvl <= sn; ++lvl) pf.vertices += fM[lvl][0];
      for (int m = sk1 + 1; m <= sn; ++m)
        pf.facets += Int(d.k + 1) * fM[m][d.k] + fM[m - 1][d.k];
      pf.exact = false;
      plan.forecast.push_back(std::move(pf));
    }
  }
  plan.total_facets = 0;
  for (const auto& pf : plan.forecast) plan.total_facets += pf.facets;
  plan.buildable = plan.total_facets <= plan.ceiling;
  plan.detail = "forecast " + plan.total_facets.str() +
                " facets against ceiling " + plan.ceiling.str() +
                (plan.buildable ? "" : "; build refused");
  return plan;
}

// ---------------------------------------------------------------------------
// tower assembly
// ---------------------------------------------------------------------------

namespace {

struct Tower {
  int k = 0;
  int l = 1;
  std::string tag;
  int sk1 = 0;
  std::vector<SimplicialComplex> Mj;  // depth 0 .. s_n, natural names
  std::vector<CylinderRetraction> stages;  // coarse end first
  std::string free_prefix;
  Chain fund_free;
  Chain claim;
};

SimplicialComplex build_tower(const SimplicialComplex& K,
                              const std::vector<RealizationDatum>& data,
                              const DepthPlan& plan,
                              std::vector<Subobject>& registry,
                              std::vector<std::string>& log,
                              std::vector<Tower>& towers) {
  int n = K.dim();
  int sn = plan.s[n];
  int mult = to_small_int(plan.multiplier, "tower multiplier");
  SimplicialComplex Ksn = iterated_barycentric(K, sn);
  registry.push_back({"K^" + std::to_string(sn), Ksn, false});
  SimplicialComplex L = Ksn;
  log.push_back("base K^" + std::to_string(sn) + ": " +
                std::to_string(Ksn.vertex_count()) + " vertices, " +
                std::to_string(Ksn.facets().size()) + " facets");

  std::map<int, int> lcount;
  for (const auto& d : data) {
    Tower tw;
    tw.k = d.k;
    tw.l = ++lcount[d.k];
    tw.tag = std::to_string(d.k) + "." + std::to_string(tw.l);
    tw.sk1 = plan.s[d.k - 1];
    tw.claim = d.claimed_class;
    tw.Mj.push_back(d.M);
    for (int r = 1; r <= sn; ++r) tw.Mj.push_back(barycentric(tw.Mj.back()));
    std::string mt = "m" + tw.tag;
    auto pre_b = [&mt](int i) { return mt + ":b" + std::to_string(i) + ":"; };
    auto lvl_prefix = [&](int lvl) {
      return lvl == sn ? pre_b(mult)
                       : mt + ":c" + std::to_string(lvl) + ":";
    };

    SimplicialMap phisn = iterated_barycentric_map(d.phi, sn);
    SimplicialComplex prev = prefix_vertices(tw.Mj[sn], pre_b(0));
    {
      std::map<std::string, std::string> a0;
      for (const auto& nm : tw.Mj[sn].vertex_names())
        a0[pre_b(0) + nm] = phisn.image_name(nm);
      SimplicialMap phic = SimplicialMap::make(prev, Ksn, a0);
      SimplicialComplex Ca = mapping_cylinder(phic).Z;
      L = glue_union(L, Ca);
      registry.push_back({"C[" + tw.tag + "].a", std::move(Ca), false});
    }
    {
      SimplicialComplex Cb;
      for (int i = 1; i <= mult; ++i) {
        SimplicialComplex next = prefix_vertices(tw.Mj[sn], pre_b(i));
        std::map<std::string, std::string> as;
        for (const auto& nm : tw.Mj[sn].vertex_names())
          as[pre_b(i - 1) + nm] = pre_b(i) + nm;
        SimplicialMap step = SimplicialMap::make(prev, next, as);
        SimplicialComplex Zi = mapping_cylinder(step).Z;
        Cb = i == 1 ? Zi : glue_union(Cb, Zi);
        prev = std::move(next);
      }
      if (mult > 0) {
        L = glue_union(L, Cb);
        registry.push_back({"C[" + tw.tag + "].b", std::move(Cb), false});
      }
    }
    if (tw.sk1 < sn) {
      SimplicialComplex Cc;
      for (int m = tw.sk1 + 1; m <= sn; ++m) {
        CylinderRetraction cr = cylinder_retraction(tw.Mj[m - 1]);
        if (!same_complex(cr.Kprime, tw.Mj[m]))
          throw std::logic_error("subdivision tower mismatch");
        std::map<std::string, std::string> ren;
        for (const auto& nm : tw.Mj[m].vertex_names())
          ren[nm] = lvl_prefix(m) + nm;
        for (const auto& nm : tw.Mj[m - 1].vertex_names())
          ren[nm] = lvl_prefix(m - 1) + nm;
        SimplicialComplex Zc = relabel(cr.cyl.Z, ren);
        Cc = m == tw.sk1 + 1 ? Zc : glue_union(Cc, Zc);
        tw.stages.push_back(std::move(cr));
      }
      L = glue_union(L, Cc);
      registry.push_back({"C[" + tw.tag + "].c", std::move(Cc), false});
    }
    tw.free_prefix = lvl_prefix(tw.sk1);
    SimplicialComplex Mfree = prefix_vertices(tw.Mj[tw.sk1], tw.free_prefix);
    registry.push_back({"M[" + tw.tag + "]", Mfree, false});
    {
      auto pmf = pseudomanifold_check(tw.Mj[tw.sk1]);
      tw.fund_free = fundamental_cycle(ChainComplex(tw.Mj[tw.sk1]), pmf);
    }
    log.push_back("carrier tower " + tw.tag + ": depths " +
                  std::to_string(tw.sk1) + " to " + std::to_string(sn) +
                  ", middle length " + std::to_string(mult));
    towers.push_back(std::move(tw));
  }
  log.push_back("assembled space: " + std::to_string(L.vertex_count()) +
                " vertices, " + std::to_string(L.facets().size()) +
                " facets");
  return L;
}

void run_tower_checks(AssembledSpace& out, const SimplicialComplex& K,
                      const std::vector<Tower>& towers) {
  ChainComplex ccL(out.L);
  HomologyResult hK = homology(K);
  HomologyResult hL = homology(ccL);
  std::string why;
  out.homology_ok = same_homology(hL, hK, why);
  out.log.push_back(out.homology_ok
                        ? "homology matches the base complex"
                        : "homology mismatch: " + why);

  out.subobjects_ok = true;
  for (auto& so : out.registry) {
    bool present = true;
    for (const auto& f : so.piece.facets()) {
      auto s = out.L.simplex_from_names(so.piece.names_of(f));
      if (!s || !out.L.has_simplex(*s)) {
        present = false;
        break;
      }
    }
    bool extra = true;
    if (so.name[0] == 'K' || so.name[0] == 'M') {
      so.full = present && is_full_subcomplex(out.L, so.piece);
      extra = so.full;
      if (so.name[0] == 'M') {
        auto pm = pseudomanifold_check(so.piece);
        extra = extra && pm.closed_pseudomanifold() && pm.orientable;
      }
    }
    if (!present || !extra) {
      out.subobjects_ok = false;
      out.log.push_back("subobject check failed: " + so.name);
    }
  }

  int n = K.dim();
  int sn = out.plan.s[n];
  std::vector<SubdivisionOperator> kops;
  {
    SimplicialComplex Kr = K;
    for (int r = 0; r < sn; ++r) {
      kops.push_back(subdivision_operator(Kr));
      Kr = kops.back().Kprime;
    }
  }
  std::map<int, int> base_rank;
  auto brank = [&](int k) {
    auto it = base_rank.find(k);
    if (it != base_rank.end()) return it->second;
    int r = integer_rank(ccL.boundary_sparse(k + 1));
    base_rank[k] = r;
    return r;
  };

  out.classes_ok = true;
  std::map<int, std::vector<Chain>> pushed;
  ChainComplex ccK0(K);
  for (const auto& tw : towers) {
    ChainComplex ccfree(tw.Mj[tw.sk1]);
    const std::string pre = tw.free_prefix;
    Chain cfree = transport_chain(
        ccfree, tw.fund_free, ccL,
        [&pre](const std::string& nm) { return pre + nm; });
    bool ok = ccL.boundary(cfree).zero();

    Chain cl = tw.claim;
    for (const auto& op : kops) cl = op.lambda.apply(cl);
    const ChainComplex& cctop = kops.empty() ? ccK0 : kops.back().dst;
    Chain cK = transport_chain(cctop, cl, ccL);

    Chain dm = cfree;
    dm.axpy(Int(-1), cK);
    Chain dp = cfree;
    dp.axpy(Int(1), cK);
    int base = brank(tw.k);
    bool hom = dm.zero() || rank_with_columns(ccL, tw.k + 1, {dm}) == base ||
               rank_with_columns(ccL, tw.k + 1, {dp}) == base;
    if (!(ok && hom)) {
      out.classes_ok = false;
      out.log.push_back("class check failed for carrier " + tw.tag);
    }
    pushed[tw.k].push_back(std::move(cfree));
  }
  for (const auto& [k, cs] : pushed) {
    int base = brank(k);
    if (rank_with_columns(ccL, k + 1, cs) !=
        base + static_cast<int>(cs.size())) {
      out.classes_ok = false;
      out.log.push_back("pushed classes are dependent in degree " +
                        std::to_string(k));
    } else {
      out.log.push_back("degree " + std::to_string(k) + ": " +
                        std::to_string(cs.size()) +
                        " independent carrier classes");
    }
  }

  out.retraction_ok = true;
  for (const auto& tw : towers) {
    if (tw.stages.empty()) {
      out.log.push_back("carrier " + tw.tag + ": no approximation stages");
      continue;
    }
    for (const auto& cr : tw.stages)
      for (int j = 0; j <= tw.k; ++j)
        if (cr.r.op_norm(j) > factorial(j + 1)) {
          out.retraction_ok = false;
          out.log.push_back("retraction norm exceeded in stage of carrier " +
                            tw.tag);
        }
    ChainComplex ccfree(tw.Mj[tw.sk1]);
    Chain z = tw.fund_free;
    const ChainComplex* cur = &ccfree;
    for (const auto& cr : tw.stages) {
      Chain zin = transport_chain(*cur, z, cr.ccZ);
      z = cr.r.apply(zin);
      cur = &cr.ccKp;
    }
    Int expect = int_pow(factorial(tw.k + 1),
                         static_cast<int>(tw.stages.size())) *
                 chain_norm(tw.fund_free);
    auto pmtop = pseudomanifold_check(tw.Mj[tw.Mj.size() - 1]);
    Chain ftop = fundamental_cycle(*cur, pmtop);
    bool ok = chain_norm(z) == expect &&
              (z == ftop || z == ftop.negated());
    if (!ok) {
      out.retraction_ok = false;
      out.log.push_back("composed retraction failed for carrier " + tw.tag);
    } else {
      out.log.push_back("carrier " + tw.tag +
                        ": composed retraction norm " + expect.str());
    }
  }
}

// Vertex cycle of a closed curve, starting at the least vertex toward its
// least neighbor.
std::vector<std::string> cycle_order(const SimplicialComplex& M) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& f : M.facets()) {
    auto nm = M.names_of(f);
    if (nm.size() != 2)
      throw input_error("degree-one carrier must be a closed curve");
    adj[nm[0]].push_back(nm[1]);
    adj[nm[1]].push_back(nm[0]);
  }
  for (auto& [key, v] : adj) {
    std::sort(v.begin(), v.end());
    if (v.size() != 2)
      throw input_error("degree-one carrier must be a closed curve");
  }
  std::vector<std::string> cyc;
  const std::string start = M.vertex_names().front();
  std::string prev = start;
  std::string curv = adj[start][0];
  cyc.push_back(start);
  while (curv != start) {
    cyc.push_back(curv);
    const auto& nxt = adj[curv];
    std::string next = nxt[0] == prev ? nxt[1] : nxt[0];
    prev = curv;
    curv = next;
  }
  return cyc;
}

}  // namespace

AssembledSpace assemble_thm4(const SimplicialComplex& K,
                             const std::vector<RealizationDatum>& data,
                             const DepthPlan& plan,
                             const SearchBudget& budget) {
  (void)budget;
  AssembledSpace out;
  out.plan = plan;
  if (plan.for_main)
    throw input_error("plan targets the full pipeline; replan without it");
  if (K.dim() < 1) throw input_error("tower base must have positive dimension");
  if (plan.n != K.dim()) throw input_error("plan dimension mismatch");
  if (!plan.buildable) throw input_error("plan refuses build: " + plan.detail);
  validate_realizations(K, data, false, true);
  std::vector<Tower> towers;
  out.L = build_tower(K, data, plan, out.registry, out.log, towers);
  run_tower_checks(out, K, towers);
  return out;
}

MainSpace assemble_main(const SimplicialComplex& K,
                        const std::vector<RealizationDatum>& data,
                        const DepthPlan& plan, const SearchBudget& budget,
                        const KunSpace* prebuilt) {
  MainSpace out;
  if (!plan.for_main)
    throw input_error("plan targets the tower pipeline; replan for the full "
                      "assembly");
  if (K.dim() < 1) throw input_error("base must have positive dimension");
  if (plan.n != K.dim()) throw input_error("plan dimension mismatch");
  if (!plan.buildable) throw input_error("plan refuses build: " + plan.detail);
  validate_realizations(K, data, true, true);
  out.base.plan = plan;
  std::vector<Tower> towers;
  out.base.L =
      build_tower(K, data, plan, out.base.registry, out.base.log, towers);
  run_tower_checks(out.base, K, towers);

  FinitePoset XL = face_poset(out.base.L);
  out.X = XL;
  out.log.push_back("tower face poset: " + std::to_string(XL.size()) +
                    " points");
  int d1 = 0;
  for (const auto& d : data)
    if (d.k == 1) ++d1;
  out.degrees_ok = true;
  out.copies_ok = true;

  if (d1 > 0) {
    out.kun = prebuilt ? *prebuilt : build_kun(budget);
    if (!out.kun.report.all_pass)
      throw budget_error("the 14-point model failed verification: " +
                         out.kun.report.failing());
    SimplicialComplex KKun = order_complex(out.kun.poset);
    ChainComplex ccKun(KKun);
    Winding wnd(out.kun.poset, out.kun.omega);
    int l = 0;
    for (const auto& tw : towers) {
      if (tw.k != 1) continue;
      ++l;
      std::string kp = "kun" + std::to_string(l) + ":";
      out.kun_prefixes.push_back(kp);
      SimplicialComplex Mfree =
          prefix_vertices(tw.Mj[tw.sk1], tw.free_prefix);
      std::vector<std::string> cyc = cycle_order(Mfree);
      FinitePoset XM = face_poset(Mfree);
      FinitePoset Kl = prefix_points(out.kun.poset, kp);
      auto edge_name = [](std::string a, std::string b) {
        std::vector<std::string> p{std::move(a), std::move(b)};
        std::sort(p.begin(), p.end());
        return brace_name(p);
      };
      std::map<std::string, std::string> hb;
      for (const auto& pt : XM.point_names()) hb[pt] = kp + "z'";
      hb[brace_name({cyc[0]})] = kp + "z'";
      hb[edge_name(cyc[0], cyc[1])] = kp + "x'";
      hb[brace_name({cyc[1]})] = kp + "w'";
      hb[edge_name(cyc[1], cyc[2])] = kp + "y'";
      MonotoneMap h = MonotoneMap::make(XM, Kl, hb);
      NonHausdorffCylinder cylB = nh_cylinder(h);
      out.X = glue_posets(out.X, cylB.B);

      SimplicialComplex Mp = order_complex(XM);
      ChainComplex ccMp(Mp);
      auto pmp = pseudomanifold_check(Mp);
      Chain fz = fundamental_cycle(ccMp, pmp);
      SimplicialMap Kh = order_complex_functor(h);
      ChainComplex ccKl{ChainComplex(order_complex(Kl))};
      Chain pushedc = induced_chain_map(Kh, ccMp, ccKl).apply(fz);
      Chain onk = transport_chain(
          ccKl, pushedc, ccKun,
          [&kp](const std::string& nm) { return nm.substr(kp.size()); });
      Int deg = wnd.eval(ccKun, onk);
      out.h_degree.push_back(deg);
      if (int_abs(deg) != 1) out.degrees_ok = false;
      out.log.push_back("crown map " + std::to_string(l) + " has degree " +
                        deg.str());
      for (const auto& nm : out.kun.poset.point_names())
        if (!out.X.id_of(kp + nm)) out.copies_ok = false;
    }
    if (out.X.size() != XL.size() + 14 * static_cast<std::size_t>(d1))
      out.copies_ok = false;
    out.log.push_back(std::to_string(d1) +
                      " disjoint copies of the 14-point model attached");
  } else {
    out.log.push_back("no degree-one carriers; the tower face poset stands alone");
  }

  HomologyResult hX = homology(out.X);
  HomologyResult hK = homology(K);
  std::string why;
  out.homology_ok = same_homology(hX, hK, why);
  out.log.push_back(out.homology_ok
                        ? "order-complex homology matches the base"
                        : "order-complex homology mismatch: " + why);
  return out;
}

}  // namespace fpt
