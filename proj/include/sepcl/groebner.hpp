#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "sepcl/graph.hpp"

namespace sepcl {

// Variable numbering: z is 0; the i-th undirected edge {u,v} (u<v) in the chosen order owns
// variables 1+2i (u->v, or v->u when flipped) and 2+2i (the reverse). Smaller index = smaller variable.
class VariableMap {
 public:
  explicit VariableMap(const Signature& sig) : VariableMap(sig, edge_order(sig), {}) {}

  // Custom edge order; flip[i] swaps which orientation of edge i takes the smaller slot.
  VariableMap(const Signature& sig, std::vector<Edge> order, std::vector<bool> flip)
      : n_(sig.total()), edges_(std::move(order)), flip_(std::move(flip)) {
    if (flip_.empty()) flip_.assign(edges_.size(), false);
    slot_.assign(static_cast<std::size_t>(n_ * n_), -1);
    dir_.resize(1 + 2 * edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      DirectedEdge fwd{edges_[i].u, edges_[i].v};
      if (flip_[i]) fwd = fwd.reversed();
      set(fwd, static_cast<int>(1 + 2 * i));
      set(fwd.reversed(), static_cast<int>(2 + 2 * i));
    }
  }

  int num_vars() const { return static_cast<int>(dir_.size()); }
  int num_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int var(DirectedEdge e) const {
    int v = slot_[static_cast<std::size_t>(e.from * n_ + e.to)];
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "not an edge");
    return v;
  }
  // Edge of a non-z variable.
  DirectedEdge edge_of(int var) const { return dir_[static_cast<std::size_t>(var)]; }
  std::string name(int var) const {
    if (var == 0) return "z";
    auto e = edge_of(var);
    return "x(" + std::to_string(e.from + 1) + "," + std::to_string(e.to + 1) + ")";
  }

 private:
  void set(DirectedEdge e, int v) {
    slot_[static_cast<std::size_t>(e.from * n_ + e.to)] = v;
    dir_[static_cast<std::size_t>(v)] = e;
  }
  int n_;
  std::vector<Edge> edges_;
  std::vector<bool> flip_;
  std::vector<int> slot_;
  std::vector<DirectedEdge> dir_;
};

struct Monomial {
  std::vector<int> exp;

  explicit Monomial(int num_vars = 0) : exp(static_cast<std::size_t>(num_vars), 0) {}

  int degree() const {
    int d = 0;
    for (int e : exp) d += e;
    return d;
  }
  bool is_squarefree() const {
    return std::all_of(exp.begin(), exp.end(), [](int e) { return e <= 1; });
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exp.size(); ++i)
      if (exp[i] > o.exp[i]) return false;
    return true;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r(static_cast<int>(exp.size()));
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = std::max(exp[i], o.exp[i]);
    return r;
  }
  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
    return r;
  }
  // Exact quotient; requires o | *this.
  Monomial operator/(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= o.exp[i];
    return r;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline Monomial make_monomial(const VariableMap& vm, const std::vector<DirectedEdge>& edges, int z_power = 0) {
  Monomial m(vm.num_vars());
  m.exp[0] = z_power;
  for (const auto& e : edges) ++m.exp[static_cast<std::size_t>(vm.var(e))];
  return m;
}

// Degrevlex with variable 0 smallest: higher degree wins; on ties the monomial with the
// smaller exponent at the smallest differing variable is larger.
inline bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
  return false;
}

inline std::string to_string(const Monomial& m, const VariableMap& vm) {
  std::string out;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vm.name(static_cast<int>(i));
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out.empty() ? "1" : out;
}

enum class GBKind { K1, K2, K3a, K3b, K4, K5 };

inline std::string_view gb_kind_name(GBKind k) {
  switch (k) {
    case GBKind::K1: return "1";
    case GBKind::K2: return "2";
    case GBKind::K3a: return "3a";
    case GBKind::K3b: return "3b";
    case GBKind::K4: return "4";
    case GBKind::K5: return "5";
  }
  return "?";
}

// Binomial lead - tail.
struct GBElement {
  Monomial lead;
  Monomial tail;
  GBKind kind;
  int degree() const { return lead.degree(); }
};

// How the side condition on the middle vertex of the 5-cycle elements is read.
//  Validated: a,c share a class A_i and b is the smallest vertex outside A_i, and the lead is
//             not divisible by a 4-cycle exchange lead.
//  SmallestOfUnion / SmallestOfOwnClass: a,b,c in the first two classes, a,c co-class, and b is
//             the smallest vertex of the union of those classes / of its own class.
enum class Kind4Reading { Validated, SmallestOfUnion, SmallestOfOwnClass };

inline std::string_view kind4_reading_name(Kind4Reading r) {
  switch (r) {
    case Kind4Reading::Validated: return "validated";
    case Kind4Reading::SmallestOfUnion: return "smallest-of-union";
    case Kind4Reading::SmallestOfOwnClass: return "smallest-of-own-class";
  }
  return "?";
}

namespace detail {

// x_{u,v} x_{w,s} (four distinct vertices) is the lead of the 4-cycle exchange binomial
// x_{u,v}x_{w,s} - x_{u,s}x_{w,v} iff the smallest of the four edges is {u,s} or {w,v}.
inline bool is_exchange_lead(const Signature& sig, const VariableMap& vm, DirectedEdge e1, DirectedEdge e2) {
  Vertex u = e1.from, v = e1.to, w = e2.from, s = e2.to;
  if (u == w || u == s || v == w || v == s) return false;
  if (!sig.adjacent(u, s) || !sig.adjacent(w, v)) return false;
  auto slot = [&](Vertex a, Vertex b) { return (vm.var({a, b}) - 1) / 2; };
  int in_lead = std::min(slot(u, v), slot(w, s));
  int other = std::min(slot(u, s), slot(w, v));
  return other < in_lead;
}

template <class F>
void for_each_tuple(int n, int len, F&& f) {
  std::vector<int> t(static_cast<std::size_t>(len));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == len) {
      f(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      t[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// Reduced Groebner basis of the toric ideal of the symmetric edge polytope (canonical order).
inline std::vector<GBElement> build_basis(const Signature& sig, Kind4Reading reading = Kind4Reading::Validated) {
  if (sig.num_classes() < 2) throw Error(ErrorCode::InvalidArgument, "basis needs at least two classes");
  const VariableMap vm(sig);
  const int n = sig.total();
  std::vector<GBElement> out;
  std::set<std::pair<Monomial, Monomial>> seen;
  auto add = [&](GBKind k, const std::vector<DirectedEdge>& lead, int lead_z, const std::vector<DirectedEdge>& tail, int tail_z) {
    Monomial l = make_monomial(vm, lead, lead_z), t = make_monomial(vm, tail, tail_z);
    if (seen.emplace(l, t).second) out.push_back({std::move(l), std::move(t), k});
  };
  auto adj = [&](Vertex a, Vertex b) { return sig.adjacent(a, b); };

  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      if (adj(a, b)) add(GBKind::K1, {{a, b}, {b, a}}, 0, {}, 2);

  detail::for_each_tuple(n, 3, [&](const std::vector<int>& t) {
    Vertex a = t[0], b = t[1], c = t[2];
    if (adj(a, b) && adj(b, c) && adj(a, c)) add(GBKind::K2, {{a, b}, {b, c}}, 0, {{a, c}}, 1);
  });

  if (n >= 4) {
    detail::for_each_tuple(n, 4, [&](const std::vector<int>& t) {
      Vertex a = t[0], b = t[1], c = t[2], d = t[3];
      if (!(adj(a, b) && adj(b, c) && adj(c, d) && adj(d, a))) return;
      if (sig.class_of(b) == sig.class_of(d) && a == sig.smallest_outside(sig.class_of(b)))
        add(GBKind::K3a, {{b, c}, {c, d}}, 0, {{b, a}, {a, d}}, 0);
      if (a == std::min({a, b, c, d}) && b < d) {
        add(GBKind::K3b, {{b, c}, {d, a}}, 0, {{b, a}, {d, c}}, 0);
        add(GBKind::K3b, {{c, b}, {a, d}}, 0, {{a, b}, {c, d}}, 0);
      }
    });
  }

  if (n >= 5) {
    detail::for_each_tuple(n, 5, [&](const std::vector<int>& t) {
      Vertex a = t[0], b = t[1], c = t[2], d = t[3], e = t[4];
      if (!(adj(a, b) && adj(b, c) && adj(c, d) && adj(d, e) && adj(e, a))) return;
      if (sig.class_of(a) != sig.class_of(c)) return;
      bool ok = false;
      switch (reading) {
        case Kind4Reading::Validated:
          ok = b == sig.smallest_outside(sig.class_of(a)) && !detail::is_exchange_lead(sig, vm, {a, b}, {d, e}) &&
               !detail::is_exchange_lead(sig, vm, {b, c}, {d, e});
          break;
        case Kind4Reading::SmallestOfUnion:
          ok = sig.class_of(a) <= 1 && sig.class_of(b) <= 1 && b == 0;
          break;
        case Kind4Reading::SmallestOfOwnClass:
          ok = sig.class_of(a) <= 1 && sig.class_of(b) <= 1 && b == sig.first_of_class(sig.class_of(b));
          break;
      }
      if (ok) add(GBKind::K4, {{a, b}, {b, c}, {d, e}}, 0, {{d, c}, {a, e}}, 1);
    });
  }

  if (n >= 6) {
    detail::for_each_tuple(n, 6, [&](const std::vector<int>& t) {
      for (int i = 0; i < 6; ++i)
        if (!adj(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>((i + 1) % 6)])) return;
      Vertex a = t[0], b = t[1], c = t[2], d = t[3], e = t[4], f = t[5];
      auto slot = [&](Vertex x, Vertex y) { return (vm.var({x, y}) - 1) / 2; };
      int ab = slot(a, b);
      for (int i = 1; i < 6; ++i)
        if (slot(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>((i + 1) % 6)]) < ab) return;
      const DirectedEdge lead[3] = {{b, c}, {d, e}, {f, a}};
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (detail::is_exchange_lead(sig, vm, lead[i], lead[j])) return;
      add(GBKind::K5, {lead[0], lead[1], lead[2]}, 0, {{b, a}, {d, c}, {f, e}}, 0);
    });
  }
  return out;
}

// No lead divides another lead.
inline bool reducedness_check(const std::vector<GBElement>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (i != j && basis[i].lead.divides(basis[j].lead)) return false;
  return true;
}

// Image of a monomial under x_{a,b} -> (e_a - e_b, 1), z -> (0, 1).
inline std::vector<int> toric_image(const Monomial& m, const VariableMap& vm) {
  std::vector<int> img(static_cast<std::size_t>(vm.num_vertices()) + 1, 0);
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    img.back() += m.exp[i];
    if (i == 0) continue;
    auto e = vm.edge_of(static_cast<int>(i));
    img[static_cast<std::size_t>(e.from)] += m.exp[i];
    img[static_cast<std::size_t>(e.to)] -= m.exp[i];
  }
  return img;
}

inline bool toric_membership_check(const Signature& sig, const GBElement& el) {
  const VariableMap vm(sig);
  return toric_image(el.lead, vm) == toric_image(el.tail, vm);
}

struct GroebnerLimits {
  int max_edges = 9;
  int jobs = 1;
};

inline void check_edge_bound(const Signature& sig, const GroebnerLimits& lim) {
  int edges = static_cast<int>(edge_order(sig).size());
  if (edges > lim.max_edges)
    throw Error(ErrorCode::SizeExceeded, std::to_string(edges) + " edges exceeds bound " + std::to_string(lim.max_edges));
}

// Every stated lead is the degrevlex-larger monomial of its binomial.
inline bool leading_term_consistency(const Signature& sig, const GroebnerLimits& lim = {28, 1}) {
  check_edge_bound(sig, lim);
  for (const auto& el : build_basis(sig))
    if (!degrevlex_greater(el.lead, el.tail)) return false;
  return true;
}

// Normal form of a monomial; the reducer is the first basis element whose lead divides.
inline Monomial normal_form(Monomial m, const std::vector<GBElement>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& el : basis) {
      if (el.lead.divides(m)) {
        m = (m / el.lead) * el.tail;
        changed = true;
        break;
      }
    }
  }
  return m;
}

struct BuchbergerReport {
  std::size_t pairs = 0;
  std::size_t failures = 0;
  std::optional<std::pair<std::size_t, std::size_t>> first_failure;
  bool ok() const { return failures == 0; }
};

// S(f,g) of binomials reduces to NF(l/L_g * T_g) - NF(l/L_f * T_f); zero iff both normal forms agree.
inline BuchbergerReport buchberger_report(const std::vector<GBElement>& basis, int jobs = 1) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
  std::vector<char> bad(pairs.size(), 0);
  auto worker = [&](std::size_t start, std::size_t stride) {
    for (std::size_t p = start; p < pairs.size(); p += stride) {
      const auto& f = basis[pairs[p].first];
      const auto& g = basis[pairs[p].second];
      Monomial l = f.lead.lcm(g.lead);
      Monomial lhs = normal_form((l / f.lead) * f.tail, basis);
      Monomial rhs = normal_form((l / g.lead) * g.tail, basis);
      bad[p] = lhs == rhs ? 0 : 1;
    }
  };
  const std::size_t nj = static_cast<std::size_t>(std::max(1, jobs));
  if (nj == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < nj; ++j) pool.emplace_back(worker, j, nj);
    for (auto& t : pool) t.join();
  }
  BuchbergerReport rep;
  rep.pairs = pairs.size();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (!bad[p]) continue;
    if (!rep.first_failure) rep.first_failure = pairs[p];
    ++rep.failures;
  }
  return rep;
}

inline bool buchberger_verify(const Signature& sig, const GroebnerLimits& lim = {}) {
  check_edge_bound(sig, lim);
  return buchberger_report(build_basis(sig), lim.jobs).ok();
}

struct Kind4ReadingResult {
  Kind4Reading reading;
  std::size_t size = 0;
  bool reduced = false;
  bool leads_consistent = false;
  bool groebner = false;
  bool validates() const { return reduced && leads_consistent && groebner; }
};

// Builds the basis under every reading and reports which ones validate on this signature.
inline std::vector<Kind4ReadingResult> compare_kind4_readings(const Signature& sig, const GroebnerLimits& lim = {}) {
  check_edge_bound(sig, lim);
  std::vector<Kind4ReadingResult> out;
  for (auto r : {Kind4Reading::Validated, Kind4Reading::SmallestOfUnion, Kind4Reading::SmallestOfOwnClass}) {
    auto b = build_basis(sig, r);
    Kind4ReadingResult res{r, b.size(), reducedness_check(b), true, false};
    for (const auto& el : b) res.leads_consistent = res.leads_consistent && degrevlex_greater(el.lead, el.tail);
    res.groebner = buchberger_report(b, lim.jobs).ok();
    out.push_back(res);
  }
  return out;
}

// One element per line: "lead - tail", monomials as variable-sorted products.
inline std::string export_basis(const Signature& sig, const std::vector<GBElement>& basis) {
  const VariableMap vm(sig);
  std::string out;
  for (const auto& el : basis) out += to_string(el.lead, vm) + " - " + to_string(el.tail, vm) + "\n";
  return out;
}

// ---- cubic obstruction for K_{2,2,2} under arbitrary edge orders ----

struct K222OrderResult {
  std::vector<Edge> order;
  std::vector<bool> flip;
  bool obstruction = false;
  std::vector<Vertex> cycle;  // a..f of the witnessing 6-cycle
  std::string element;        // "lead - tail"
};

struct K222Report {
  std::uint64_t seed = 0;
  std::vector<K222OrderResult> orders;  // canonical order first
  std::size_t counterexamples() const {
    return static_cast<std::size_t>(std::count_if(orders.begin(), orders.end(), [](const auto& r) { return !r.obstruction; }));
  }
};

namespace detail {

// Degree-2 monomials that are not the degrevlex-minimum of their toric fiber.
inline std::set<Monomial> nonstandard_quadrics(const VariableMap& vm) {
  std::map<std::vector<int>, std::vector<Monomial>> fibers;
  for (int i = 0; i < vm.num_vars(); ++i)
    for (int j = i; j < vm.num_vars(); ++j) {
      Monomial m(vm.num_vars());
      ++m.exp[static_cast<std::size_t>(i)];
      ++m.exp[static_cast<std::size_t>(j)];
      fibers[toric_image(m, vm)].push_back(m);
    }
  std::set<Monomial> out;
  for (auto& [img, ms] : fibers) {
    auto mn = std::min_element(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return degrevlex_greater(b, a); });
    for (auto it = ms.begin(); it != ms.end(); ++it)
      if (it != mn) out.insert(*it);
  }
  return out;
}

inline K222OrderResult k222_check_order(const Signature& sig, std::vector<Edge> order, std::vector<bool> flip) {
  const VariableMap vm(sig, order, flip);
  const auto quad = nonstandard_quadrics(vm);
  K222OrderResult res{order, flip, false, {}, {}};
  const Edge smallest = order.front();
  for (int orient = 0; orient < 2 && !res.obstruction; ++orient) {
    Vertex a = orient ? smallest.v : smallest.u;
    Vertex b = orient ? smallest.u : smallest.v;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < sig.total(); ++v)
      if (v != a && v != b) rest.push_back(v);
    do {
      Vertex c = rest[0], d = rest[1], e = rest[2], f = rest[3];
      const Vertex cyc[6] = {a, b, c, d, e, f};
      bool ok = true;
      for (int i = 0; i < 6 && ok; ++i) ok = sig.adjacent(cyc[i], cyc[(i + 1) % 6]);
      if (!ok) continue;
      Monomial lead = make_monomial(vm, {{b, c}, {d, e}, {f, a}});
      Monomial tail = make_monomial(vm, {{b, a}, {d, c}, {f, e}});
      if (!degrevlex_greater(lead, tail)) continue;
      bool divisible = false;
      const DirectedEdge le[3] = {{b, c}, {d, e}, {f, a}};
      for (int i = 0; i < 3 && !divisible; ++i)
        for (int j = i + 1; j < 3 && !divisible; ++j) divisible = quad.count(make_monomial(vm, {le[i], le[j]})) > 0;
      if (divisible) continue;
      res.obstruction = true;
      res.cycle.assign(cyc, cyc + 6);
      res.element = to_string(lead, vm) + " - " + to_string(tail, vm);
      break;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return res;
}

}  // namespace detail

// Canonical order plus num_orders random edge orders (random permutation of the edges and a
// random choice of which orientation takes the smaller variable slot of each edge).
inline K222Report k222_order_scan(int num_orders, std::uint64_t seed) {
  const Signature sig({2, 2, 2});
  K222Report rep;
  rep.seed = seed;
  const auto canonical = edge_order(sig);
  rep.orders.push_back(detail::k222_check_order(sig, canonical, {}));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < num_orders; ++i) {
    auto order = canonical;
    for (std::size_t j = order.size(); j > 1; --j) std::swap(order[j - 1], order[static_cast<std::size_t>(rng() % j)]);
    std::vector<bool> flip(order.size());
    for (std::size_t j = 0; j < flip.size(); ++j) flip[j] = (rng() & 1U) != 0;
    rep.orders.push_back(detail::k222_check_order(sig, std::move(order), std::move(flip)));
  }
  return rep;
}

}  // namespace sepcl
