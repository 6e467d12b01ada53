#pragma once

#include <bitset>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "sepcl/ehrhart.hpp"
#include "sepcl/groebner.hpp"

namespace sepcl {

struct DirTree {
  std::vector<DirectedEdge> edges;

  DirTree reversed() const {
    DirTree r{edges};
    for (auto& e : r.edges) e = e.reversed();
    return r;
  }
  // "u>v" tokens, 1-based.
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < edges.size(); ++i)
      s += (i ? " " : "") + std::to_string(edges[i].from + 1) + ">" + std::to_string(edges[i].to + 1);
    return s;
  }
  friend bool operator==(const DirTree&, const DirTree&) = default;
  friend auto operator<=>(const DirTree&, const DirTree&) = default;
};

struct TriangulationOptions {
  int max_total = 7;
  int jobs = 1;
};

namespace detail {

constexpr std::size_t kMaxVars = 512;
using VarMask = std::bitset<kMaxVars>;

struct TreeContext {
  Signature sig;
  VariableMap vm;
  std::vector<Edge> edges;
  std::vector<VarMask> leads;
  std::vector<std::vector<std::size_t>> leads_with_var;  // var -> lead indices

  explicit TreeContext(const Signature& s) : sig(s), vm(s), edges(edge_order(s)) {
    if (static_cast<std::size_t>(vm.num_vars()) > kMaxVars) throw Error(ErrorCode::SizeExceeded, "too many edges");
    leads_with_var.resize(static_cast<std::size_t>(vm.num_vars()));
    for (const auto& el : build_basis(s)) {
      VarMask m;
      for (std::size_t i = 0; i < el.lead.exp.size(); ++i)
        if (el.lead.exp[i]) {
          m.set(i);
          leads_with_var[i].push_back(leads.size());
        }
      leads.push_back(m);
    }
  }
};

// Undirected spanning trees as sorted edge-index lists, in lexicographic order.
inline std::vector<std::vector<int>> spanning_trees(const Signature& sig, const std::vector<Edge>& edges) {
  const int n = sig.total();
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)];
    return x;
  };
  const int m = static_cast<int>(edges.size());
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == n - 1) {
      out.push_back(chosen);
      return;
    }
    if (m - next < n - 1 - static_cast<int>(chosen.size())) return;
    const Edge& e = edges[static_cast<std::size_t>(next)];
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      comp[static_cast<std::size_t>(a)] = b;
      chosen.push_back(next);
      self(self, next + 1);
      chosen.pop_back();
      comp[static_cast<std::size_t>(a)] = a;
    }
    self(self, next + 1);
  };
  if (n == 1) return {{}};
  rec(rec, 0);
  return out;
}

// Orientations of one undirected tree avoiding every lead, lexicographic (forward before reverse).
inline void standard_orientations(const TreeContext& ctx, const std::vector<int>& tree, const std::function<void(const DirTree&)>& f) {
  DirTree cur;
  cur.edges.resize(tree.size());
  VarMask mask;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == tree.size()) {
      f(cur);
      return;
    }
    const Edge& e = ctx.edges[static_cast<std::size_t>(tree[pos])];
    for (DirectedEdge de : {DirectedEdge{e.u, e.v}, DirectedEdge{e.v, e.u}}) {
      auto var = static_cast<std::size_t>(ctx.vm.var(de));
      mask.set(var);
      bool blocked = false;
      for (std::size_t li : ctx.leads_with_var[var])
        if ((ctx.leads[li] & ~mask).none()) {
          blocked = true;
          break;
        }
      if (!blocked) {
        cur.edges[pos] = de;
        self(self, pos + 1);
      }
      mask.reset(var);
    }
  };
  rec(rec, 0);
}

inline void check_tree_bound(const Signature& sig, const TriangulationOptions& opt) {
  if (sig.num_classes() < 2) throw Error(ErrorCode::InvalidArgument, "graph must have at least two classes");
  if (sig.total() > opt.max_total)
    throw Error(ErrorCode::SizeExceeded, "total " + std::to_string(sig.total()) + " exceeds bound " + std::to_string(opt.max_total));
}

}  // namespace detail

// Sequential stream in deterministic order.
inline void for_each_standard_tree(const Signature& sig, const std::function<void(const DirTree&)>& f,
                                   const TriangulationOptions& opt = {}) {
  detail::check_tree_bound(sig, opt);
  detail::TreeContext ctx(sig);
  for (const auto& t : detail::spanning_trees(sig, ctx.edges)) detail::standard_orientations(ctx, t, f);
}

inline std::vector<DirTree> enumerate_standard_trees(const Signature& sig, const TriangulationOptions& opt = {}) {
  detail::check_tree_bound(sig, opt);
  detail::TreeContext ctx(sig);
  const auto trees = detail::spanning_trees(sig, ctx.edges);
  std::vector<std::vector<DirTree>> per(trees.size());
  auto worker = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < trees.size(); i += stride)
      detail::standard_orientations(ctx, trees[i], [&](const DirTree& d) { per[i].push_back(d); });
  };
  const auto nj = static_cast<std::size_t>(std::max(1, opt.jobs));
  if (nj == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < nj; ++j) pool.emplace_back(worker, j, nj);
    for (auto& t : pool) t.join();
  }
  std::vector<DirTree> out;
  for (auto& v : per)
    for (auto& d : v) out.push_back(std::move(d));
  return out;
}

// Edges u->v with v the parent of u when the tree hangs from root.
inline int inedge(const DirTree& tree, Vertex root = 0) {
  int n = static_cast<int>(tree.edges.size()) + 1;
  for (const auto& e : tree.edges) n = std::max({n, e.from + 1, e.to + 1});
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& e : tree.edges) {
    adj[static_cast<std::size_t>(e.from)].push_back(e.to);
    adj[static_cast<std::size_t>(e.to)].push_back(e.from);
  }
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -2);
  parent[static_cast<std::size_t>(root)] = -1;
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[static_cast<std::size_t>(x)])
      if (parent[static_cast<std::size_t>(y)] == -2) {
        parent[static_cast<std::size_t>(y)] = x;
        stack.push_back(y);
      }
  }
  int c = 0;
  for (const auto& e : tree.edges) c += parent[static_cast<std::size_t>(e.from)] == e.to;
  return c;
}

inline HStar hstar_triangulation(const Signature& sig, const TriangulationOptions& opt = {}) {
  std::vector<long> hist(static_cast<std::size_t>(sig.total()), 0);
  for (const auto& t : enumerate_standard_trees(sig, opt)) ++hist[static_cast<std::size_t>(inedge(t))];
  return HStar::from_ints(hist, sig.dim());
}

// The facet labeling (from the list) containing every edge of the tree.
inline const FacetLabeling& facet_of(const DirTree& tree, const std::vector<FacetLabeling>& labelings) {
  const FacetLabeling* hit = nullptr;
  for (const auto& lam : labelings) {
    bool all = std::all_of(tree.edges.begin(), tree.edges.end(), [&](const DirectedEdge& e) { return lam.contains(e); });
    if (!all) continue;
    if (hit) throw Error(ErrorCode::AmbiguousFacet, "tree " + tree.to_string() + " lies in two facets");
    hit = &lam;
  }
  if (!hit) throw Error(ErrorCode::AmbiguousFacet, "tree " + tree.to_string() + " lies in no facet");
  return *hit;
}

struct FacetSplit {
  RatPoly type_i;
  RatPoly type_ii;
};

inline FacetSplit hstar_split_by_facet_type(const Signature& sig, const TriangulationOptions& opt = {}) {
  if (sig.num_classes() < 3) throw Error(ErrorCode::InvalidArgument, "facet split needs at least three classes");
  const auto trees = enumerate_standard_trees(sig, opt);
  const auto labs = enumerate_facet_labelings(sig);
  std::vector<long> h1(static_cast<std::size_t>(sig.total()), 0), h2(h1);
  for (const auto& t : trees) {
    auto type = classify_labeling(sig, facet_of(t, labs));
    ++(type == FacetType::TypeI ? h1 : h2)[static_cast<std::size_t>(inedge(t))];
  }
  auto to_poly = [](const std::vector<long>& h) {
    std::vector<Rat> c;
    for (long x : h) c.emplace_back(x);
    return RatPoly(c);
  };
  return {to_poly(h1), to_poly(h2)};
}

// Planar spanning trees of K_{a,b} with A = {1..a}, B = {1..b}: a+b-1 edges covering every
// vertex, monotone (i < i' implies j <= j'). They are the staircase paths from (1,1) to (a,b).
using PlanarTree = std::vector<std::pair<int, int>>;

inline Integer planar_tree_count(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidArgument, "part sizes must be positive");
  return binom(a + b - 2, b - 1);
}

inline std::vector<PlanarTree> enumerate_planar_trees(int a, int b) {
  if (a < 1 || b < 1) throw Error(ErrorCode::InvalidArgument, "part sizes must be positive");
  std::vector<PlanarTree> out;
  PlanarTree cur{{1, 1}};
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == a && j == b) {
      out.push_back(cur);
      return;
    }
    if (i < a) {
      cur.emplace_back(i + 1, j);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < b) {
      cur.emplace_back(i, j + 1);
      self(self, i, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1, 1);
  for (auto& t : out) std::sort(t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::pair<Integer, std::vector<PlanarTree>> planar_trees(int a, int b) {
  return {planar_tree_count(a, b), enumerate_planar_trees(a, b)};
}

}  // namespace sepcl
