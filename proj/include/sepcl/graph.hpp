#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sepcl/error.hpp"

namespace sepcl {

// Vertices are 0-based internally and numbered class by class in signature order.
using Vertex = int;

struct Edge {
  Vertex u;  // u < v
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct DirectedEdge {
  Vertex from;
  Vertex to;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
  DirectedEdge reversed() const { return {to, from}; }
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw Error(ErrorCode::InvalidArgument, "empty signature");
    for (int a : parts_)
      if (a <= 0) throw Error(ErrorCode::InvalidArgument, "class sizes must be positive");
    for (int i = 0; i < static_cast<int>(parts_.size()); ++i)
      for (int j = 0; j < parts_[static_cast<std::size_t>(i)]; ++j) class_of_.push_back(i);
  }

  // "a_1,a_2,...,a_k"
  static Signature parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0)
        throw Error(ErrorCode::ParseError, "bad signature '" + std::string(text) + "'");
      parts.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Signature(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int num_classes() const { return static_cast<int>(parts_.size()); }
  int total() const { return static_cast<int>(class_of_.size()); }
  int dim() const { return total() - 1; }
  int class_of(Vertex v) const { return class_of_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex a, Vertex b) const { return class_of(a) != class_of(b); }

  Vertex first_of_class(int c) const {
    return std::accumulate(parts_.begin(), parts_.begin() + c, 0);
  }
  // Smallest vertex not in class c (exists whenever k >= 2).
  Vertex smallest_outside(int c) const { return c == 0 ? parts_[0] : 0; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s;
  }

  friend bool operator==(const Signature& a, const Signature& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> class_of_;
};

// Undirected edges ordered lexicographically by (smaller endpoint, larger endpoint).
inline std::vector<Edge> edge_order(const Signature& sig) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < sig.total(); ++u)
    for (Vertex v = u + 1; v < sig.total(); ++v)
      if (sig.adjacent(u, v)) out.push_back({u, v});
  return out;
}

// Vertex vectors +-(e_v - e_w), one pair per edge: e_u - e_v first, then its negative.
inline std::vector<std::vector<int>> vertex_set(const Signature& sig) {
  std::vector<std::vector<int>> out;
  for (const Edge& e : edge_order(sig)) {
    std::vector<int> p(static_cast<std::size_t>(sig.total()), 0);
    p[static_cast<std::size_t>(e.u)] = 1;
    p[static_cast<std::size_t>(e.v)] = -1;
    out.push_back(p);
    for (int& x : p) x = -x;
    out.push_back(std::move(p));
  }
  return out;
}

// A facet-defining labeling, normalized to min 0. The facet is <lambda, x> <= 1 where
// the directed edge a->b sits at e_a - e_b, so a->b lies on the facet iff lambda(a) - lambda(b) == 1.
struct FacetLabeling {
  std::vector<int> values;

  int operator[](Vertex v) const { return values[static_cast<std::size_t>(v)]; }
  bool contains(DirectedEdge e) const { return (*this)[e.from] - (*this)[e.to] == 1; }
  FacetLabeling negated() const {
    int mx = *std::max_element(values.begin(), values.end());
    FacetLabeling out{values};
    for (int& x : out.values) x = mx - x;
    return out;
  }
  friend bool operator==(const FacetLabeling&, const FacetLabeling&) = default;
  friend auto operator<=>(const FacetLabeling&, const FacetLabeling&) = default;
};

// Conditions on a {0,..}-valued labeling: adjacent labels differ by at most one, and the
// unit-difference edges form a connected spanning subgraph.
inline bool is_facet_defining(const Signature& sig, const std::vector<int>& lam) {
  const int n = sig.total();
  std::vector<int> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[static_cast<std::size_t>(x)] != x) x = comp[static_cast<std::size_t>(x)] = comp[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
    return x;
  };
  int components = n;
  for (const Edge& e : edge_order(sig)) {
    int d = lam[static_cast<std::size_t>(e.u)] - lam[static_cast<std::size_t>(e.v)];
    if (d > 1 || d < -1) return false;
    if (d == 0) continue;
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      comp[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

// All facet labelings in lexicographic order of value vectors. Values {0,1,2} suffice:
// the graph has diameter <= 2 and labels change by at most one along an edge.
inline std::vector<FacetLabeling> enumerate_facet_labelings(const Signature& sig) {
  const int n = sig.total();
  if (n > 20) throw Error(ErrorCode::SizeExceeded, "labeling enumeration limited to 20 vertices");
  std::vector<FacetLabeling> out;
  std::vector<int> lam(static_cast<std::size_t>(n), 0);
  while (true) {
    if (*std::min_element(lam.begin(), lam.end()) == 0 && is_facet_defining(sig, lam)) out.push_back({lam});
    int i = n - 1;
    while (i >= 0 && lam[static_cast<std::size_t>(i)] == 2) lam[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++lam[static_cast<std::size_t>(i)];
  }
  return out;
}

enum class FacetType { TypeI, TypeIIa, TypeIIb };

inline std::string_view facet_type_name(FacetType t) {
  switch (t) {
    case FacetType::TypeI: return "I";
    case FacetType::TypeIIa: return "IIa";
    case FacetType::TypeIIb: return "IIb";
  }
  return "?";
}

// Type I: one class labelled {0,2} (both present), every other vertex 1.
// Type IIa: {0,1}-valued and constant on every class. Type IIb: {0,1}-valued with a
// class carrying both values and the complement of that class carrying both values.
inline FacetType classify_labeling(const Signature& sig, const FacetLabeling& lam) {
  if (sig.num_classes() < 3) throw Error(ErrorCode::InvalidArgument, "classification needs at least three classes");
  if (static_cast<int>(lam.values.size()) != sig.total()) throw Error(ErrorCode::InvalidArgument, "labeling size mismatch");
  const int mn = *std::min_element(lam.values.begin(), lam.values.end());
  const int mx = *std::max_element(lam.values.begin(), lam.values.end());
  std::vector<int> v(lam.values);
  for (int& x : v) x -= mn;
  const int k = sig.num_classes();
  auto class_values = [&](int c) {
    std::vector<int> seen(3, 0);
    for (Vertex u = 0; u < sig.total(); ++u)
      if (sig.class_of(u) == c && v[static_cast<std::size_t>(u)] <= 2) seen[static_cast<std::size_t>(v[static_cast<std::size_t>(u)])] = 1;
    return seen;
  };
  if (mx - mn == 2) {
    int special = -1;
    for (int c = 0; c < k; ++c) {
      auto s = class_values(c);
      if (s[0] && s[2] && !s[1]) {
        if (special >= 0) throw Error(ErrorCode::Unclassifiable, "two classes carry {0,2}");
        special = c;
      }
    }
    if (special < 0) throw Error(ErrorCode::Unclassifiable, "range 2 without a {0,2} class");
    for (Vertex u = 0; u < sig.total(); ++u)
      if (sig.class_of(u) != special && v[static_cast<std::size_t>(u)] != 1)
        throw Error(ErrorCode::Unclassifiable, "type I labeling must be constant off its class");
    return FacetType::TypeI;
  }
  if (mx - mn != 1) throw Error(ErrorCode::Unclassifiable, "labeling range must be 1 or 2");
  int mixed = -1;
  for (int c = 0; c < k; ++c) {
    auto s = class_values(c);
    if (s[0] && s[1]) {
      mixed = c;
      break;
    }
  }
  if (mixed < 0) return FacetType::TypeIIa;
  int zeros = 0, ones = 0;
  for (Vertex u = 0; u < sig.total(); ++u) {
    if (sig.class_of(u) == mixed) continue;
    (v[static_cast<std::size_t>(u)] == 0 ? zeros : ones)++;
  }
  if (zeros == 0 || ones == 0) throw Error(ErrorCode::Unclassifiable, "mixed class with constant complement");
  return FacetType::TypeIIb;
}

// Facet count for k >= 3 by the linear formula 2^n - sum(2 a_i - 2) - 2.
// Only correct while every a_i <= 2.
inline long facet_count_formula(const Signature& sig) {
  long s = (1L << sig.total()) - 2;
  for (int a : sig.parts()) s -= 2L * a - 2;
  return s;
}

// Count by type: {0,1}-labelings minus those with one mixed class and constant complement,
// plus the type I labelings. Gives 2^n - sum(2^{a_i} - 2) - 2.
inline long facet_count_by_type(const Signature& sig) {
  long s = (1L << sig.total()) - 2;
  for (int a : sig.parts()) s -= (1L << a) - 2;
  return s;
}

}  // namespace sepcl
