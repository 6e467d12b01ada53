#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>

#include "sepcl/groebner.hpp"

using namespace sepcl;

namespace {

std::vector<Signature> compositions(int min_total, int max_total, int min_classes = 2) {
  std::vector<Signature> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      if (static_cast<int>(cur.size()) >= min_classes) out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      self(self, left - p);
      cur.pop_back();
    }
  };
  for (int t = min_total; t <= max_total; ++t) rec(rec, t);
  return out;
}

// Reduced Groebner basis of a toric ideal straight from its fibers: the standard monomials
// are the degrevlex-minimal member of each fiber, leads are the minimal non-standard
// monomials and each tail is the standard monomial of the lead's fiber.
struct FiberBasis {
  std::set<std::pair<Monomial, Monomial>> elements;
  int max_degree_checked = 0;
};

std::vector<int> image_of(const Monomial& m, const VariableMap& vm) {
  std::vector<int> img(static_cast<std::size_t>(vm.num_vertices()) + 1, 0);
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    img.back() += m.exp[i];
    if (i == 0 || m.exp[i] == 0) continue;
    auto e = vm.edge_of(static_cast<int>(i));
    img[static_cast<std::size_t>(e.from)] += m.exp[i];
    img[static_cast<std::size_t>(e.to)] -= m.exp[i];
  }
  return img;
}

FiberBasis fiber_basis(const Signature& sig, int max_degree) {
  const VariableMap vm(sig);
  const int nv = vm.num_vars();
  FiberBasis fb;
  fb.max_degree_checked = max_degree;
  std::set<Monomial> nonstandard;
  for (int d = 2; d <= max_degree; ++d) {
    std::vector<Monomial> all;
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    while (true) {
      Monomial m(nv);
      for (int i : idx) ++m.exp[static_cast<std::size_t>(i)];
      all.push_back(m);
      int p = d - 1;
      while (p >= 0 && idx[static_cast<std::size_t>(p)] == nv - 1) --p;
      if (p < 0) break;
      ++idx[static_cast<std::size_t>(p)];
      for (int q = p + 1; q < d; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(p)];
    }
    std::map<std::vector<int>, Monomial> minimum;
    for (const auto& m : all) {
      auto img = image_of(m, vm);
      auto it = minimum.find(img);
      if (it == minimum.end())
        minimum.emplace(img, m);
      else if (degrevlex_greater(it->second, m))
        it->second = m;
    }
    for (const auto& m : all) {
      const Monomial& std_m = minimum.at(image_of(m, vm));
      if (std_m == m) continue;
      nonstandard.insert(m);
      bool minimal = true;
      for (int v = 0; v < nv && minimal; ++v) {
        if (m.exp[static_cast<std::size_t>(v)] == 0) continue;
        Monomial sub(m);
        --sub.exp[static_cast<std::size_t>(v)];
        if (nonstandard.count(sub)) minimal = false;
      }
      if (minimal) fb.elements.emplace(m, std_m);
    }
  }
  return fb;
}

std::set<std::pair<Monomial, Monomial>> as_set(const std::vector<GBElement>& b) {
  std::set<std::pair<Monomial, Monomial>> s;
  for (const auto& el : b) s.emplace(el.lead, el.tail);
  return s;
}

}  // namespace

TEST(Degrevlex, Basics) {
  Monomial a(3), b(3);
  a.exp = {0, 2, 0};
  b.exp = {1, 0, 1};
  // same degree; smallest variable decides, the one with less of it is larger
  EXPECT_TRUE(degrevlex_greater(a, b));
  EXPECT_FALSE(degrevlex_greater(b, a));
  Monomial c(3);
  c.exp = {0, 0, 3};
  EXPECT_TRUE(degrevlex_greater(c, a));
  EXPECT_FALSE(degrevlex_greater(a, a));
}

TEST(VariableMap, Slots) {
  Signature sig({1, 1, 1});
  VariableMap vm(sig);
  EXPECT_EQ(vm.num_vars(), 7);
  EXPECT_EQ(vm.var({0, 1}), 1);
  EXPECT_EQ(vm.var({1, 0}), 2);
  EXPECT_EQ(vm.var({1, 2}), 5);
  EXPECT_EQ(vm.name(0), "z");
  EXPECT_EQ(vm.name(6), "x(3,2)");
  EXPECT_THROW(VariableMap(Signature({2, 1})).var({0, 1}), Error);
}

TEST(BuildBasis, SingleEdge) {
  Signature sig({1, 1});
  auto b = build_basis(sig);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].kind, GBKind::K1);
  EXPECT_EQ(export_basis(sig, b), "x(1,2)*x(2,1) - z^2\n");
}

TEST(BuildBasis, Triangle) {
  auto b = build_basis(Signature({1, 1, 1}));
  EXPECT_EQ(b.size(), 9u);
  EXPECT_EQ(std::count_if(b.begin(), b.end(), [](auto& e) { return e.kind == GBKind::K1; }), 3);
  EXPECT_EQ(std::count_if(b.begin(), b.end(), [](auto& e) { return e.kind == GBKind::K2; }), 6);
}

TEST(BuildBasis, CubicElementsForK222) {
  auto b = build_basis(Signature({2, 2, 2}));
  EXPECT_EQ(b.size(), 132u);
  EXPECT_TRUE(std::any_of(b.begin(), b.end(), [](auto& e) { return e.kind == GBKind::K5 && e.degree() == 3; }));
}

TEST(BuildBasis, MatchesFiberOracle) {
  for (const auto& sig : compositions(2, 6)) {
    int deg = sig.total() <= 5 ? 4 : 3;
    auto want = fiber_basis(sig, deg).elements;
    EXPECT_EQ(as_set(build_basis(sig)), want) << sig.to_string();
  }
}

TEST(BuildBasis, KindFourReadings) {
  // own-class agrees more often than union, but neither literal reading is the reduced basis everywhere
  std::vector<std::string> union_bad, own_bad;
  for (const auto& sig : compositions(2, 6)) {
    auto want = fiber_basis(sig, 3).elements;
    if (as_set(build_basis(sig, Kind4Reading::SmallestOfUnion)) != want) union_bad.push_back(sig.to_string());
    if (as_set(build_basis(sig, Kind4Reading::SmallestOfOwnClass)) != want) own_bad.push_back(sig.to_string());
  }
  EXPECT_EQ(own_bad, (std::vector<std::string>{"1,1,2,1,1", "2,1,2,1"}));
  EXPECT_EQ(union_bad.size(), 11u);
  auto res = compare_kind4_readings(Signature({2, 2, 1}));
  ASSERT_EQ(res.size(), 3u);
  EXPECT_TRUE(res[0].validates());
  EXPECT_FALSE(res[1].validates());
  EXPECT_TRUE(res[2].validates());
  auto res2 = compare_kind4_readings(Signature({2, 1, 2, 1}), {13, 1});
  EXPECT_TRUE(res2[0].validates());
  EXPECT_FALSE(res2[2].validates());
}

TEST(BuildBasis, ToricMembership) {
  for (const auto& sig : compositions(2, 7))
    for (const auto& el : build_basis(sig)) EXPECT_TRUE(toric_membership_check(sig, el)) << sig.to_string();
}

TEST(BuildBasis, ReducedAndAtMostCubic) {
  for (const auto& sig : compositions(2, 7)) {
    auto b = build_basis(sig);
    EXPECT_TRUE(reducedness_check(b)) << sig.to_string();
    for (const auto& el : b) EXPECT_LE(el.degree(), 3);
  }
}

TEST(Reducedness, Examples) {
  EXPECT_TRUE(reducedness_check(build_basis(Signature({1, 1}))));
  EXPECT_TRUE(reducedness_check(build_basis(Signature({1, 1, 2}))));
  EXPECT_TRUE(reducedness_check(build_basis(Signature({2, 2, 2}))));
  auto b = build_basis(Signature({1, 1, 1}));
  b.push_back({b[0].lead * b[1].lead, b[0].tail, GBKind::K1});
  EXPECT_FALSE(reducedness_check(b));
}

TEST(LeadingTerms, Consistent) {
  for (const auto& sig : compositions(2, 7)) EXPECT_TRUE(leading_term_consistency(sig)) << sig.to_string();
  EXPECT_TRUE(leading_term_consistency(Signature({2, 2, 2})));
}

TEST(Buchberger, SmallGraphs) {
  for (auto p : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {1, 1, 1, 1}})
    EXPECT_TRUE(buchberger_verify(Signature(p))) << Signature(p).to_string();
}

TEST(Buchberger, ThreadedReportMatches) {
  auto b = build_basis(Signature({1, 2, 2}));
  auto r1 = buchberger_report(b, 1), r3 = buchberger_report(b, 3);
  EXPECT_EQ(r1.pairs, r3.pairs);
  EXPECT_EQ(r1.failures, 0u);
  EXPECT_EQ(r3.failures, 0u);
}

TEST(Buchberger, DetectsMissingElement) {
  auto b = build_basis(Signature({1, 1, 2}));
  auto it = std::find_if(b.begin(), b.end(), [](auto& e) { return e.kind == GBKind::K3a || e.kind == GBKind::K3b; });
  ASSERT_NE(it, b.end());
  b.erase(it);
  EXPECT_FALSE(buchberger_report(b).ok());
}

TEST(Buchberger, SizeBound) {
  try {
    buchberger_verify(Signature({2, 2, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeExceeded);
  }
}

TEST(K222, CanonicalAndRandomOrders) {
  auto rep = k222_order_scan(100, 7);
  ASSERT_EQ(rep.orders.size(), 101u);
  EXPECT_EQ(rep.counterexamples(), 0u);
  EXPECT_EQ(rep.orders[0].element, "x(6,1)*x(2,4)*x(3,5) - x(3,1)*x(2,5)*x(6,4)");
}

TEST(K222, Deterministic) {
  auto a = k222_order_scan(1, 0), b = k222_order_scan(1, 0);
  ASSERT_EQ(a.orders.size(), 2u);
  EXPECT_EQ(a.orders[1].order, b.orders[1].order);
  EXPECT_EQ(a.orders[1].flip, b.orders[1].flip);
  EXPECT_EQ(a.orders[1].element, b.orders[1].element);
}

TEST(K222, WitnessIsReducedBasisElement) {
  // under the canonical order the witness is literally in the fiber-oracle basis
  const Signature sig({2, 2, 2});
  auto rep = k222_order_scan(0, 7);
  ASSERT_TRUE(rep.orders[0].obstruction);
  auto want = fiber_basis(sig, 3).elements;
  const VariableMap vm(sig);
  bool found = false;
  for (const auto& [lead, tail] : want)
    found = found || to_string(lead, vm) + " - " + to_string(tail, vm) == rep.orders[0].element;
  EXPECT_TRUE(found);
}
