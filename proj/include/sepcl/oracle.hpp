#pragma once

#include <cstdint>
#include <future>
#include <thread>
#include <vector>

#include "sepcl/ehrhart.hpp"
#include "sepcl/graph.hpp"

namespace sepcl {

struct OracleOptions {
  int max_total = 6;  // 7 is feasible but slow
  int jobs = 1;
};

struct DilationCount {
  int k = 0;
  std::uint64_t count = 0;
};

namespace detail {

// Counts x with x_0 fixed, sum x = 0, |x_v| <= k and <lambda, x> <= k for every labeling.
class LatticeCounter {
 public:
  LatticeCounter(const Signature& sig, int k)
      : n_(sig.total()), k_(k), labelings_(enumerate_facet_labelings(sig)) {
    for (const auto& l : labelings_) {
      std::vector<int> col(l.values);
      lam_.push_back(std::move(col));
    }
    partial_.assign(labelings_.size(), std::vector<long>(static_cast<std::size_t>(n_) + 1, 0));
  }

  std::uint64_t count_with_first(int x0) {
    x_.assign(static_cast<std::size_t>(n_), 0);
    x_[0] = x0;
    for (std::size_t l = 0; l < lam_.size(); ++l) partial_[l][1] = static_cast<long>(lam_[l][0]) * x0;
    return descend(1, x0);
  }

 private:
  std::uint64_t descend(int depth, long sum) {
    const int remaining = n_ - depth;
    if (remaining == 1) {
      long last = -sum;
      if (last < -k_ || last > k_) return 0;
      for (std::size_t l = 0; l < lam_.size(); ++l)
        if (partial_[l][static_cast<std::size_t>(depth)] + lam_[l][static_cast<std::size_t>(depth)] * last > k_) return 0;
      return 1;
    }
    std::uint64_t total = 0;
    for (int v = -k_; v <= k_; ++v) {
      long s = sum + v;
      // the remaining coordinates must be able to cancel the running sum
      if (s > static_cast<long>(k_) * (remaining - 1) || s < -static_cast<long>(k_) * (remaining - 1)) continue;
      for (std::size_t l = 0; l < lam_.size(); ++l)
        partial_[l][static_cast<std::size_t>(depth) + 1] = partial_[l][static_cast<std::size_t>(depth)] + lam_[l][static_cast<std::size_t>(depth)] * v;
      total += descend(depth + 1, s);
    }
    return total;
  }

  int n_;
  int k_;
  std::vector<FacetLabeling> labelings_;
  std::vector<std::vector<int>> lam_;
  std::vector<std::vector<long>> partial_;
  std::vector<int> x_;
};

inline void check_oracle_bound(const Signature& sig, const OracleOptions& opt) {
  if (sig.total() < 2) throw Error(ErrorCode::InvalidArgument, "signature total must be at least 2");
  if (sig.num_classes() < 2) throw Error(ErrorCode::InvalidArgument, "graph must have at least two classes");
  if (sig.total() > opt.max_total)
    throw Error(ErrorCode::SizeExceeded, "oracle bound: total " + std::to_string(sig.total()) + " > " + std::to_string(opt.max_total));
}

}  // namespace detail

// Lattice points of k*P_G. The facet inequalities are shift invariant on the sum-zero hyperplane.
inline DilationCount count_lattice_points(const Signature& sig, int k, const OracleOptions& opt = {}) {
  detail::check_oracle_bound(sig, opt);
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative dilation");
  if (k == 0) return {0, 1};
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::uint64_t> parts(static_cast<std::size_t>(2 * k + 1), 0);
  auto worker = [&](int slot) {
    detail::LatticeCounter counter(sig, k);
    for (int x0 = -k + slot; x0 <= k; x0 += jobs) parts[static_cast<std::size_t>(x0 + k)] = counter.count_with_first(x0);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
    for (auto& t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (auto c : parts) total += c;
  return {k, total};
}

// Lagrange interpolation through (k, count(k)) for k = 0..d, guarded at k = d+1.
inline RatPoly ehrhart_interpolate(const Signature& sig, const OracleOptions& opt = {}) {
  detail::check_oracle_bound(sig, opt);
  const int d = sig.dim();
  std::vector<Rat> ys;
  for (int k = 0; k <= d; ++k) ys.emplace_back(count_lattice_points(sig, k, opt).count);
  RatPoly e;
  for (int i = 0; i <= d; ++i) {
    RatPoly basis = RatPoly::constant(1);
    Rat denom = 1;
    for (int j = 0; j <= d; ++j) {
      if (j == i) continue;
      basis *= RatPoly({-j, 1});
      denom *= i - j;
    }
    e += basis * (ys[static_cast<std::size_t>(i)] / denom);
  }
  Rat guess = e(Rat(d + 1));
  std::uint64_t actual = count_lattice_points(sig, d + 1, opt).count;
  if (!is_integer(guess) || guess != Rat(actual))
    throw Error(ErrorCode::InterpolationGuardFailed,
                "interpolant gives " + to_string(guess) + " at k=" + std::to_string(d + 1) + ", count is " + std::to_string(actual));
  return e;
}

inline HStar hstar_oracle(const Signature& sig, const OracleOptions& opt = {}) {
  return hstar_from_ehrhart(ehrhart_interpolate(sig, opt), sig.dim());
}

}  // namespace sepcl
