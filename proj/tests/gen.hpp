#pragma once

#include "latdef/intmatrix.hpp"
#include "latdef/numeric.hpp"
#include "latdef/pointconfig.hpp"

#include <cstdint>
#include <random>
#include <vector>

// Deterministic generators for randomized tests. mt19937_64 with modulo
// reduction keeps draws identical across platforms; the distribution bias
// is irrelevant here.
namespace testgen {

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int irange(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline latdef::Point random_point(Rng& r, std::size_t n, int lo, int hi) {
  latdef::Point p(n);
  for (auto& c : p) c = r.irange(lo, hi);
  return p;
}

inline std::vector<latdef::Point> random_points(Rng& r, std::size_t count, std::size_t n,
                                                int lo, int hi) {
  std::vector<latdef::Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_point(r, n, lo, hi));
  return out;
}

inline latdef::IntMatrix random_unimodular(Rng& r, std::size_t n, int steps = 8) {
  using latdef::Integer;
  latdef::IntMatrix u = latdef::IntMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    const int i = r.irange(0, static_cast<int>(n) - 1);
    int j = r.irange(0, static_cast<int>(n) - 2);
    if (j >= i) ++j;
    switch (r.irange(0, 2)) {
      case 0:
        u.add_col_multiple(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                           Integer(r.irange(-2, 2)));
        break;
      case 1:
        u.swap_cols(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        break;
      default:
        u.negate_col(static_cast<std::size_t>(i));
        break;
    }
  }
  return u;
}

// configuration with a guaranteed full-dimensional difference lattice
inline latdef::PointConfiguration random_fulldim_config(Rng& r, std::size_t n, std::size_t extra,
                                                        int lo, int hi) {
  std::vector<latdef::Point> pts;
  latdef::Point base = random_point(r, n, lo, hi);
  pts.push_back(base);
  for (std::size_t j = 0; j < n; ++j) {
    latdef::Point p = base;
    p[j] += 1 + r.irange(0, 1);
    pts.push_back(p);
  }
  for (std::size_t t = 0; t < extra; ++t) pts.push_back(random_point(r, n, lo, hi));
  return latdef::PointConfiguration::make(n, pts);
}

}  // namespace testgen
