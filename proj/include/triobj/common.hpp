#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace triobj {

// 0/1 decision vector. Kept as bytes so it hashes and compares exactly.
using BitVector = std::vector<std::uint8_t>;

constexpr double kIntegralityTol = 1e-6;   // coordinate counts as binary within this
constexpr double kFeasibilityTol = 1e-7;   // LP row/bound satisfaction
constexpr double kReducedCostTol = 1e-9;   // simplex optimality
constexpr double kImageMergeTol = 1e-6;    // duplicate criterion-space points

inline bool is_binary_value(double v, double tol = kIntegralityTol) {
  return std::fabs(v) <= tol || std::fabs(v - 1.0) <= tol;
}

inline bool is_integral_vector(const std::vector<double>& x,
                               double tol = kIntegralityTol) {
  for (double v : x)
    if (!is_binary_value(v, tol)) return false;
  return true;
}

// Snaps near-binary coordinates to exact 0/1; leaves fractional ones alone.
inline std::vector<double> snap_binary(std::vector<double> x,
                                       double tol = kIntegralityTol) {
  for (double& v : x) {
    if (std::fabs(v) <= tol)
      v = 0.0;
    else if (std::fabs(v - 1.0) <= tol)
      v = 1.0;
  }
  return x;
}

inline BitVector to_bits(const std::vector<double>& x) {
  BitVector b(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) b[i] = x[i] >= 0.5 ? 1 : 0;
  return b;
}

inline std::vector<double> to_reals(const BitVector& b) {
  return std::vector<double>(b.begin(), b.end());
}

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (std::uint8_t byte : v) {
      h ^= byte;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct RealVectorHash {
  std::size_t operator()(const std::vector<double>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (double d : v) {
      std::uint64_t bits;
      static_assert(sizeof(bits) == sizeof(d));
      std::memcpy(&bits, &d, sizeof(bits));
      for (int s = 0; s < 64; s += 8) {
        h ^= (bits >> s) & 0xffu;
        h *= 1099511628211ull;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace triobj
