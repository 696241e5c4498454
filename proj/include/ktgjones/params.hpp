#pragma once

#include <string>

#include "ktgjones/errors.hpp"

namespace ktg {

/// Twist counts (half twists) of the four twist regions of C(r,s,t,u).
struct KnotParams {
  long r = 5;
  long s = -3;
  long t = 5;
  long u = -3;

  /// Writhe of the blackboard diagram, Wr = r - s + t - u.
  long writhe() const { return r - s + t - u; }

  /// Exponent of f(n) in the closed formula: -2Wr - 2r - 2s - 2t + 2u.
  long prefactor_exponent() const { return -2 * writhe() - 2 * r - 2 * s - 2 * t + 2 * u; }

  std::string to_string() const {
    return "C(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + "," +
           std::to_string(u) + ")";
  }

  friend bool operator==(const KnotParams&, const KnotParams&) = default;
};

/// Accepted family: r,t >= 3, s <= -3, u <= -3, all odd. `force` skips the check.
inline void validate(const KnotParams& k, bool force = false) {
  if (force) return;
  auto odd = [](long x) { return x % 2 != 0; };
  if (!odd(k.r) || !odd(k.s) || !odd(k.t) || !odd(k.u))
    throw BadParams(k.to_string() + " (all twist counts must be odd)");
  if (k.r < 3 || k.t < 3) throw BadParams(k.to_string() + " (need r,t >= 3)");
  if (k.s > -3) throw BadParams(k.to_string() + " (need s <= -3)");
  if (k.u > -3) throw BadParams(k.to_string() + " (need u <= -3)");
}

}  // namespace ktg
