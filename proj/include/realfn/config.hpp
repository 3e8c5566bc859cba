#pragma once

#include <cstdint>

namespace realfn {

/// Which points enter the ramification divisor.
enum class SigmaReading {
  FullPreimage,        // every point of f^-1(critical values), weight ord_p
  CriticalPointsOnly,  // only points with ord_p > 1
};

/// Numerical configuration shared by every floating-point decision.
/// Exact-mode operations ignore the tolerance.
struct NumericConfig {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  SigmaReading reading = SigmaReading::FullPreimage;

  /// Chordal radius under which two computed roots are the same point.
  double cluster_radius() const { return tol; }
  /// Chordal radius used when matching a divisor against its involution image.
  double match_radius() const { return 100.0 * tol; }
};

}  // namespace realfn
