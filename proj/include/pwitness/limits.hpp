#pragma once

#include <cstddef>

namespace pw {

/// Dimension caps for the exponential enumerations.
struct Limits {
  std::size_t subsets = 16;  ///< 2^n scans: P-matrix test, orientation tables, LCP bases
  std::size_t faces = 10;    ///< 3^n face enumeration in is_uso
  std::size_t pairs = 8;     ///< 4^n pairwise outmap check in check_uso

  /// Same cap for every enumeration (the CLI's --max-n).
  static Limits uniform(std::size_t n) { return Limits{n, n, n}; }
};

/// Throws TooLargeError when n > cap.
void enforce_cap(std::size_t n, std::size_t cap);

}  // namespace pw
