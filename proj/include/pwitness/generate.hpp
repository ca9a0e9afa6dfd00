#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "pwitness/limits.hpp"
#include "pwitness/ratmat.hpp"

namespace pw {

/// Seeded source with a portable integer distribution: std::uniform_int_distribution
/// is implementation-defined, this is not, so the same seed gives the same
/// matrices on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi], by rejection.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

RatMatrix random_integer_matrix(Rng& rng, std::size_t n, std::int64_t bound);
RatVector random_integer_vector(Rng& rng, std::size_t n, std::int64_t bound);

enum class MatrixKind { P, NonP, Random };

struct GenerateOptions {
  std::int64_t entry_bound = 3;
  std::size_t max_tries = 1'000'000;
  Limits limits = {};
};

/// Rejection sampling: draws integer matrices with entries in [-B, B] until one
/// of the requested kind turns up. nullopt after max_tries draws.
std::optional<RatMatrix> generate_matrix(MatrixKind kind, std::size_t n, std::uint64_t seed,
                                         const GenerateOptions& options = {});

}  // namespace pw
