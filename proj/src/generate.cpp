#include "pwitness/generate.hpp"

#include <limits>

#include "pwitness/core.hpp"

namespace pw {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do r = engine_();
  while (r >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % span);
}

RatMatrix random_integer_matrix(Rng& rng, std::size_t n, std::int64_t bound) {
  RatMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(static_cast<long>(rng.uniform(-bound, bound)));
  return m;
}

RatVector random_integer_vector(Rng& rng, std::size_t n, std::int64_t bound) {
  RatVector v(n);
  for (auto& x : v) x = Rational(static_cast<long>(rng.uniform(-bound, bound)));
  return v;
}

std::optional<RatMatrix> generate_matrix(MatrixKind kind, std::size_t n, std::uint64_t seed,
                                         const GenerateOptions& options) {
  enforce_cap(n, options.limits.subsets);
  Rng rng(seed);
  for (std::size_t t = 0; t < options.max_tries; ++t) {
    RatMatrix m = random_integer_matrix(rng, n, options.entry_bound);
    if (kind == MatrixKind::Random) return m;
    if (is_p_matrix(m, options.limits).is_p() == (kind == MatrixKind::P)) return m;
  }
  return std::nullopt;
}

}  // namespace pw
