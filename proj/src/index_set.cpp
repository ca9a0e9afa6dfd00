#include "pwitness/index_set.hpp"

#include <algorithm>

namespace pw {

std::vector<IndexSet::Mask> combinations(std::size_t n, std::size_t k) {
  std::vector<IndexSet::Mask> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    IndexSet::Mask m = 0;
    for (auto i : idx) m |= IndexSet::bit(i);
    out.push_back(m);
    // Advance to the next combination in lexicographic order.
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<IndexSet::Mask> cube_order(std::size_t n) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<IndexSet::Mask> out(count);
  // Rank r written in n bits, most significant first, is the bit string
  // of the subset; bit (n-1-k) of r is coordinate k.
  for (std::size_t r = 0; r < count; ++r) {
    IndexSet::Mask m = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (r & (std::size_t{1} << (n - 1 - k))) m |= IndexSet::bit(k);
    out[r] = m;
  }
  return out;
}

}  // namespace pw
