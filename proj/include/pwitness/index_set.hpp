#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pw {

/// Largest ambient dimension an IndexSet can represent.
inline constexpr std::size_t kMaxDimension = 64;

/// A subset of {0, ..., n-1}, stored as its characteristic bit vector.
///
/// Indices are 0-based in code; text formats and to_string() print them
/// 1-based. Binary operations require both operands to share the same n.
class IndexSet {
 public:
  using Mask = std::uint64_t;

  IndexSet() = default;
  explicit IndexSet(std::size_t n, Mask bits = 0) : n_(n), bits_(bits & full_mask(n)) {
    assert(n <= kMaxDimension);
  }

  static IndexSet empty(std::size_t n) { return IndexSet(n); }
  static IndexSet full(std::size_t n) { return IndexSet(n, full_mask(n)); }
  static IndexSet of(std::size_t n, const std::vector<std::size_t>& members) {
    IndexSet s(n);
    for (auto i : members) s.bits_ |= bit(i);
    return s;
  }

  std::size_t dimension() const noexcept { return n_; }
  Mask bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool is_empty() const noexcept { return bits_ == 0; }
  bool contains(std::size_t i) const noexcept { return i < n_ && (bits_ & bit(i)) != 0; }

  /// alpha + i
  IndexSet with(std::size_t i) const { return IndexSet(n_, bits_ | bit(i)); }
  /// alpha - i
  IndexSet without(std::size_t i) const { return IndexSet(n_, bits_ & ~bit(i)); }
  /// alpha (+) {i}
  IndexSet flipped(std::size_t i) const { return IndexSet(n_, bits_ ^ bit(i)); }

  IndexSet complement() const { return IndexSet(n_, ~bits_); }
  bool is_subset_of(const IndexSet& o) const noexcept { return (bits_ & ~o.bits_) == 0; }

  friend IndexSet operator^(const IndexSet& a, const IndexSet& b) {
    assert(a.n_ == b.n_);
    return IndexSet(a.n_, a.bits_ ^ b.bits_);
  }
  friend IndexSet operator&(const IndexSet& a, const IndexSet& b) {
    assert(a.n_ == b.n_);
    return IndexSet(a.n_, a.bits_ & b.bits_);
  }
  friend IndexSet operator|(const IndexSet& a, const IndexSet& b) {
    assert(a.n_ == b.n_);
    return IndexSet(a.n_, a.bits_ | b.bits_);
  }
  /// Set difference a \ b.
  friend IndexSet operator-(const IndexSet& a, const IndexSet& b) {
    assert(a.n_ == b.n_);
    return IndexSet(a.n_, a.bits_ & ~b.bits_);
  }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

  /// Members in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  /// Smallest member; undefined on the empty set.
  std::size_t front() const noexcept { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  /// "{1,3}" style, 1-based.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto i : members()) {
      if (!first) s += ',';
      s += std::to_string(i + 1);
      first = false;
    }
    return s + "}";
  }

  /// Characteristic vector, coordinate 1 first, e.g. "101".
  std::string to_bits() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (contains(i)) s[i] = '1';
    return s;
  }

  static constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }
  static constexpr Mask full_mask(std::size_t n) noexcept {
    return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  }

 private:
  std::size_t n_ = 0;
  Mask bits_ = 0;
};

/// Compares subsets by size, then by their sorted member lists.
inline bool size_lex_less(const IndexSet& a, const IndexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

/// All k-subsets of {0..n-1} in lexicographic order of their member lists.
std::vector<IndexSet::Mask> combinations(std::size_t n, std::size_t k);

/// All 2^n subsets ordered lexicographically by characteristic bit string
/// (coordinate 1 most significant). This is the order of orientation table
/// dumps and of every "first subset" search over the whole cube.
std::vector<IndexSet::Mask> cube_order(std::size_t n);

}  // namespace pw
