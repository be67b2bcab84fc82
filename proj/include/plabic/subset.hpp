#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "plabic/error.hpp"

namespace plabic {

/// Largest ground set supported by the bitmask representation.
inline constexpr int kMaxGroundSet = 31;

/// A subset of the ground set [n] = {1..n}, stored as a bitmask
/// (bit i-1 set iff i is a member). Elements are 1-based in the API.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
  Subset(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }

  static Subset from_elements(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s.insert(e);
    return s;
  }

  /// The interval {first, ..., first+size-1} taken cyclically in [n].
  static Subset cyclic_interval(int first, int size, int n) {
    Subset s;
    for (int t = 0; t < size; ++t) s.insert((first - 1 + t) % n + 1);
    return s;
  }

  static Subset full(int n) {
    return Subset(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(int e) const { return e >= 1 && e <= 32 && ((bits_ >> (e - 1)) & 1u); }
  void insert(int e) {
    require(e >= 1 && e <= kMaxGroundSet, ErrorCode::InvalidInput,
            "subset element out of range: " + std::to_string(e));
    bits_ |= 1u << (e - 1);
  }
  void erase(int e) {
    if (e >= 1 && e <= 32) bits_ &= ~(1u << (e - 1));
  }
  Subset with(int e) const {
    Subset s = *this;
    s.insert(e);
    return s;
  }
  Subset without(int e) const {
    Subset s = *this;
    s.erase(e);
    return s;
  }

  /// Sorted 1-based elements.
  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// Largest element, or 0 for the empty set.
  int max_element() const { return bits_ ? 32 - std::countl_zero(bits_) : 0; }

  friend Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) = default;

  bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  /// Compact label: "13" for {1,3} when every element is a single digit,
  /// otherwise comma separated ("1,10").
  std::string label() const {
    const auto el = elements();
    const bool compact = std::all_of(el.begin(), el.end(), [](int e) { return e < 10; });
    std::string out;
    for (std::size_t i = 0; i < el.size(); ++i) {
      if (!compact && i) out += ',';
      out += std::to_string(el[i]);
    }
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Subset s) {
  os << '{';
  const auto el = s.elements();
  for (std::size_t i = 0; i < el.size(); ++i) os << (i ? "," : "") << el[i];
  return os << '}';
}

/// Parses the output of Subset::label().
inline Subset parse_subset_label(const std::string& text) {
  Subset s;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto next = text.find(',', pos);
      if (next == std::string::npos) next = text.size();
      const auto token = text.substr(pos, next - pos);
      require(!token.empty(), ErrorCode::ParseError, "bad subset label '" + text + "'");
      s.insert(std::stoi(token));
      pos = next + 1;
    }
    return s;
  }
  for (char c : text) {
    require(c >= '1' && c <= '9', ErrorCode::ParseError, "bad subset label '" + text + "'");
    s.insert(c - '0');
  }
  return s;
}

/// All k-subsets of [n] in increasing bitmask order.
inline std::vector<Subset> k_subsets(int k, int n) {
  require(n >= 0 && n <= kMaxGroundSet, ErrorCode::BoundExceeded, "ground set too large");
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) return {Subset{}};
  // Gosper's hack.
  std::uint64_t v = (1ull << k) - 1;
  const std::uint64_t limit = 1ull << n;
  while (v < limit) {
    out.emplace_back(static_cast<std::uint32_t>(v));
    const std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
  return out;
}

/// Position of element x in the cyclic order i < i+1 < ... < i-1 of [n]
/// (0 for x == i). Both arguments are 1-based.
inline int cyclic_rank(int x, int start, int n) { return ((x - start) % n + n) % n; }

/// Reduces an arbitrary integer to its representative in 1..n.
inline int mod1(int x, int n) { return ((x - 1) % n + n) % n + 1; }

}  // namespace plabic
