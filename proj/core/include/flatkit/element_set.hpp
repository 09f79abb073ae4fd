#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace flatkit {

// A subset of ground-set elements, ids 0..63, as a bitmask. Ground sets in
// this library are capped at 64 elements.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSet single(int e) { return ElementSet(std::uint64_t{1} << e); }
  static ElementSet of(std::initializer_list<int> elems) {
    ElementSet s;
    for (int e : elems) s = s.with(e);
    return s;
  }
  static ElementSet of(const std::vector<int>& elems) {
    ElementSet s;
    for (int e : elems) s = s.with(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr ElementSet with(int e) const { return ElementSet(bits_ | (std::uint64_t{1} << e)); }
  constexpr ElementSet without(int e) const {
    return ElementSet(bits_ & ~(std::uint64_t{1} << e));
  }
  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet minus(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool operator==(const ElementSet&) const = default;

  constexpr int lowest() const { return std::countr_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b;) {
      int e = std::countr_zero(b);
      out.push_back(e);
      b &= b - 1;
    }
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the sorted element lists, e.g. {0,1} < {0,1,5} < {0,2}.
inline bool canonical_less(ElementSet a, ElementSet b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x && y) {
    int ex = std::countr_zero(x), ey = std::countr_zero(y);
    if (ex != ey) return ex < ey;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

}  // namespace flatkit
