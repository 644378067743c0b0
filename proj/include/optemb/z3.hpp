#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace optemb {

inline int mod3(long long v) { return static_cast<int>(((v % 3) + 3) % 3); }

/// Subset of Z/3, as a bitmask over {0, 1, 2}.
class Z3Set {
 public:
  constexpr Z3Set() = default;
  static Z3Set of(std::initializer_list<int> elems) {
    Z3Set s;
    for (int e : elems) s.insert(e);
    return s;
  }
  static Z3Set all() { return of({0, 1, 2}); }

  void insert(int e) { mask_ |= static_cast<std::uint8_t>(1u << mod3(e)); }
  bool contains(int e) const { return (mask_ >> mod3(e)) & 1u; }
  int size() const { return (mask_ & 1) + ((mask_ >> 1) & 1) + ((mask_ >> 2) & 1); }
  bool is_all() const { return mask_ == 7; }
  std::vector<int> elements() const {
    std::vector<int> out;
    for (int e = 0; e < 3; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }
  /// v + S.
  Z3Set shifted(int v) const {
    Z3Set s;
    for (int e : elements()) s.insert(e + v);
    return s;
  }
  /// "{0,2}"; elements ascending.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }
  friend bool operator==(const Z3Set&, const Z3Set&) = default;

 private:
  std::uint8_t mask_ = 0;
};

/// A translate v + S of a norm-class set, kept as base set plus shift so
/// successive translations compose by adding shifts.
struct NormCoset {
  Z3Set base;
  int shift = 0;

  Z3Set elements() const { return base.shifted(shift); }
  NormCoset translate(int v) const { return {base, mod3(shift + v)}; }
};

}  // namespace optemb
