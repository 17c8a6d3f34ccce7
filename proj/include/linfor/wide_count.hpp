#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace linfor {

/// Nonnegative 128-bit counter. Arithmetic throws std::overflow_error instead of wrapping.
class WideCount {
 public:
  __extension__ typedef unsigned __int128 raw_type;

  constexpr WideCount() = default;
  constexpr WideCount(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr WideCount from_raw(raw_type v) {
    WideCount w;
    w.value_ = v;
    return w;
  }

  constexpr raw_type raw() const { return value_; }
  constexpr bool fits_u64() const { return value_ <= static_cast<raw_type>(UINT64_MAX); }
  std::uint64_t to_u64() const;
  std::string to_string() const;

  WideCount& operator+=(WideCount other);
  WideCount& operator*=(WideCount other);
  /// Throws std::underflow_error when other > *this.
  WideCount& operator-=(WideCount other);

  friend WideCount operator+(WideCount a, WideCount b) { return a += b; }
  friend WideCount operator*(WideCount a, WideCount b) { return a *= b; }
  friend WideCount operator-(WideCount a, WideCount b) { return a -= b; }

  friend constexpr bool operator==(WideCount a, WideCount b) { return a.value_ == b.value_; }
  friend constexpr std::strong_ordering operator<=>(WideCount a, WideCount b) {
    return a.value_ < b.value_   ? std::strong_ordering::less
           : a.value_ > b.value_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

 private:
  raw_type value_ = 0;
};

std::ostream& operator<<(std::ostream& os, WideCount w);

/// Exact binomial coefficient C(n, r); zero when r > n.
WideCount binomial(std::uint64_t n, std::uint64_t r);

/// C(n, r) with the convention C(n, r) = 0 for r < 0 or n < r, and n < 0 rejected.
WideCount binomial_signed(std::int64_t n, std::int64_t r);

}  // namespace linfor
