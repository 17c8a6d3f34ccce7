#include "linfor/wide_count.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace linfor {

namespace {

using raw = WideCount::raw_type;
constexpr raw kMax = ~static_cast<raw>(0);

raw gcd(raw a, raw b) {
  while (b != 0) {
    raw t = a % b;
    a = b;
    b = t;
  }
  return a;
}

raw checked_mul(raw a, raw b) {
  if (a != 0 && b > kMax / a) throw std::overflow_error("WideCount multiplication overflow");
  return a * b;
}

}  // namespace

std::uint64_t WideCount::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("WideCount does not fit in 64 bits");
  return static_cast<std::uint64_t>(value_);
}

std::string WideCount::to_string() const {
  if (value_ == 0) return "0";
  std::string digits;
  raw_type v = value_;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

WideCount& WideCount::operator+=(WideCount other) {
  if (kMax - value_ < other.value_) throw std::overflow_error("WideCount addition overflow");
  value_ += other.value_;
  return *this;
}

WideCount& WideCount::operator*=(WideCount other) {
  value_ = checked_mul(value_, other.value_);
  return *this;
}

WideCount& WideCount::operator-=(WideCount other) {
  if (other.value_ > value_) throw std::underflow_error("WideCount subtraction below zero");
  value_ -= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, WideCount w) { return os << w.to_string(); }

WideCount binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return WideCount{0};
  r = std::min(r, n - r);
  raw acc = 1;
  // acc holds C(n - r + i, i) after step i; dividing out the gcd first keeps
  // every intermediate no larger than the next partial binomial.
  for (std::uint64_t i = 1; i <= r; ++i) {
    raw num = n - r + i;
    raw g = gcd(acc, static_cast<raw>(i));
    raw den = static_cast<raw>(i) / g;
    acc = checked_mul(acc / g, num / den);
  }
  return WideCount::from_raw(acc);
}

WideCount binomial_signed(std::int64_t n, std::int64_t r) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper argument");
  if (r < 0 || r > n) return WideCount{0};
  return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(r));
}

}  // namespace linfor
