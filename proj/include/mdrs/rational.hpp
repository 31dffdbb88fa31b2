#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mdrs {

// Exact signed rational on 64-bit numerator/denominator. All parameter and
// bound comparisons in this project go through this type so that "exact"
// acceptance checks never touch floating point. Intermediate products use
// 128-bit arithmetic; a result that does not fit 64 bits throws.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }
  static Rational from_int(std::int64_t v) { return Rational(v, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  std::string to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(i128 num, i128 den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) den = 1;
    i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 lo = -i128(0x7FFFFFFFFFFFFFFFll) - 1;
    constexpr i128 hi = i128(0x7FFFFFFFFFFFFFFFll);
    if (num < lo || num > hi || den > hi)
      throw std::overflow_error("rational out of 64-bit range");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) {
    *this = make(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace mdrs
