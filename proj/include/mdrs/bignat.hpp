#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mdrs {

// Arbitrary-precision natural number, just big enough for the
// Gilbert-Varshamov ball counts (q^N at N up to a few hundred).
class BigNat {
public:
  BigNat() = default;
  static BigNat from(std::uint64_t v) {
    BigNat n;
    while (v != 0) {
      n.limbs_.push_back(static_cast<std::uint32_t>(v));
      v >>= 32;
    }
    return n;
  }

  bool is_zero() const { return limbs_.empty(); }

  BigNat& operator+=(const BigNat& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
      limbs_[i] = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  BigNat& mul_small(std::uint32_t f) {
    if (f == 0) {
      limbs_.clear();
      return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
      std::uint64_t s = std::uint64_t(limb) * f + carry;
      limb = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    while (carry) {
      limbs_.push_back(static_cast<std::uint32_t>(carry));
      carry >>= 32;
    }
    return *this;
  }

  friend BigNat operator*(const BigNat& a, const BigNat& b) {
    BigNat r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t s = std::uint64_t(a.limbs_[i]) * b.limbs_[j] +
                          r.limbs_[i + j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
      }
      r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    r.trim();
    return r;
  }

  friend BigNat operator+(BigNat a, const BigNat& b) {
    a += b;
    return a;
  }

  std::strong_ordering operator<=>(const BigNat& o) const {
    if (limbs_.size() != o.limbs_.size())
      return limbs_.size() <=> o.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
    }
    return std::strong_ordering::equal;
  }
  bool operator==(const BigNat& o) const { return limbs_ == o.limbs_; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 10);
        rem = cur % 10;
      }
      digits.push_back(static_cast<char>('0' + rem));
      while (!work.empty() && work.back() == 0) work.pop_back();
    }
    return std::string(digits.rbegin(), digits.rend());
  }

private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;  // little-endian base 2^32
};

}  // namespace mdrs
