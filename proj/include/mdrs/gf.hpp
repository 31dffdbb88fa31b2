#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mdrs/errors.hpp"

namespace mdrs {

// One element of GF(q), an integer code in [0, q). For q = p^m with m > 1
// the base-p digits of the code are the polynomial-basis coordinates, low
// degree first; for m = 1 the code is the residue itself.
struct Element {
  std::uint16_t code = 0;
  friend constexpr bool operator==(Element, Element) = default;
};

// GF(p^m), p prime, p^m <= 2^16, in the canonical representation:
//   - modulus = lexicographically smallest monic irreducible of degree m
//     over GF(p), coefficients compared low degree first (m > 1 only);
//   - alpha  = smallest element code that generates the multiplicative group;
//   - element enumeration beta_0 = 0, beta_k = alpha^(k-1).
// Instances are immutable after construction and safe to share across
// threads. Multiplication runs on log/antilog tables built at construction.
class Field {
public:
  Field(std::uint32_t p, std::uint32_t m);

  // Factors q and delegates; throws NotPrime when q is not a prime power.
  static Field from_order(std::uint32_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint16_t>& modulus() const { return modulus_; }
  Element alpha() const { return Element{alpha_}; }

  // Range-checked element construction.
  Element element(std::uint64_t code) const {
    if (code >= q_)
      throw FieldMismatch("element code " + std::to_string(code) +
                          " out of range for GF(" + std::to_string(q_) + ")");
    return Element{static_cast<std::uint16_t>(code)};
  }

  // beta_0 = 0, beta_k = alpha^(k-1); length q, all distinct.
  const std::vector<Element>& elements() const { return betas_; }

  Element add(Element a, Element b) const {
    check(a);
    check(b);
    if (!add_.empty())
      return Element{add_[std::size_t{a.code} * q_ + b.code]};
    return add_slow(a, b);
  }

  Element neg(Element a) const {
    check(a);
    return Element{neg_[a.code]};
  }

  Element sub(Element a, Element b) const { return add(a, neg(b)); }

  Element mul(Element a, Element b) const {
    check(a);
    check(b);
    if (a.code == 0 || b.code == 0) return Element{0};
    return Element{exp_[std::size_t{log_[a.code]} + log_[b.code]]};
  }

  Element inv(Element a) const {
    check(a);
    if (a.code == 0)
      throw DivisionByZero("inverse of zero in GF(" + std::to_string(q_) + ")");
    return Element{exp_[q_ - 1 - log_[a.code]]};
  }

  Element pow(Element a, std::uint64_t e) const {
    check(a);
    if (a.code == 0) return Element{static_cast<std::uint16_t>(e == 0 ? 1 : 0)};
    const std::uint64_t r = e % (q_ - 1);
    return Element{exp_[(std::uint64_t{log_[a.code]} * r) % (q_ - 1)]};
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_;
  }

private:
  void check(Element a) const {
    if (a.code >= q_)
      throw FieldMismatch("element code " + std::to_string(a.code) +
                          " does not belong to GF(" + std::to_string(q_) + ")");
  }

  Element add_slow(Element a, Element b) const;

  std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t raw_pow(std::uint32_t a, std::uint64_t e) const;
  void find_modulus();
  void find_alpha();
  void build_tables();

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint16_t> modulus_;  // length m+1, monic, low degree first
  std::uint16_t alpha_ = 0;
  std::vector<std::uint16_t> exp_;  // size 2(q-1): alpha^i, wrapped
  std::vector<std::uint16_t> log_;  // size q; log_[0] is unused
  std::vector<std::uint16_t> neg_;  // size q
  std::vector<std::uint16_t> add_;  // q*q when q <= 256, else empty
  std::vector<Element> betas_;
};

}  // namespace mdrs
