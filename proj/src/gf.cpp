#include "mdrs/gf.hpp"

#include <algorithm>
#include <cstddef>

namespace mdrs {
namespace {

bool is_prime_u32(std::uint32_t x) {
  if (x < 2) return false;
  for (std::uint32_t f = 2; std::uint64_t{f} * f <= x; ++f) {
    if (x % f == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> distinct_prime_factors(std::uint32_t x) {
  std::vector<std::uint32_t> fs;
  for (std::uint32_t f = 2; std::uint64_t{f} * f <= x; ++f) {
    if (x % f == 0) {
      fs.push_back(f);
      while (x % f == 0) x /= f;
    }
  }
  if (x > 1) fs.push_back(x);
  return fs;
}

// Dense polynomial over GF(p), low degree first.
using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a mod g, g monic.
Poly poly_mod(Poly a, const Poly& g, std::uint32_t p) {
  poly_trim(a);
  while (a.size() >= g.size()) {
    const std::uint64_t c = a.back();
    if (c != 0) {
      const std::size_t shift = a.size() - g.size();
      for (std::size_t j = 0; j < g.size(); ++j) {
        a[shift + j] =
            static_cast<std::uint32_t>((a[shift + j] + c * (p - g[j])) % p);
      }
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

// Trial division against every monic polynomial of degree <= deg(f)/2.
bool poly_is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  for (std::size_t k = 1; 2 * k <= m; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly g(k + 1, 0);
      g[k] = 1;
      std::uint64_t rest = v;
      for (std::size_t j = 0; j < k; ++j) {
        g[j] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t m) : p_(p), m_(m) {
  if (!is_prime_u32(p))
    throw NotPrime("p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw Error("extension degree m must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > 65536)
      throw FieldTooLarge("p^m exceeds 2^16 (p=" + std::to_string(p) +
                          ", m=" + std::to_string(m) + ")");
  }
  q_ = static_cast<std::uint32_t>(q);
  find_modulus();
  find_alpha();
  build_tables();
}

Field Field::from_order(std::uint32_t q) {
  if (q < 2) throw NotPrime("q must be at least 2");
  std::uint32_t p = 0;
  for (std::uint32_t f = 2; std::uint64_t{f} * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  if (p == 0) return Field(q, 1);
  std::uint32_t m = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1)
    throw NotPrime("q = " + std::to_string(q) + " is not a prime power");
  return Field(p, m);
}

void Field::find_modulus() {
  modulus_.assign(m_ + 1, 0);
  modulus_[m_] = 1;
  if (m_ == 1) return;  // stored as x; never consulted
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m_; ++i) count *= p_;
  for (std::uint64_t v = 0; v < count; ++v) {
    // v spells the coefficients with c_0 most significant, so increasing v
    // walks candidates in ascending (c_0, c_1, ...) lexicographic order.
    Poly f(m_ + 1, 0);
    f[m_] = 1;
    std::uint64_t rest = v;
    for (std::size_t j = m_; j-- > 0;) {
      f[j] = static_cast<std::uint32_t>(rest % p_);
      rest /= p_;
    }
    if (f[0] == 0) continue;  // x divides
    if (poly_is_irreducible(f, p_)) {
      for (std::size_t j = 0; j <= m_; ++j)
        modulus_[j] = static_cast<std::uint16_t>(f[j]);
      return;
    }
  }
  throw Error("no irreducible modulus found");  // unreachable for valid p, m
}

std::uint32_t Field::raw_mul(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  std::uint32_t da[17], db[17];
  std::uint64_t prod[33] = {0};
  for (std::uint32_t i = 0; i < m_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] += std::uint64_t{da[i]} * db[j];
  }
  for (std::uint32_t i = 0; i < 2 * m_ - 1; ++i) prod[i] %= p_;
  // reduce by the monic modulus
  for (std::uint32_t i = 2 * m_ - 2; i >= m_; --i) {
    const std::uint64_t c = prod[i];
    if (c != 0) {
      for (std::uint32_t j = 0; j <= m_; ++j) {
        prod[i - m_ + j] =
            (prod[i - m_ + j] + c * (p_ - modulus_[j])) % p_;
      }
    }
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = m_; i-- > 0;)
    out = out * p_ + static_cast<std::uint32_t>(prod[i] % p_);
  return out;
}

std::uint32_t Field::raw_pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e != 0) {
    if (e & 1) r = raw_mul(r, a);
    a = raw_mul(a, a);
    e >>= 1;
  }
  return r;
}

void Field::find_alpha() {
  if (q_ == 2) {
    alpha_ = 1;
    return;
  }
  const auto factors = distinct_prime_factors(q_ - 1);
  for (std::uint32_t a = 2; a < q_; ++a) {
    bool primitive = true;
    for (std::uint32_t f : factors) {
      if (raw_pow(a, (q_ - 1) / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      alpha_ = static_cast<std::uint16_t>(a);
      return;
    }
  }
  throw Error("no primitive element found");  // unreachable
}

void Field::build_tables() {
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = static_cast<std::uint16_t>(x);
    log_[x] = static_cast<std::uint16_t>(i);
    x = raw_mul(x, alpha_);
  }
  if (x != 1) throw Error("alpha does not close its cycle");  // unreachable
  for (std::uint32_t i = 0; i < q_ - 1; ++i) exp_[q_ - 1 + i] = exp_[i];

  neg_.assign(q_, 0);
  for (std::uint32_t c = 0; c < q_; ++c) {
    std::uint32_t rest = c, out = 0, scale = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      const std::uint32_t digit = rest % p_;
      rest /= p_;
      out += ((p_ - digit) % p_) * scale;
      scale *= p_;
    }
    neg_[c] = static_cast<std::uint16_t>(out);
  }

  if (q_ <= 256) {
    add_.assign(std::size_t{q_} * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t ra = a, rb = b, out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
          out += ((ra % p_ + rb % p_) % p_) * scale;
          ra /= p_;
          rb /= p_;
          scale *= p_;
        }
        add_[std::size_t{a} * q_ + b] = static_cast<std::uint16_t>(out);
      }
    }
  }

  betas_.resize(q_);
  betas_[0] = Element{0};
  for (std::uint32_t k = 1; k < q_; ++k) betas_[k] = Element{exp_[k - 1]};
}

Element Field::add_slow(Element a, Element b) const {
  std::uint32_t ra = a.code, rb = b.code, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((ra % p_ + rb % p_) % p_) * scale;
    ra /= p_;
    rb /= p_;
    scale *= p_;
  }
  return Element{static_cast<std::uint16_t>(out)};
}

}  // namespace mdrs
