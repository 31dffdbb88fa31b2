#include "mdrs/code_params.hpp"

#include <string>

namespace mdrs {
namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return (a + b - 1) / b;
}

void validate(const CodeSpec& spec, std::uint64_t n_points) {
  if (spec.n < 1) throw Error("n must be >= 1");
  if (spec.d < 1 || spec.d > n_points)
    throw EmptyRegion("d=" + std::to_string(spec.d) +
                      " admits no coefficients for N=q^n=" +
                      std::to_string(n_points));
}

// Walks every tail (i_2..i_n) in ascending lexicographic order on
// (i_n, ..., i_2) and hands (tail, bound) to the sink for tails whose
// i_1 bound is nonnegative.
template <typename Sink>
void for_each_tail(const CodeSpec& spec, Sink&& sink) {
  const std::uint64_t q = spec.field.q();
  std::vector<std::uint32_t> tail(spec.n - 1, 0);  // tail[j] = i_{j+2}
  while (true) {
    std::uint64_t prod = 1;
    for (std::uint32_t v : tail) prod *= q - v;
    const std::uint64_t need = ceil_div(spec.d, prod);
    if (need <= q) sink(tail, static_cast<std::uint32_t>(q - need));
    std::size_t j = 0;
    while (j < tail.size() && ++tail[j] == q) tail[j++] = 0;
    if (j == tail.size()) break;
  }
}

}  // namespace

std::uint64_t CodeSpec::length() const {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    out *= field.q();
    if (out > kMaxBlockLength)
      throw CodeTooLarge("q^n exceeds the block length limit of " +
                         std::to_string(kMaxBlockLength));
  }
  return out;
}

DegreeRegion build_region(const CodeSpec& spec) {
  const std::uint64_t n_points = spec.length();
  validate(spec, n_points);
  DegreeRegion region{spec, {}, {}};
  for_each_tail(spec, [&](const std::vector<std::uint32_t>& tail,
                          std::uint32_t bound) {
    region.groups.push_back(
        {region.members.size() / spec.n, bound + 1});
    for (std::uint32_t i1 = 0; i1 <= bound; ++i1) {
      region.members.push_back(static_cast<std::uint16_t>(i1));
      for (std::uint32_t v : tail)
        region.members.push_back(static_cast<std::uint16_t>(v));
    }
  });
  return region;
}

std::uint64_t info_count(const CodeSpec& spec) {
  validate(spec, spec.length());
  std::uint64_t k = 0;
  for_each_tail(spec, [&](const std::vector<std::uint32_t>&,
                          std::uint32_t bound) { k += bound + 1; });
  return k;
}

std::uint64_t check_count(const CodeSpec& spec) {
  return spec.length() - info_count(spec);
}

namespace {

// Terms with running product >= d contribute 0, so only divisor-bounded
// branches are walked.
std::uint64_t small_d_sum(std::uint64_t d, std::uint32_t levels,
                          std::uint64_t prod) {
  if (levels == 0) return ceil_div(d, prod) - 1;
  std::uint64_t total = 0;
  for (std::uint64_t i = 1; i * prod < d; ++i)
    total += small_d_sum(d, levels - 1, prod * i);
  return total;
}

}  // namespace

std::uint64_t check_count_small_d(std::uint64_t d, std::uint32_t n) {
  if (d < 1) throw Error("d must be >= 1");
  if (n < 1) throw Error("n must be >= 1");
  if (n == 1) return d - 1;
  return small_d_sum(d, n - 1, 1);
}

Rational rate_lower_bound(const CodeSpec& spec) {
  if (spec.n != 2)
    throw UnsupportedDimension("the rate bound is derived for n=2 only");
  const std::int64_t q = spec.field.q();
  const std::int64_t n_points = q * q;
  if (spec.d < 1 || static_cast<std::int64_t>(spec.d) > n_points)
    throw EmptyRegion("d out of range for the rate bound");
  const std::int64_t d = spec.d;
  const std::int64_t limit = q - static_cast<std::int64_t>(ceil_div(d, q));
  Rational harmonic{0, 1};
  for (std::int64_t m = 0; m <= limit; ++m)
    harmonic = harmonic + Rational{1, q - m};
  const Rational ratio{d, n_points};
  return Rational{1, 1} - ratio - ratio * harmonic;
}

}  // namespace mdrs
