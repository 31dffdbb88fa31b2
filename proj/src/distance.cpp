#include "mdrs/distance.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "mdrs/prng.hpp"

namespace mdrs {
namespace {

// Weight-tracked state of one contiguous slice of the message counter.
struct Walker {
  const Field& field;
  const GeneratorMatrix& gen;
  std::vector<std::uint16_t> digits;
  std::vector<std::uint16_t> word;
  std::uint64_t weight = 0;

  Walker(const Field& f, const GeneratorMatrix& g, std::uint64_t index)
      : field(f), gen(g), digits(g.rows(), 0), word(g.cols(), 0) {
    const std::uint64_t q = field.q();
    for (std::size_t r = 0; r < digits.size(); ++r) {
      digits[r] = static_cast<std::uint16_t>(index % q);
      index /= q;
    }
    for (std::size_t r = 0; r < digits.size(); ++r) {
      if (digits[r] == 0) continue;
      const Element coeff{digits[r]};
      const auto row = gen.row(r);
      for (std::size_t c = 0; c < word.size(); ++c) {
        if (row[c].code == 0) continue;
        word[c] = field.add(Element{word[c]}, field.mul(coeff, row[c])).code;
      }
    }
    for (std::uint16_t v : word) weight += v != 0;
  }

  // Advances the counter by one, updating word and weight per changed digit.
  void step() {
    const std::uint16_t top = static_cast<std::uint16_t>(field.q() - 1);
    std::size_t r = 0;
    while (true) {
      const std::uint16_t old = digits[r];
      const std::uint16_t now = old == top ? 0 : old + 1;
      digits[r] = now;
      const Element delta = field.sub(Element{now}, Element{old});
      const auto row = gen.row(r);
      for (std::size_t c = 0; c < word.size(); ++c) {
        if (row[c].code == 0) continue;
        const std::uint16_t was = word[c];
        const std::uint16_t next =
            field.add(Element{was}, field.mul(delta, row[c])).code;
        weight += (next != 0);
        weight -= (was != 0);
        word[c] = next;
      }
      if (now != 0) return;
      ++r;
    }
  }
};

std::uint64_t scan_range(const Field& field, const GeneratorMatrix& gen,
                         std::uint64_t first, std::uint64_t last) {
  Walker walker(field, gen, first);
  std::uint64_t best = walker.weight;
  for (std::uint64_t i = first + 1; i < last; ++i) {
    walker.step();
    best = std::min(best, walker.weight);
  }
  return best;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> min_weight_over_span(
    const Field& field, const GeneratorMatrix& gen, std::uint64_t budget,
    unsigned threads) {
  const std::uint64_t q = field.q();
  std::uint64_t total = 1;
  bool over = budget < 1;
  for (std::size_t r = 0; r < gen.rows() && !over; ++r) {
    if (total > budget / q)
      over = true;  // total * q would exceed the budget
    else
      total *= q;
  }
  if (over)
    throw BudgetExceeded("q^K = " + std::to_string(q) + "^" +
                         std::to_string(gen.rows()) +
                         " codewords exceed the enumeration budget of " +
                         std::to_string(budget));

  const std::uint64_t count = total - 1;  // nonzero messages
  if (threads < 1) threads = 1;
  if (threads > count) threads = static_cast<unsigned>(count);

  std::uint64_t best;
  if (threads == 1) {
    best = scan_range(field, gen, 1, total);
  } else {
    std::vector<std::uint64_t> mins(threads, ~std::uint64_t{0});
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = 1 + t * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, t, lo, hi] {
        mins[t] = scan_range(field, gen, lo, hi);
      });
    }
    for (auto& th : pool) th.join();
    best = *std::min_element(mins.begin(), mins.end());
  }
  return {best, count};
}

DistanceReport min_weight_exhaustive(const CodeSpec& spec,
                                     std::uint64_t budget, unsigned threads) {
  const auto region = build_region(spec);
  const auto gen = generator_matrix(region);
  const auto [weight, count] =
      min_weight_over_span(spec.field, gen, budget, threads);
  DistanceReport report;
  report.q = spec.field.q();
  report.n = spec.n;
  report.d = spec.d;
  report.designed = spec.d;
  report.observed = weight;
  report.exhaustive = true;
  report.enumerated = count;
  return report;
}

DistanceReport min_weight_sampled(const CodeSpec& spec, std::uint64_t trials,
                                  std::uint64_t seed) {
  if (trials < 1) throw Error("trials must be >= 1");
  const auto region = build_region(spec);
  const auto gen = generator_matrix(region);
  const Field& field = spec.field;
  const std::uint32_t q = field.q();

  SplitMix64 rng(seed);
  Message message(region.dim());
  std::uint64_t best = ~std::uint64_t{0};
  for (std::uint64_t t = 0; t < trials; ++t) {
    bool nonzero = false;
    do {
      for (auto& c : message) {
        c = Element{static_cast<std::uint16_t>(rng.below(q))};
        nonzero |= c.code != 0;
      }
    } while (!nonzero);
    const auto word = apply_generator(field, gen, message);
    std::uint64_t weight = 0;
    for (Element v : word) weight += v.code != 0;
    best = std::min(best, weight);
  }

  DistanceReport report;
  report.q = q;
  report.n = spec.n;
  report.d = spec.d;
  report.designed = spec.d;
  report.observed = best;
  report.exhaustive = false;
  report.enumerated = trials;
  report.seed = seed;
  report.prng = kPrngName;
  return report;
}

}  // namespace mdrs
