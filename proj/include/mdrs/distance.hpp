#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "mdrs/code_params.hpp"
#include "mdrs/encoder.hpp"

namespace mdrs {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1}
                                                           << 24;

struct DistanceReport {
  std::uint32_t q = 0;
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint64_t designed = 0;
  std::uint64_t observed = 0;
  bool exhaustive = false;
  std::uint64_t enumerated = 0;  // codewords examined
  std::optional<std::uint64_t> seed;
  std::string prng;  // set for sampled reports
};

// Minimum Hamming weight over every nonzero combination of the rows of gen;
// also returns the number of codewords examined. Messages are walked as
// base-q counters over the row order, updating the running codeword one
// changed digit at a time. Partitionable across threads; the merged minimum
// is schedule-independent. Throws BudgetExceeded when q^rows > budget.
std::pair<std::uint64_t, std::uint64_t> min_weight_over_span(
    const Field& field, const GeneratorMatrix& gen, std::uint64_t budget,
    unsigned threads = 1);

// Exhaustive scan of all q^K - 1 nonzero messages of the code named by spec.
DistanceReport min_weight_exhaustive(
    const CodeSpec& spec, std::uint64_t budget = kDefaultEnumerationBudget,
    unsigned threads = 1);

// Minimum weight over `trials` random nonzero messages; an upper bound on
// the true distance only. Deterministic per seed.
DistanceReport min_weight_sampled(const CodeSpec& spec, std::uint64_t trials,
                                  std::uint64_t seed);

}  // namespace mdrs
