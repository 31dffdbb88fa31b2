#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdrs/code_params.hpp"
#include "mdrs/encoder.hpp"

namespace mdrs {

// Sorted, distinct coordinate indices in [0, N).
struct ErasurePattern {
  std::vector<std::uint32_t> erased;

  static ErasurePattern of(std::vector<std::uint32_t> indices,
                           std::uint64_t n_coords);
};

// A codeword with some coordinates missing.
struct ReceivedWord {
  std::vector<std::optional<Element>> symbols;
};

ReceivedWord erase(std::span<const Element> word,
                   const ErasurePattern& pattern);

// The unique message whose encoding matches rx on every unerased
// coordinate. Gaussian elimination over GF(q) on the restricted system with
// deterministic first-nonzero pivoting. Throws RankDeficient when more than
// one message fits (possible once |erased| >= d) and Inconsistent when none
// does (errors present, outside this decoder's contract).
Message decode_erasures(const CodeSpec& spec, const ReceivedWord& rx,
                        const GeneratorMatrix& gen);

struct ChannelStats {
  double epsilon = 0;
  std::uint64_t trials = 0;
  std::uint64_t recovered = 0;
  std::uint64_t rank_deficient = 0;
  std::uint64_t seed = 0;
  std::string prng;
};

// Per trial: encode a random message, erase each coordinate independently
// with probability epsilon, decode. Trial t draws from its own stream
// derived from (seed, t), so the counts do not depend on the thread count.
ChannelStats simulate_erasure_channel(const CodeSpec& spec, double epsilon,
                                      std::uint64_t trials, std::uint64_t seed,
                                      unsigned threads = 1);

}  // namespace mdrs
