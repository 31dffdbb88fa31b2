#include "mdrs/erasure.hpp"

#include <algorithm>
#include <thread>

#include "mdrs/prng.hpp"

namespace mdrs {

ErasurePattern ErasurePattern::of(std::vector<std::uint32_t> indices,
                                  std::uint64_t n_coords) {
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= n_coords)
      throw Error("erasure index " + std::to_string(indices[i]) +
                  " out of range for N=" + std::to_string(n_coords));
    if (i > 0 && indices[i] == indices[i - 1])
      throw Error("duplicate erasure index " + std::to_string(indices[i]));
  }
  return ErasurePattern{std::move(indices)};
}

ReceivedWord erase(std::span<const Element> word,
                   const ErasurePattern& pattern) {
  ReceivedWord rx;
  rx.symbols.assign(word.begin(), word.end());
  for (std::uint32_t i : pattern.erased) rx.symbols[i].reset();
  return rx;
}

Message decode_erasures(const CodeSpec& spec, const ReceivedWord& rx,
                        const GeneratorMatrix& gen) {
  const Field& field = spec.field;
  const std::size_t k_dim = gen.rows();
  if (rx.symbols.size() != gen.cols())
    throw LengthMismatch("received word has " +
                         std::to_string(rx.symbols.size()) +
                         " symbols, expected " + std::to_string(gen.cols()));

  // One equation per unerased coordinate: sum_r m_r G[r][c] = y_c.
  std::vector<std::size_t> eq_col;
  for (std::size_t c = 0; c < rx.symbols.size(); ++c)
    if (rx.symbols[c].has_value()) eq_col.push_back(c);

  const std::size_t n_eq = eq_col.size();
  const std::size_t width = k_dim + 1;  // augmented
  std::vector<Element> a(n_eq * width);
  for (std::size_t e = 0; e < n_eq; ++e) {
    for (std::size_t r = 0; r < k_dim; ++r) a[e * width + r] = gen.at(r, eq_col[e]);
    a[e * width + k_dim] = *rx.symbols[eq_col[e]];
  }

  // Forward elimination, pivot = first row with a nonzero entry.
  std::vector<std::size_t> pivot_of_col(k_dim, SIZE_MAX);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k_dim && rank < n_eq; ++col) {
    std::size_t pivot = SIZE_MAX;
    for (std::size_t e = rank; e < n_eq; ++e) {
      if (a[e * width + col].code != 0) {
        pivot = e;
        break;
      }
    }
    if (pivot == SIZE_MAX) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < width; ++j)
        std::swap(a[pivot * width + j], a[rank * width + j]);
    }
    const Element scale = field.inv(a[rank * width + col]);
    for (std::size_t j = col; j < width; ++j)
      a[rank * width + j] = field.mul(a[rank * width + j], scale);
    for (std::size_t e = rank + 1; e < n_eq; ++e) {
      const Element factor = a[e * width + col];
      if (factor.code == 0) continue;
      for (std::size_t j = col; j < width; ++j) {
        a[e * width + j] = field.sub(a[e * width + j],
                                     field.mul(factor, a[rank * width + j]));
      }
    }
    pivot_of_col[col] = rank;
    ++rank;
  }

  // Rows below the rank are zero on every coefficient column; a nonzero
  // right-hand side there means no message fits at all.
  for (std::size_t e = rank; e < n_eq; ++e) {
    if (a[e * width + k_dim].code != 0)
      throw Inconsistent(
          "unerased symbols are not the restriction of any codeword");
  }
  if (rank < k_dim) {
    std::string positions;
    for (std::size_t c = 0; c < rx.symbols.size(); ++c) {
      if (rx.symbols[c].has_value()) continue;
      if (!positions.empty()) positions += ',';
      positions += std::to_string(c);
    }
    throw RankDeficient("solution not unique: rank " + std::to_string(rank) +
                        " < K=" + std::to_string(k_dim) + " with " +
                        std::to_string(rx.symbols.size() - n_eq) +
                        " erasures at [" + positions + "]");
  }

  Message message(k_dim, Element{0});
  for (std::size_t col = k_dim; col-- > 0;) {
    const std::size_t row = pivot_of_col[col];
    Element v = a[row * width + k_dim];
    for (std::size_t j = col + 1; j < k_dim; ++j)
      v = field.sub(v, field.mul(a[row * width + j], message[j]));
    message[col] = v;
  }
  return message;
}

namespace {

struct TrialCounts {
  std::uint64_t recovered = 0;
  std::uint64_t rank_deficient = 0;
};

TrialCounts run_trials(const CodeSpec& spec, const GeneratorMatrix& gen,
                       double epsilon, std::uint64_t seed, std::uint64_t first,
                       std::uint64_t last) {
  const Field& field = spec.field;
  const std::uint32_t q = field.q();
  TrialCounts counts;
  Message message(gen.rows());
  for (std::uint64_t t = first; t < last; ++t) {
    SplitMix64 rng(derive_stream_seed(seed, t));
    for (auto& c : message)
      c = Element{static_cast<std::uint16_t>(rng.below(q))};
    const auto word = apply_generator(field, gen, message);
    ReceivedWord rx;
    rx.symbols.assign(word.begin(), word.end());
    for (auto& s : rx.symbols)
      if (rng.uniform01() < epsilon) s.reset();
    try {
      const auto decoded = decode_erasures(spec, rx, gen);
      if (decoded != message)
        throw Error("decoder returned a different message on a clean channel");
      ++counts.recovered;
    } catch (const RankDeficient&) {
      ++counts.rank_deficient;
    }
  }
  return counts;
}

}  // namespace

ChannelStats simulate_erasure_channel(const CodeSpec& spec, double epsilon,
                                      std::uint64_t trials, std::uint64_t seed,
                                      unsigned threads) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw Error("epsilon must lie in [0, 1]");
  const auto region = build_region(spec);
  const auto gen = generator_matrix(region);

  if (threads < 1) threads = 1;
  if (threads > trials) threads = static_cast<unsigned>(trials ? trials : 1);

  TrialCounts totals;
  if (threads == 1) {
    totals = run_trials(spec, gen, epsilon, seed, 0, trials);
  } else {
    std::vector<TrialCounts> parts(threads);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = t * chunk;
      const std::uint64_t hi = std::min(trials, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, t, lo, hi] {
        parts[t] = run_trials(spec, gen, epsilon, seed, lo, hi);
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts) {
      totals.recovered += part.recovered;
      totals.rank_deficient += part.rank_deficient;
    }
  }

  ChannelStats stats;
  stats.epsilon = epsilon;
  stats.trials = trials;
  stats.recovered = totals.recovered;
  stats.rank_deficient = totals.rank_deficient;
  stats.seed = seed;
  stats.prng = kPrngName;
  return stats;
}

}  // namespace mdrs
