#include <doctest.h>

#include <tuple>

#include "mdrs/erasure.hpp"
#include "mdrs/prng.hpp"

using mdrs::CodeSpec;
using mdrs::Element;
using mdrs::ErasurePattern;
using mdrs::Field;
using mdrs::Message;

namespace {

Message random_message(mdrs::SplitMix64& rng, std::size_t len, std::uint32_t q) {
  Message msg(len);
  for (auto& c : msg) c = Element{static_cast<std::uint16_t>(rng.below(q))};
  return msg;
}

}  // namespace

TEST_CASE("erasure pattern validation") {
  CHECK_THROWS_AS(ErasurePattern::of({0, 9}, 9), mdrs::Error);
  CHECK_THROWS_AS(ErasurePattern::of({3, 3}, 9), mdrs::Error);
  CHECK(ErasurePattern::of({5, 1, 3}, 9).erased ==
        std::vector<std::uint32_t>{1, 3, 5});
}

TEST_CASE("exact recovery") {
  const CodeSpec spec{Field(3, 1), 2, 3};
  const auto region = mdrs::build_region(spec);
  const auto gen = mdrs::generator_matrix(region);

  SUBCASE("no erasures, every basis message") {
    for (std::size_t r = 0; r < region.dim(); ++r) {
      Message msg(region.dim(), Element{0});
      msg[r] = Element{1};
      const auto word = mdrs::encode(region, msg);
      const auto rx = mdrs::erase(word, ErasurePattern{{}});
      CHECK(mdrs::decode_erasures(spec, rx, gen) == msg);
    }
  }
  SUBCASE("every pattern of at most d-1 erasures") {
    mdrs::SplitMix64 rng(99);
    const auto msg = random_message(rng, region.dim(), 3);
    const auto word = mdrs::encode(region, msg);
    std::uint64_t patterns = 0;
    for (std::uint32_t a = 0; a < 9; ++a) {
      for (std::uint32_t b = a + 1; b < 9; ++b) {
        const auto rx = mdrs::erase(word, ErasurePattern::of({a, b}, 9));
        CHECK(mdrs::decode_erasures(spec, rx, gen) == msg);
        ++patterns;
      }
      const auto rx1 = mdrs::erase(word, ErasurePattern::of({a}, 9));
      CHECK(mdrs::decode_erasures(spec, rx1, gen) == msg);
    }
    CHECK(patterns == 36);
  }
  SUBCASE("d-1 guarantee on several desk-scale codes") {
    for (auto [p, m, n, d] : {std::tuple{2u, 1u, 2u, 2u}, {2u, 2u, 1u, 2u},
                              {2u, 1u, 3u, 4u}, {5u, 1u, 1u, 3u}}) {
      const CodeSpec sp{Field(p, m), n, d};
      const auto rg = mdrs::build_region(sp);
      const auto g = mdrs::generator_matrix(rg);
      const std::uint64_t n_len = sp.length();
      mdrs::SplitMix64 rng(p + n + d);
      const auto message = random_message(rng, rg.dim(), sp.field.q());
      const auto word = mdrs::encode(rg, message);
      // walk all coordinate subsets of size <= d-1
      for (std::uint64_t mask = 0; mask < (1ull << n_len); ++mask) {
        if (static_cast<std::uint32_t>(__builtin_popcountll(mask)) >= d) continue;
        std::vector<std::uint32_t> idx;
        for (std::uint32_t i = 0; i < n_len; ++i)
          if (mask & (1ull << i)) idx.push_back(i);
        const auto rx = mdrs::erase(word, ErasurePattern::of(idx, n_len));
        CHECK(mdrs::decode_erasures(sp, rx, g) == message);
      }
    }
  }
}

TEST_CASE("failure modes") {
  const CodeSpec spec{Field(3, 1), 2, 3};
  const auto region = mdrs::build_region(spec);
  const auto gen = mdrs::generator_matrix(region);
  mdrs::SplitMix64 rng(5);
  const auto msg = random_message(rng, region.dim(), 3);
  const auto word = mdrs::encode(region, msg);

  SUBCASE("six erasures leave three equations for six unknowns") {
    const auto rx = mdrs::erase(word, ErasurePattern::of({0, 1, 2, 3, 4, 5}, 9));
    CHECK_THROWS_AS(mdrs::decode_erasures(spec, rx, gen), mdrs::RankDeficient);
  }
  SUBCASE("a corrupted symbol is inconsistent, not mis-decoded") {
    auto damaged = word;
    damaged[4] = spec.field.add(damaged[4], Element{1});
    const auto rx = mdrs::erase(damaged, ErasurePattern{{}});
    CHECK_THROWS_AS(mdrs::decode_erasures(spec, rx, gen), mdrs::Inconsistent);
  }
  SUBCASE("wrong received length") {
    mdrs::ReceivedWord rx;
    rx.symbols.assign(8, Element{0});
    CHECK_THROWS_AS(mdrs::decode_erasures(spec, rx, gen),
                    mdrs::LengthMismatch);
  }
}

TEST_CASE("erasure channel simulation") {
  const CodeSpec spec{Field(3, 1), 2, 3};
  SUBCASE("epsilon 0 never fails") {
    const auto stats = mdrs::simulate_erasure_channel(spec, 0.0, 200, 1);
    CHECK(stats.recovered == 200);
    CHECK(stats.rank_deficient == 0);
  }
  SUBCASE("epsilon 1 always fails") {
    const auto stats = mdrs::simulate_erasure_channel(spec, 1.0, 50, 1);
    CHECK(stats.recovered == 0);
    CHECK(stats.rank_deficient == 50);
  }
  SUBCASE("deterministic per seed, independent of thread count") {
    const auto a = mdrs::simulate_erasure_channel(spec, 0.1, 2000, 42, 1);
    const auto b = mdrs::simulate_erasure_channel(spec, 0.1, 2000, 42, 1);
    const auto c = mdrs::simulate_erasure_channel(spec, 0.1, 2000, 42, 3);
    CHECK(a.recovered == b.recovered);
    CHECK(a.recovered == c.recovered);
    CHECK(a.rank_deficient == c.rank_deficient);
    CHECK(a.recovered + a.rank_deficient == 2000);
    CHECK(a.rank_deficient > 0);
    CHECK(a.recovered > 0);
    CHECK(a.prng == "splitmix64");
    CHECK(a.seed == 42);
  }
  SUBCASE("epsilon range is validated") {
    CHECK_THROWS_AS(mdrs::simulate_erasure_channel(spec, -0.1, 10, 0),
                    mdrs::Error);
    CHECK_THROWS_AS(mdrs::simulate_erasure_channel(spec, 1.5, 10, 0),
                    mdrs::Error);
  }
}
