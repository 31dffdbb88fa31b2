#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>

#include "mdrs/analysis.hpp"
#include "mdrs/distance.hpp"
#include "oracles.hpp"

using mdrs::CodeSpec;
using mdrs::Element;
using mdrs::Field;
using mdrs::Rational;

TEST_CASE("product code parameters") {
  const auto p83 = mdrs::product_code_checks(8, 3);
  CHECK(p83.n_total == 64);
  CHECK(p83.k_total == 36);
  CHECK(p83.checks == 28);
  CHECK(p83.checks == (3 - 1) * (2 * 8 - 3 + 1));
  CHECK(p83.d_min == 9);

  CHECK(mdrs::product_code_checks(8, 1).checks == 0);
  CHECK(mdrs::product_code_checks(16, 4).checks == 3 * 29);

  CHECK_THROWS_AS(mdrs::product_code_checks(8, 9), mdrs::InvalidComponent);
  CHECK_THROWS_AS(mdrs::product_code_checks(8, 0), mdrs::InvalidComponent);

  for (std::uint32_t q : {8u, 16u}) {
    for (std::uint32_t dc = 1; dc <= q; ++dc) {
      const auto prod = mdrs::product_code_checks(q, dc);
      CHECK(prod.checks ==
            std::uint64_t{dc - 1} * (2 * std::uint64_t{q} - dc + 1));
    }
  }
}

TEST_CASE("product rate relation") {
  // q=8, component d=3: d/N = 9/64, 1 - K/N = 1 - 36/64
  CHECK(mdrs::product_rate_relation(8, Rational{9, 64}) == Rational{28, 64});
  // sqrt(d/N) = 1/q gives zero redundancy
  CHECK(mdrs::product_rate_relation(8, Rational{1, 64}) == Rational{0, 1});
  CHECK(mdrs::product_rate_relation(16, Rational{1, 256}) == Rational{0, 1});
  // exact agreement with the parameter route at every component distance
  for (std::uint32_t q : {8u, 16u}) {
    for (std::uint32_t dc = 1; dc <= q; ++dc) {
      const auto prod = mdrs::product_code_checks(q, dc);
      const Rational d_over_n(static_cast<std::int64_t>(prod.d_min),
                              static_cast<std::int64_t>(prod.n_total));
      const Rational redundancy(static_cast<std::int64_t>(prod.checks),
                                static_cast<std::int64_t>(prod.n_total));
      CHECK(mdrs::product_rate_relation(q, d_over_n) == redundancy);
    }
  }
  CHECK_THROWS_AS(mdrs::product_rate_relation(8, Rational{2, 64}), mdrs::Error);
}

TEST_CASE("Gilbert-Varshamov dimension") {
  SUBCASE("N=32 d=3 q=16 by direct counting") {
    // sum_{i=0}^{1} C(31,i) 15^i = 1 + 465 = 466; 16^2 <= 466 < 16^3
    CHECK(1 + 31 * 15 == 466);
    CHECK(mdrs::gv_dimension(32, 3, 16) == 29);
  }
  SUBCASE("N=32 d=5 q=16 by direct counting") {
    const std::uint64_t c2 = 31 * 30 / 2, c3 = 31 * 30 * 29 / 6;
    const std::uint64_t sum =
        1 + 465 + c2 * 15 * 15 + c3 * 15 * 15 * 15;
    CHECK(sum == 15275716);
    std::uint64_t power = 1;
    std::uint32_t t = 0;
    while (power <= sum) {
      power *= 16;
      ++t;
    }
    CHECK(32 - t == 26);
    CHECK(mdrs::gv_dimension(32, 5, 16) == 26);
  }
  SUBCASE("edge and shape properties") {
    CHECK(mdrs::gv_dimension(32, 1, 16) == 32);  // empty sum
    CHECK(mdrs::gv_dimension(40, 1, 3) == 40);
    std::uint64_t prev = 33;
    for (std::uint32_t d = 1; d <= 32; ++d) {
      const auto k = mdrs::gv_dimension(32, d, 16);
      CHECK(k <= prev);
      CHECK(k >= 1);
      prev = k;
    }
    CHECK_THROWS_AS(mdrs::gv_dimension(32, 33, 16), mdrs::Error);
    CHECK_THROWS_AS(mdrs::gv_dimension(32, 0, 16), mdrs::Error);
  }
  SUBCASE("exact far beyond 64-bit counts") {
    const auto k = mdrs::gv_dimension(128, 40, 16);
    CHECK(k >= 1);
    CHECK(k <= 128);
  }
}

TEST_CASE("shortening") {
  SUBCASE("s=0 keeps the code") {
    const CodeSpec spec{Field(3, 1), 2, 3};
    const auto sc = mdrs::shorten(spec, 0);
    CHECK(sc.length == 9);
    CHECK(sc.dim == 6);
    CHECK(sc.d_lower == 3);
    CHECK(sc.kept_cols.size() == 9);
    // same row space: every shortened generator row is a codeword, and the
    // rank of the stack stays K
    CHECK(oracle::rank(spec.field, sc.gen) == 6);
  }
  SUBCASE("rows of the shortened generator come from vanishing codewords") {
    const CodeSpec spec{Field(3, 1), 2, 3};
    const auto region = mdrs::build_region(spec);
    const auto sc = mdrs::shorten(spec, 2);
    REQUIRE(sc.dim == 4);
    REQUIRE(sc.message_basis.size() == 4 * 6);
    for (std::size_t j = 0; j < sc.dim; ++j) {
      const std::span<const Element> msg{sc.message_basis.data() + j * 6, 6};
      const auto word = mdrs::encode(region, msg);
      // zero on the two removed coordinates, matching values elsewhere
      std::size_t kept = 0;
      for (std::uint32_t c = 0; c < 9; ++c) {
        if (kept < sc.kept_cols.size() && sc.kept_cols[kept] == c) {
          CHECK(word[c] == sc.gen.at(j, kept));
          ++kept;
        } else {
          CHECK(word[c].code == 0);
        }
      }
    }
  }
  SUBCASE("q=3 shortened [7,4] keeps distance at least 3") {
    const auto sc = mdrs::shorten(CodeSpec{Field(3, 1), 2, 3}, 2);
    CHECK(sc.length == 7);
    CHECK(sc.dim == 4);
    // independent brute force over all 3^4 - 1 row combinations
    const Field& field = sc.base.field;
    std::uint64_t best = ~std::uint64_t{0};
    for (std::uint32_t v = 1; v < 81; ++v) {
      std::uint32_t rest = v;
      std::vector<Element> word(sc.gen.cols(), Element{0});
      for (std::size_t r = 0; r < 4; ++r) {
        const Element coeff{static_cast<std::uint16_t>(rest % 3)};
        rest /= 3;
        if (coeff.code == 0) continue;
        for (std::size_t c = 0; c < sc.gen.cols(); ++c)
          word[c] = field.add(word[c], field.mul(coeff, sc.gen.at(r, c)));
      }
      std::uint64_t weight = 0;
      for (auto e : word) weight += e.code != 0;
      best = std::min(best, weight);
    }
    CHECK(best >= 3);
    const auto [lib_best, count] =
        mdrs::min_weight_over_span(field, sc.gen, 1 << 24);
    CHECK(lib_best == best);
    CHECK(count == 80);
  }
  SUBCASE("q=16 d=3 shortened by 224 gives [32, 29]") {
    const auto sc = mdrs::shorten(CodeSpec{Field(2, 4), 2, 3}, 224);
    CHECK(sc.length == 32);
    CHECK(sc.dim == 29);
    CHECK(sc.d_lower == 3);
    CHECK(sc.gen.rows() == 29);
    CHECK(sc.gen.cols() == 32);
    CHECK(oracle::rank(sc.base.field, sc.gen) == 29);
  }
  SUBCASE("s must leave at least one information symbol") {
    CHECK_THROWS_AS(mdrs::shorten(CodeSpec{Field(3, 1), 2, 3}, 6),
                    mdrs::InvalidShortening);
    CHECK_THROWS_AS(mdrs::shorten(CodeSpec{Field(3, 1), 2, 3}, 7),
                    mdrs::InvalidShortening);
  }
}

TEST_CASE("curve emission") {
  SUBCASE("dim2 q=5") {
    const auto points = mdrs::emit_curves(mdrs::CurveKind::Dim2, 5);
    std::vector<const mdrs::RateCurvePoint*> exact, bound;
    for (const auto& pt : points) {
      if (pt.series == "2D q=5") exact.push_back(&pt);
      if (pt.series == "bound q=5") bound.push_back(&pt);
    }
    CHECK(exact.size() == 23);  // d = 3..25
    CHECK(exact.front()->d == 3);
    CHECK(exact.front()->k_over_n == Rational{22, 25});
    CHECK(exact.front()->d_over_n == Rational{3, 25});
    CHECK(exact.back()->d == 25);
    // bound rows stay below the exact rate at the same d
    std::map<std::uint64_t, Rational> exact_at;
    for (const auto* pt : exact) exact_at.emplace(pt->d, pt->k_over_n);
    CHECK(!bound.empty());
    for (const auto* pt : bound) {
      CHECK(!pt->dim_k.has_value());
      CHECK(pt->k_over_n < exact_at.at(pt->d));
      CHECK(pt->k_over_n >= Rational{0, 1});
    }
  }
  SUBCASE("product-compare q=8: the 2-D code dominates") {
    const auto points = mdrs::emit_curves(mdrs::CurveKind::ProductCompare, 8);
    std::map<std::uint64_t, Rational> dim2, product;
    for (const auto& pt : points) {
      if (pt.series == "2D q=8") dim2.emplace(pt.d, pt.k_over_n);
      if (pt.series == "product q=8") product.emplace(pt.d, pt.k_over_n);
    }
    CHECK(product.size() == 8);
    std::size_t shared = 0;
    for (const auto& [d, rate] : product) {
      const auto it = dim2.find(d);
      if (it == dim2.end()) continue;
      CHECK(rate <= it->second);
      ++shared;
    }
    CHECK(shared == 7);  // dc = 2..8; dc=1 sits below the 2-D range
  }
  SUBCASE("dim-sweep q=4: higher dimensions pay in rate") {
    const std::uint32_t dims[] = {2, 3, 4};
    const auto points =
        mdrs::emit_curves(mdrs::CurveKind::DimSweep, 4, dims);
    std::map<std::string, std::vector<const mdrs::RateCurvePoint*>> series;
    for (const auto& pt : points) series[pt.series].push_back(&pt);
    CHECK(series.size() == 3);
    for (const auto& [label, pts] : series) {
      for (std::size_t i = 1; i < pts.size(); ++i)
        CHECK(pts[i]->k_over_n <= pts[i - 1]->k_over_n);
    }
    // matched d/N points: d2/16 == d3/64 == d4/256
    std::map<std::uint64_t, Rational> two, three, four;
    for (const auto* pt : series["2D q=4"]) two.emplace(pt->d, pt->k_over_n);
    for (const auto* pt : series["3D q=4"]) three.emplace(pt->d, pt->k_over_n);
    for (const auto* pt : series["4D q=4"]) four.emplace(pt->d, pt->k_over_n);
    for (std::uint32_t d2 = 3; d2 <= 16; ++d2) {
      if (three.count(4 * d2)) CHECK(three.at(4 * d2) <= two.at(d2));
      if (four.count(16 * d2)) CHECK(four.at(16 * d2) <= two.at(d2));
    }
  }
  SUBCASE("gv-compare q=16") {
    const std::uint32_t lengths[] = {32};
    const auto table = mdrs::gv_compare_table(16, lengths);
    REQUIRE(!table.empty());
    CHECK(table.front().length == 32);
    CHECK(table.front().d == 3);
    CHECK(table.front().shortened_k == 29);
    CHECK(table.front().gv_k == 29);
    for (const auto& row : table) CHECK(row.shortened_k >= 1);
    CHECK(table.back().d == 12);  // K' = K - 224 stays positive through d=12
  }
}

TEST_CASE("curve CSV") {
  const auto points = mdrs::emit_curves(mdrs::CurveKind::Dim2, 5);
  std::ostringstream out;
  mdrs::write_curves_csv(out, points);
  const std::string text = out.str();
  CHECK(text.rfind("series,d,N,K,d_num,d_den,k_num,k_den,d_over_N,k_over_N\n",
                   0) == 0);
  CHECK(text.find("2D q=5,3,25,22,3,25,22,25,0.12,0.88\n") != std::string::npos);
  // bound rows carry an empty K column and the exact fraction
  CHECK(text.find("bound q=5,3,25,,3,25,303,500,0.12,0.606\n") !=
        std::string::npos);
  CHECK(text.find('\r') == std::string::npos);
}
