#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mdrs/code_params.hpp"
#include "mdrs/encoder.hpp"
#include "mdrs/rational.hpp"

namespace mdrs {

// Parameters of the product of a length-q nonsystematic RS code with itself:
// N = q^2, K = (q - d + 1)^2, d_min = d^2; N - K = (d-1)(2q-d+1).
struct ProductParams {
  std::uint64_t n_total = 0;
  std::uint64_t k_total = 0;
  std::uint64_t checks = 0;
  std::uint64_t d_min = 0;
};

ProductParams product_code_checks(std::uint32_t q, std::uint32_t d_component);

// 1 - K/N = (sqrt(d/N) - 1/q)(2 - sqrt(d/N) + 1/q), evaluated exactly;
// requires d_over_n to be the square of a rational, which every product-code
// point is.
Rational product_rate_relation(std::uint32_t q, const Rational& d_over_n);

// Largest k with sum_{i=0}^{d-2} C(N-1,i)(q-1)^i < q^(N-k), the linear-code
// Varshamov existence form, in exact big-integer arithmetic.
std::uint64_t gv_dimension(std::uint32_t n_len, std::uint32_t d,
                           std::uint32_t q);

// Information-set shortening: the information set is the first K linearly
// independent columns of G in coordinate order; the subcode vanishing on the
// last s of those positions, with those coordinates deleted, has parameters
// [N-s, K-s, >= d].
struct ShortenedCode {
  CodeSpec base;
  std::uint32_t s = 0;
  std::uint64_t length = 0;  // N - s
  std::uint64_t dim = 0;     // K - s
  std::uint64_t d_lower = 0;
  GeneratorMatrix gen;                     // (K-s) x (N-s)
  std::vector<std::uint32_t> info_set;     // the K information positions
  std::vector<std::uint32_t> kept_cols;    // surviving coordinates, ascending
  std::vector<Element> message_basis;      // (K-s) x K, row-major
};

ShortenedCode shorten(const CodeSpec& spec, std::uint32_t s);

// One plotted point; dim_k is absent for the analytic bound series, whose
// exact height is carried in k_over_n alone.
struct RateCurvePoint {
  std::string series;
  std::uint64_t d = 0;
  std::uint64_t length = 0;
  std::optional<std::uint64_t> dim_k;
  Rational d_over_n;
  Rational k_over_n;
};

enum class CurveKind { Dim2, DimSweep, ProductCompare, GvCompare };

// Series data for the rate plots. dims feeds the dimension sweep (default
// {2,3,4}); lengths feeds the shortened-code comparison (default
// {32,64,128}).
std::vector<RateCurvePoint> emit_curves(
    CurveKind kind, std::uint32_t q,
    std::span<const std::uint32_t> dims = {},
    std::span<const std::uint32_t> lengths = {});

// header: series,d,N,K,d_num,d_den,k_num,k_den,d_over_N,k_over_N
void write_curves_csv(std::ostream& out,
                      std::span<const RateCurvePoint> points);

// Shortened-code dimension vs the GV dimension at matching (length, d).
struct GvComparison {
  std::uint32_t length = 0;
  std::uint32_t d = 0;
  std::uint64_t shortened_k = 0;
  std::uint64_t gv_k = 0;
};

std::vector<GvComparison> gv_compare_table(
    std::uint32_t q, std::span<const std::uint32_t> lengths);

}  // namespace mdrs
