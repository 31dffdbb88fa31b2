#include "mdrs/analysis.hpp"

#include <algorithm>
#include <cstdio>

#include "mdrs/bignat.hpp"

namespace mdrs {

ProductParams product_code_checks(std::uint32_t q, std::uint32_t d_component) {
  if (d_component < 1 || d_component > q)
    throw InvalidComponent("component distance must satisfy 1 <= d <= q");
  const std::uint64_t k = q - d_component + 1;
  ProductParams out;
  out.n_total = std::uint64_t{q} * q;
  out.k_total = k * k;
  out.checks = out.n_total - out.k_total;
  out.d_min = std::uint64_t{d_component} * d_component;
  const std::uint64_t identity =
      std::uint64_t{d_component - 1} * (2 * std::uint64_t{q} - d_component + 1);
  if (identity != out.checks)
    throw Error("product check-symbol identity failed");  // unreachable
  return out;
}

namespace {

std::int64_t isqrt_exact(std::int64_t v) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

}  // namespace

Rational product_rate_relation(std::uint32_t q, const Rational& d_over_n) {
  if (!(Rational{0, 1} < d_over_n) || Rational{1, 1} < d_over_n)
    throw Error("d/N must lie in (0, 1]");
  const std::int64_t sn = isqrt_exact(d_over_n.num());
  const std::int64_t sd = isqrt_exact(d_over_n.den());
  if (sn < 0 || sd < 0)
    throw Error("d/N = " + d_over_n.to_string() +
                " is not the square of a rational");
  const Rational root{sn, sd};
  const Rational inv_q{1, q};
  return (root - inv_q) * (Rational{2, 1} - root + inv_q);
}

std::uint64_t gv_dimension(std::uint32_t n_len, std::uint32_t d,
                           std::uint32_t q) {
  if (n_len < 1 || d < 1 || d > n_len)
    throw Error("gv_dimension requires 1 <= d <= N");
  if (q < 2) throw Error("gv_dimension requires q >= 2");

  // Row N-1 of Pascal's triangle, exact.
  std::vector<BigNat> binom(n_len);
  binom[0] = BigNat::from(1);
  for (std::uint32_t row = 1; row < n_len; ++row) {
    for (std::uint32_t i = row; i-- > 1;) binom[i] += binom[i - 1];
    // binom[0] stays 1; binom[row] becomes 1
    binom[row] = BigNat::from(1);
  }

  BigNat sum;
  BigNat power = BigNat::from(1);
  for (std::uint32_t i = 0; i + 2 <= d; ++i) {
    sum += binom[i] * power;
    power.mul_small(q - 1);
  }

  std::uint32_t t = 0;
  BigNat q_pow = BigNat::from(1);
  while (q_pow <= sum) {
    q_pow.mul_small(q);
    ++t;
  }
  return n_len - t;
}

ShortenedCode shorten(const CodeSpec& spec, std::uint32_t s) {
  const auto region = build_region(spec);
  const std::size_t k_dim = region.dim();
  if (s >= k_dim)
    throw InvalidShortening("s=" + std::to_string(s) +
                            " must be smaller than K=" + std::to_string(k_dim));
  const Field& field = spec.field;
  const auto gen = generator_matrix(region);
  const std::size_t n_len = gen.cols();

  // Information set: greedy scan for the first K independent columns.
  // reduced[] holds the reduced column vectors found so far; pivot_row[]
  // their pivot positions.
  std::vector<std::vector<Element>> reduced;
  std::vector<std::size_t> pivot_row;
  std::vector<std::uint32_t> info_set;
  for (std::size_t c = 0; c < n_len && info_set.size() < k_dim; ++c) {
    std::vector<Element> v(k_dim);
    for (std::size_t r = 0; r < k_dim; ++r) v[r] = gen.at(r, c);
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      const Element factor = v[pivot_row[i]];
      if (factor.code == 0) continue;
      for (std::size_t r = 0; r < k_dim; ++r)
        v[r] = field.sub(v[r], field.mul(factor, reduced[i][r]));
    }
    std::size_t pivot = SIZE_MAX;
    for (std::size_t r = 0; r < k_dim; ++r) {
      if (v[r].code != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == SIZE_MAX) continue;
    const Element scale = field.inv(v[pivot]);
    for (std::size_t r = 0; r < k_dim; ++r) v[r] = field.mul(v[r], scale);
    reduced.push_back(std::move(v));
    pivot_row.push_back(pivot);
    info_set.push_back(static_cast<std::uint32_t>(c));
  }
  if (info_set.size() < k_dim)
    throw Error("generator matrix is rank deficient");  // unreachable

  // Invert A = G restricted to the information set; row j of the inverse is
  // the message whose codeword is 1 at info position j and 0 at the others.
  const std::size_t width = 2 * k_dim;
  std::vector<Element> work(k_dim * width);
  for (std::size_t r = 0; r < k_dim; ++r) {
    for (std::size_t j = 0; j < k_dim; ++j) {
      work[r * width + j] = gen.at(r, info_set[j]);
      work[r * width + k_dim + j] = Element{static_cast<std::uint16_t>(r == j)};
    }
  }
  for (std::size_t col = 0; col < k_dim; ++col) {
    std::size_t pivot = SIZE_MAX;
    for (std::size_t r = col; r < k_dim; ++r) {
      if (work[r * width + col].code != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == SIZE_MAX) throw Error("singular information-set matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < width; ++j)
        std::swap(work[pivot * width + j], work[col * width + j]);
    }
    const Element scale = field.inv(work[col * width + col]);
    for (std::size_t j = 0; j < width; ++j)
      work[col * width + j] = field.mul(work[col * width + j], scale);
    for (std::size_t r = 0; r < k_dim; ++r) {
      if (r == col) continue;
      const Element factor = work[r * width + col];
      if (factor.code == 0) continue;
      for (std::size_t j = 0; j < width; ++j) {
        work[r * width + j] = field.sub(
            work[r * width + j], field.mul(factor, work[col * width + j]));
      }
    }
  }
  // Row j of A^{-1} satisfies m_j * A = e_j: its codeword is 1 at info
  // position j and 0 at every other info position. The subcode vanishing on
  // the last s info positions is spanned by the first K-s of these rows.
  const std::size_t keep = k_dim - s;
  std::vector<Element> basis(keep * k_dim);
  for (std::size_t j = 0; j < keep; ++j)
    for (std::size_t r = 0; r < k_dim; ++r)
      basis[j * k_dim + r] = work[j * width + k_dim + r];

  std::vector<bool> removed(n_len, false);
  for (std::size_t j = keep; j < k_dim; ++j) removed[info_set[j]] = true;
  std::vector<std::uint32_t> kept_cols;
  kept_cols.reserve(n_len - s);
  for (std::size_t c = 0; c < n_len; ++c)
    if (!removed[c]) kept_cols.push_back(static_cast<std::uint32_t>(c));

  GeneratorMatrix short_gen(keep, kept_cols.size());
  for (std::size_t j = 0; j < keep; ++j) {
    const std::span<const Element> msg{basis.data() + j * k_dim, k_dim};
    const auto word = apply_generator(field, gen, msg);
    for (std::size_t c = 0; c < kept_cols.size(); ++c)
      short_gen.set(j, c, word[kept_cols[c]]);
  }

  ShortenedCode out{spec,
                    s,
                    n_len - s,
                    keep,
                    spec.d,
                    std::move(short_gen),
                    std::move(info_set),
                    std::move(kept_cols),
                    std::move(basis)};
  return out;
}

namespace {

std::string dim_label(std::uint32_t n, std::uint32_t q) {
  return std::to_string(n) + "D q=" + std::to_string(q);
}

void append_code_series(std::vector<RateCurvePoint>& points,
                        const std::string& label, const Field& field,
                        std::uint32_t n) {
  std::uint64_t n_points = 1;
  for (std::uint32_t i = 0; i < n; ++i) n_points *= field.q();
  for (std::uint32_t d = 3; d <= n_points; ++d) {
    const CodeSpec spec{field, n, d};
    const std::uint64_t k = info_count(spec);
    points.push_back({label, d, n_points, k,
                      Rational(d, static_cast<std::int64_t>(n_points)),
                      Rational(static_cast<std::int64_t>(k),
                               static_cast<std::int64_t>(n_points))});
  }
}

}  // namespace

std::vector<RateCurvePoint> emit_curves(CurveKind kind, std::uint32_t q,
                                        std::span<const std::uint32_t> dims,
                                        std::span<const std::uint32_t> lengths) {
  const Field field = Field::from_order(q);
  std::vector<RateCurvePoint> points;

  switch (kind) {
    case CurveKind::Dim2: {
      append_code_series(points, dim_label(2, q), field, 2);
      const std::uint64_t n_points = std::uint64_t{q} * q;
      const std::string label = "bound q=" + std::to_string(q);
      for (std::uint32_t d = 3; d <= n_points; ++d) {
        const Rational bound = rate_lower_bound(CodeSpec{field, 2, d});
        if (bound < Rational{0, 1}) break;
        points.push_back({label, d, n_points, std::nullopt,
                          Rational(d, static_cast<std::int64_t>(n_points)),
                          bound});
      }
      break;
    }
    case CurveKind::DimSweep: {
      static constexpr std::uint32_t kDefaultDims[] = {2, 3, 4};
      const std::span<const std::uint32_t> use =
          dims.empty() ? std::span<const std::uint32_t>{kDefaultDims} : dims;
      for (std::uint32_t n : use)
        append_code_series(points, dim_label(n, q), field, n);
      break;
    }
    case CurveKind::ProductCompare: {
      append_code_series(points, dim_label(2, q), field, 2);
      const std::string label = "product q=" + std::to_string(q);
      for (std::uint32_t dc = 1; dc <= q; ++dc) {
        const auto prod = product_code_checks(q, dc);
        points.push_back(
            {label, prod.d_min, prod.n_total, prod.k_total,
             Rational(static_cast<std::int64_t>(prod.d_min),
                      static_cast<std::int64_t>(prod.n_total)),
             Rational(static_cast<std::int64_t>(prod.k_total),
                      static_cast<std::int64_t>(prod.n_total))});
      }
      break;
    }
    case CurveKind::GvCompare: {
      static constexpr std::uint32_t kDefaultLengths[] = {32, 64, 128};
      const std::span<const std::uint32_t> use =
          lengths.empty() ? std::span<const std::uint32_t>{kDefaultLengths}
                          : lengths;
      const std::uint64_t n_full = std::uint64_t{q} * q;
      for (std::uint32_t len : use) {
        if (len < 2 || len >= n_full)
          throw Error("shortened length must lie in [2, q^2)");
        const std::uint64_t s = n_full - len;
        const std::string short_label = "shortened N=" + std::to_string(len);
        const std::string gv_label = "GV N=" + std::to_string(len);
        std::vector<RateCurvePoint> gv_points;
        for (std::uint32_t d = 3; d <= len; ++d) {
          const std::uint64_t k = info_count(CodeSpec{field, 2, d});
          if (k <= s) break;
          const std::uint64_t k_short = k - s;
          points.push_back({short_label, d, len, k_short,
                            Rational(d, len),
                            Rational(static_cast<std::int64_t>(k_short), len)});
          const std::uint64_t k_gv = gv_dimension(len, d, q);
          gv_points.push_back({gv_label, d, len, k_gv, Rational(d, len),
                               Rational(static_cast<std::int64_t>(k_gv), len)});
        }
        points.insert(points.end(), gv_points.begin(), gv_points.end());
      }
      break;
    }
  }
  return points;
}

void write_curves_csv(std::ostream& out,
                      std::span<const RateCurvePoint> points) {
  out << "series,d,N,K,d_num,d_den,k_num,k_den,d_over_N,k_over_N\n";
  char buf[64];
  for (const auto& pt : points) {
    out << pt.series << ',' << pt.d << ',' << pt.length << ',';
    if (pt.dim_k.has_value()) out << *pt.dim_k;
    out << ',' << pt.d_over_n.num() << ',' << pt.d_over_n.den() << ','
        << pt.k_over_n.num() << ',' << pt.k_over_n.den();
    std::snprintf(buf, sizeof buf, ",%.10g,%.10g", pt.d_over_n.to_double(),
                  pt.k_over_n.to_double());
    out << buf << '\n';
  }
}

std::vector<GvComparison> gv_compare_table(
    std::uint32_t q, std::span<const std::uint32_t> lengths) {
  const auto points = emit_curves(CurveKind::GvCompare, q, {}, lengths);
  std::vector<GvComparison> table;
  for (const auto& pt : points) {
    if (pt.series.rfind("shortened", 0) == 0) {
      table.push_back({static_cast<std::uint32_t>(pt.length),
                       static_cast<std::uint32_t>(pt.d), *pt.dim_k, 0});
    }
  }
  std::size_t i = 0;
  for (const auto& pt : points) {
    if (pt.series.rfind("GV", 0) == 0) table[i++].gv_k = *pt.dim_k;
  }
  return table;
}

}  // namespace mdrs
