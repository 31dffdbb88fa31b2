#include "mdrs/encoder.hpp"

#include <string>

namespace mdrs {
namespace {

Element eval_at(const DegreeRegion& region, std::span<const Element> coeffs,
                std::span<const Element> point) {
  const Field& field = region.spec.field;
  const std::uint32_t n = region.spec.n;
  Element acc{0};
  for (const auto& group : region.groups) {
    Element inner{0};
    for (std::size_t i = group.count; i-- > 0;)
      inner = field.add(field.mul(inner, point[0]), coeffs[group.first + i]);
    const auto head = region.member(group.first);
    for (std::uint32_t j = 1; j < n; ++j)
      inner = field.mul(inner, field.pow(point[j], head[j]));
    acc = field.add(acc, inner);
  }
  return acc;
}

}  // namespace

std::vector<Element> point_tuple(const CodeSpec& spec, std::uint64_t index) {
  const std::uint64_t q = spec.field.q();
  const auto& betas = spec.field.elements();
  std::vector<Element> point(spec.n);
  for (std::uint32_t j = 0; j < spec.n; ++j) {
    point[j] = betas[index % q];
    index /= q;
  }
  return point;
}

Element evaluate_poly(const DegreeRegion& region,
                      std::span<const Element> coeffs,
                      std::span<const Element> point) {
  if (point.size() != region.spec.n)
    throw ArityMismatch("expected a point of " +
                        std::to_string(region.spec.n) + " coordinates, got " +
                        std::to_string(point.size()));
  if (coeffs.size() != region.dim())
    throw LengthMismatch("expected " + std::to_string(region.dim()) +
                         " coefficients, got " + std::to_string(coeffs.size()));
  return eval_at(region, coeffs, point);
}

Codeword encode(const DegreeRegion& region, std::span<const Element> message) {
  if (message.size() != region.dim())
    throw LengthMismatch("message length " + std::to_string(message.size()) +
                         " does not match K=" + std::to_string(region.dim()));
  const CodeSpec& spec = region.spec;
  const std::uint64_t q = spec.field.q();
  const std::uint64_t n_points = spec.length();
  const auto& betas = spec.field.elements();

  Codeword symbols(n_points);
  std::vector<std::uint32_t> digits(spec.n, 0);
  std::vector<Element> point(spec.n, betas[0]);
  for (std::uint64_t c = 0;; ++c) {
    symbols[c] = eval_at(region, message, point);
    std::size_t j = 0;
    while (j < digits.size() && ++digits[j] == q) digits[j++] = 0;
    if (j == digits.size()) break;
    for (std::size_t t = 0; t <= j; ++t) point[t] = betas[digits[t]];
  }
  return symbols;
}

GeneratorMatrix generator_matrix(const DegreeRegion& region) {
  const CodeSpec& spec = region.spec;
  const Field& field = spec.field;
  const std::size_t k_dim = region.dim();
  const std::uint64_t n_points = spec.length();

  GeneratorMatrix gen(k_dim, n_points);
  for (std::uint64_t c = 0; c < n_points; ++c) {
    const auto point = point_tuple(spec, c);
    for (std::size_t r = 0; r < k_dim; ++r) {
      const auto exps = region.member(r);
      Element v{1};
      for (std::uint32_t j = 0; j < spec.n; ++j)
        v = field.mul(v, field.pow(point[j], exps[j]));
      gen.set(r, c, v);
    }
  }
  return gen;
}

Codeword apply_generator(const Field& field, const GeneratorMatrix& gen,
                         std::span<const Element> message) {
  if (message.size() != gen.rows())
    throw LengthMismatch("message length " + std::to_string(message.size()) +
                         " does not match K=" + std::to_string(gen.rows()));
  Codeword out(gen.cols(), Element{0});
  for (std::size_t r = 0; r < gen.rows(); ++r) {
    if (message[r].code == 0) continue;
    const auto row = gen.row(r);
    for (std::size_t c = 0; c < gen.cols(); ++c) {
      if (row[c].code == 0) continue;
      out[c] = field.add(out[c], field.mul(message[r], row[c]));
    }
  }
  return out;
}

}  // namespace mdrs
