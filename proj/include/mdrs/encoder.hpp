#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mdrs/code_params.hpp"
#include "mdrs/gf.hpp"

namespace mdrs {

// A message is the list of K coefficients a_{i_1..i_n}, one per region
// member in canonical order. A codeword is the list of N = q^n evaluations;
// the coordinate for point tuple (k_1..k_n) has index sum_j k_j * q^(j-1)
// (k_1 fastest) over the canonical beta enumeration.
using Message = std::vector<Element>;
using Codeword = std::vector<Element>;

class GeneratorMatrix {
public:
  GeneratorMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Element v) { a_[r * cols_ + c] = v; }
  std::span<const Element> row(std::size_t r) const {
    return {a_.data() + r * cols_, cols_};
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> a_;
};

// The beta values of the c-th evaluation point.
std::vector<Element> point_tuple(const CodeSpec& spec, std::uint64_t index);

// f(point) for the polynomial with the given region coefficients; nested
// Horner in x_1 per tail group. Throws ArityMismatch / LengthMismatch.
Element evaluate_poly(const DegreeRegion& region,
                      std::span<const Element> coeffs,
                      std::span<const Element> point);

// The n-dimensional Fourier transform over GF(q): all q^n evaluations of f.
Codeword encode(const DegreeRegion& region, std::span<const Element> message);

// Row r, column c = prod_j beta_{k_j}^{i_j} for the r-th member and c-th
// point; encode(msg) == msg * G and rank(G) = K.
GeneratorMatrix generator_matrix(const DegreeRegion& region);

// y = msg * G, the matrix route to the same codeword.
Codeword apply_generator(const Field& field, const GeneratorMatrix& gen,
                         std::span<const Element> message);

}  // namespace mdrs
