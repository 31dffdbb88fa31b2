#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mdrs/gf.hpp"
#include "mdrs/rational.hpp"

namespace mdrs {

// Block length limit for anything that materializes a region, codeword or
// matrix. Parameters stay exact well beyond desk scale, but codewords of
// more than 2^26 symbols are out of this tool's scope.
inline constexpr std::uint64_t kMaxBlockLength = std::uint64_t{1} << 26;

// Names one code: GF(q), number of variables n, design distance d.
struct CodeSpec {
  Field field;
  std::uint32_t n = 1;
  std::uint32_t d = 1;

  // N = q^n; throws CodeTooLarge beyond kMaxBlockLength.
  std::uint64_t length() const;
};

// The staircase set of coefficient multi-indices (i_1, ..., i_n) with
//   i_1 <= q - ceil(d / prod_{j>=2} (q - i_j)),
// ordered ascending lexicographic on (i_n, ..., i_2, i_1). That order fixes
// the message coefficient layout for the whole artifact. Members sharing a
// tail (i_2..i_n) are contiguous with i_1 = 0..count-1, recorded in groups.
struct DegreeRegion {
  CodeSpec spec;
  std::vector<std::uint16_t> members;  // flat, stride n

  struct TailGroup {
    std::size_t first;    // index of the first member of this tail
    std::uint32_t count;  // members in the group: bound + 1
  };
  std::vector<TailGroup> groups;

  std::size_t dim() const { return members.size() / spec.n; }

  std::span<const std::uint16_t> member(std::size_t r) const {
    return {members.data() + r * spec.n, spec.n};
  }
};

DegreeRegion build_region(const CodeSpec& spec);

// |region| and q^n - |region| without materializing the member list.
std::uint64_t info_count(const CodeSpec& spec);
std::uint64_t check_count(const CodeSpec& spec);

// Check-symbol count as a function of (d, n) alone, valid when d <= q:
// sum over (i_2..i_n) in [1, d-1]^(n-1) of ceil(d / prod i_j) - 1.
// For n = 1 this is d - 1.
std::uint64_t check_count_small_d(std::uint64_t d, std::uint32_t n);

// Exact lower bound on K/N for the 2-dimensional code:
//   1 - d/N - (d/N) * sum_{m=0}^{floor(q - d/q)} 1/(q - m).
// Throws UnsupportedDimension unless spec.n == 2.
Rational rate_lower_bound(const CodeSpec& spec);

}  // namespace mdrs
