#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>

#include "implicit/rat.hpp"

namespace implicit {

/// Exact-arithmetic operation counts for one computation.
///
/// Kernels take the counter by reference and only ever increase it. Parallel
/// or staged work keeps one counter per task and combines them with merge(),
/// which sums the counts and takes the max of max_bits.
struct OpCounter {
  std::uint64_t adds = 0;  ///< additions and subtractions
  std::uint64_t muls = 0;
  std::uint64_t divs = 0;  ///< divisions, including exact integer divisions
  std::size_t max_bits = 0;  ///< widest numerator/denominator seen
  std::uint64_t determinants = 0;
  std::uint64_t vandermonde_solves = 0;

  void observe(const Integer& z) { max_bits = std::max(max_bits, bit_length(z)); }
  void observe(const Rat& r) { max_bits = std::max(max_bits, bit_length(r)); }

  std::uint64_t muls_and_divs() const noexcept { return muls + divs; }

  OpCounter& merge(const OpCounter& other) noexcept {
    adds += other.adds;
    muls += other.muls;
    divs += other.divs;
    max_bits = std::max(max_bits, other.max_bits);
    determinants += other.determinants;
    vandermonde_solves += other.vandermonde_solves;
    return *this;
  }

  friend OpCounter merged(OpCounter a, const OpCounter& b) noexcept { return a.merge(b); }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

}  // namespace implicit
