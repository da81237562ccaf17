#pragma once

#include <cstdint>
#include <random>

#include "pentagram/rational.hpp"

namespace pentagram {

// std::mt19937_64 output is fixed by the standard; the mapping to integers
// below is ours (rejection sampling), so sequences are portable across
// standard libraries, unlike std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [lo, hi], hi >= lo.
  long uniform(long lo, long hi);

  // Numerator uniform on [-bound, bound] minus {0} when nonzero is set,
  // denominator uniform on [1, bound].
  Scalar rational(long bound, bool nonzero = true);

 private:
  std::mt19937_64 engine_;
};

}  // namespace pentagram
