#include "pentagram/rng.hpp"

#include <limits>

#include "pentagram/error.hpp"

namespace pentagram {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw Error(ErrorCode::kInvalidArgument, "empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % span + 1) % span;
  std::uint64_t x;
  do {
    x = next();
  } while (x > limit);
  return lo + static_cast<long>(x % span);
}

Scalar Rng::rational(long bound, bool nonzero) {
  if (bound < 1) throw Error(ErrorCode::kInvalidArgument, "bound must be positive");
  long num;
  do {
    num = uniform(-bound, bound);
  } while (nonzero && num == 0);
  long den = uniform(1, bound);
  Scalar out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace pentagram
