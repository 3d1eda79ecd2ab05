#ifndef GHAL_RNG_HPP
#define GHAL_RNG_HPP

#include <cstdint>

#include "ghal/gaussrat.hpp"

namespace ghal {

// Deterministic pseudo-random sampler (splitmix64). Identical sequences on
// every platform; the standard-library distributions are not portable.
class Sampler {
public:
  explicit Sampler(uint64_t seed) : state_(seed) {}

  // Seed from the GHAL_SEED environment variable, defaulting to 1.
  static Sampler from_env();

  uint64_t next();
  // Uniform in [0, bound).
  uint64_t below(uint64_t bound);
  // Integer in [lo, hi] inclusive.
  long integer(long lo, long hi);
  // Rational p/q with p in [-max_num, max_num] and q in [1, max_den].
  Rational rational(long max_num = 6, long max_den = 4);
  GaussRat gauss(long max_num = 6, long max_den = 4);

private:
  uint64_t state_;
};

} // namespace ghal

#endif
