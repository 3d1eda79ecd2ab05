#include "ghal/rng.hpp"

#include <cstdlib>
#include <string>

namespace ghal {

Sampler Sampler::from_env() {
  const char* s = std::getenv("GHAL_SEED");
  if (!s || !*s) return Sampler(1);
  return Sampler(std::strtoull(s, nullptr, 10));
}

uint64_t Sampler::next() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

uint64_t Sampler::below(uint64_t bound) { return bound ? next() % bound : 0; }

long Sampler::integer(long lo, long hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
}

Rational Sampler::rational(long max_num, long max_den) {
  return Rational(integer(-max_num, max_num), integer(1, max_den));
}

GaussRat Sampler::gauss(long max_num, long max_den) {
  return GaussRat(rational(max_num, max_den), rational(max_num, max_den));
}

} // namespace ghal
