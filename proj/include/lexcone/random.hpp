#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "lexcone/rational.hpp"

namespace lexcone {

// Deterministic random source. Only the raw mt19937_64 stream is used (its
// output sequence is fixed by the standard); the standard distributions are
// implementation-defined and are avoided so reports are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for (seed, stream, index), e.g. one per suite trial.
  static Rng derive(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return Rng(mix(mix(seed ^ mix(stream)) ^ index));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n); n > 0. Modulo bias is irrelevant at these ranges.
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

  // Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::size_t>(hi - lo + 1)));
  }

  // True with probability num/den.
  bool chance(unsigned num, unsigned den) { return below(den) < num; }

  // p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational small_rational(long max_num, long max_den) {
    Rational q(mpz_class(range(-max_num, max_num)), mpz_class(range(1, max_den)));
    q.canonicalize();
    return q;
  }

  // Strictly positive p/q with 1 <= p <= max_num.
  Rational positive_rational(long max_num, long max_den) {
    Rational q(mpz_class(range(1, max_num)), mpz_class(range(1, max_den)));
    q.canonicalize();
    return q;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  // splitmix64 finaliser
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace lexcone
