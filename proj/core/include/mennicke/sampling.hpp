#pragma once

#include "mennicke/ggroup.hpp"
#include "mennicke/mgroup.hpp"

#include <cstdint>
#include <random>

namespace mennicke {

// Deterministic sampler. Values are derived from mt19937_64 output with
// plain modulo reduction so streams are identical on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  long below(long n) { return static_cast<long>(rng_() % static_cast<std::uint64_t>(n)); }
  long uniform(long bound) { return below(2 * bound + 1) - bound; }  // in [-bound, bound]
  bool bit() { return (rng_() & 1u) != 0; }

  MElem melem(long bound) { return {uniform(bound), uniform(bound), uniform(bound)}; }
  GElem gelem(long bound) {
    return GElem::make(uniform(bound), uniform(bound), uniform(bound), bit(), bit(), bit(),
                       static_cast<int>(below(3)));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mennicke
