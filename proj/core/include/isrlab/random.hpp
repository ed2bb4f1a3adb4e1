#pragma once

#include <cstdint>
#include <random>

namespace isrlab {

// Seeded engine with a hand-rolled bounded draw: std distributions are not
// specified bit-for-bit across standard libraries, and reports must be
// reproducible from the seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace isrlab
