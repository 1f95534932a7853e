#pragma once

#include "taulab/coeff_array.hpp"

#include <cstdint>
#include <random>

namespace taulab {

// Deterministic seeded generator. Draws go through our own bounded
// mapping, not uniform_int_distribution, so files are byte-stable across
// platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // uniform in [lo, hi]
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Scalar small_rational(long num_mag = 9, long den_max = 4) {
        long num = uniform(-num_mag, num_mag);
        long den = uniform(1, den_max);
        return rat(num, den);
    }

  private:
    std::mt19937_64 engine_;
};

// Random finite-support array: every block pair, entries on
// [origin_i, origin_i + rows) x [origin_j, origin_j + cols) with small
// rational values. Negative origins keep shifted taus generically
// nonzero across a symmetric shift grid.
CoefficientArray random_array(int n, std::uint64_t seed, int rows = 3, int cols = 3,
                              int origin_i = 0, int origin_j = 0);

// Anti-diagonal-constant array data: per block, gamma_m for m in [0, len).
std::map<BlockPair, std::map<int, Scalar>> random_loop_data(int n, std::uint64_t seed,
                                                            int len = 3);

} // namespace taulab
