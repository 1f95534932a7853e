#include "taulab/datagen.hpp"

namespace taulab {

CoefficientArray random_array(int n, std::uint64_t seed, int rows, int cols, int origin_i,
                              int origin_j) {
    Rng rng(seed);
    CoefficientArray arr(n);
    for (int a = 1; a < n; ++a)
        for (int b = 0; b < a; ++b)
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j < cols; ++j)
                    arr.set({a, b}, origin_i + i, origin_j + j, rng.small_rational());
    return arr;
}

std::map<BlockPair, std::map<int, Scalar>> random_loop_data(int n, std::uint64_t seed, int len) {
    Rng rng(seed);
    std::map<BlockPair, std::map<int, Scalar>> out;
    for (int a = 1; a < n; ++a)
        for (int b = 0; b < a; ++b)
            for (int m = 0; m < len; ++m) {
                Scalar v = rng.small_rational();
                if (!is_zero(v)) out[{a, b}][m] = v;
            }
    return out;
}

} // namespace taulab
