#include "taulab/datagen.hpp"
#include "taulab/fock.hpp"
#include "taulab/matgroup.hpp"
#include "taulab/tau.hpp"

#include <doctest.h>

using namespace taulab;

TEST_CASE("tau_hankel basics") {
    CoefficientArray arr = random_array(2, 3, 3, 3);
    CHECK(tau_hankel(arr, 0, 0, 0) == 1);
    CHECK(tau_hankel(arr, 1, 0, 0) == arr.get({1, 0}, 0, 0));
    CHECK(tau_hankel(arr, 2, 0, 0) == arr.get({1, 0}, 0, 0) * arr.get({1, 0}, 1, 1) -
                                          arr.get({1, 0}, 0, 1) * arr.get({1, 0}, 1, 0));
    // shifted entries come from the raw array
    CHECK(tau_hankel(arr, 1, 1, -1) == arr.get({1, 0}, 1, 1));
    CHECK_THROWS_AS(tau_hankel(random_array(3, 1, 2, 2), 1, 0, 0), std::invalid_argument);
}

TEST_CASE("tau_residue_3 base cases") {
    CoefficientArray arr = random_array(3, 5, 2, 2);
    CHECK(tau_residue_3(arr, 0, 0, 0, 0, 0) == 1);
    CHECK(tau_residue_3(arr, 0, 0, 2, -1, 1) == 1);
    CHECK(tau_residue_3(arr, 1, 0, 0, 0, 0) == arr.get({1, 0}, 0, 0));
    // k=0: independent of alpha
    for (int alpha = -1; alpha <= 1; ++alpha)
        CHECK(tau_residue_3(arr, 0, 1, alpha, 0, 0) == tau_residue_3(arr, 0, 1, 0, 0, 0));
    CHECK_THROWS_AS(tau_residue_3(random_array(2, 1, 2, 2), 1, 0, 0, 0, 0),
                    std::invalid_argument);
}

TEST_CASE("tau_residue_3 agrees with minor and fock") {
    for (std::uint64_t seed : {71, 72}) {
        CoefficientArray arr = random_array(3, seed, 2, 2);
        for (int k = 0; k <= 3; ++k)
            for (int l = 0; k + l <= 3; ++l)
                for (int a = -1; a <= 1; ++a)
                    for (int b = -1; b <= 1; ++b)
                        for (int g = -1; g <= 1; ++g) {
                            CAPTURE(seed);
                            CAPTURE(k);
                            CAPTURE(l);
                            CAPTURE(a);
                            CAPTURE(b);
                            CAPTURE(g);
                            Scalar r = tau_residue_3(arr, k, l, a, b, g);
                            CHECK(r == tau_minor(arr, {k, l}, {a, b, g}));
                        }
        // fock spot-check on the diagonal of the shift grid
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; k + l <= 2; ++l)
                CHECK(tau_residue_3(arr, k, l, 1, 0, -1) == tau_fock(arr, {k, l}, {1, 0, -1}));
    }
}

TEST_CASE("tau_residue_3 truncation-order invariance") {
    CoefficientArray arr = random_array(3, 73, 2, 2);
    for (int k = 0; k <= 2; ++k)
        for (int l = 0; k + l <= 3; ++l) {
            Scalar base = tau_residue_3(arr, k, l, 1, -1, 0);
            CHECK(base == tau_residue_3(arr, k, l, 1, -1, 0, 8));
            CHECK(base == tau_residue_3(arr, k, l, 1, -1, 0, 10));
        }
}

TEST_CASE("tau with negative k vanishes via every route") {
    CoefficientArray arr2 = random_array(2, 74, 3, 3);
    CHECK(is_zero(tau_minor(arr2, {-2}, {1, 1})));
    CoefficientArray arr3 = random_array(3, 75, 2, 2);
    CHECK(is_zero(tau_minor(arr3, {-1, 2}, {0, 0, 0})));
    CHECK(is_zero(tau_minor(arr3, {1, -1}, {0, 1, 0})));
}

TEST_CASE("alpha/gamma independence at the boundary rows") {
    CoefficientArray arr = random_array(3, 76, 2, 2);
    for (int s = -1; s <= 1; ++s) {
        // tau_{0,l} independent of alpha; tau_{k,0} independent of gamma
        CHECK(tau_minor(arr, {0, 2}, {s, 1, 0}) == tau_minor(arr, {0, 2}, {0, 1, 0}));
        CHECK(tau_minor(arr, {2, 0}, {1, 0, s}) == tau_minor(arr, {2, 0}, {1, 0, 0}));
    }
}

TEST_CASE("build_table referee and exports") {
    CoefficientArray arr = random_array(2, 77, 3, 3);
    GridSpec grid{.k_max = 3, .k_sum_max = -1, .shift_lo = -1, .shift_hi = 1};
    TauTable table = build_table(arr, grid, {TauMethod::hankel, TauMethod::minor, TauMethod::fock});
    CHECK(table.entries().size() == 4u * 9u);
    // every key carries all three provenance tags and one agreed value
    for (const auto& [key, methods] : table.entries()) CHECK(methods.size() == 3);

    // negative index convention via the accessor
    CHECK(is_zero(table.value({{-1}, {0, 0}})));
    CHECK_THROWS_AS(table.value({{9}, {0, 0}}), std::out_of_range);

    // deterministic exports
    CHECK(table.to_csv() == table.to_csv());
    CHECK(table.to_json() == table.to_json());
    CHECK(table.to_csv().substr(0, 47) == "k,l,alpha,beta,gamma,method,value_num,value_den");

    // mismatch detection: a poisoned insert trips immediately
    TauTable poisoned(2);
    poisoned.insert({{1}, {0, 0}}, TauMethod::hankel, rat(1));
    CHECK_THROWS_AS(poisoned.insert({{1}, {0, 0}}, TauMethod::minor, rat(2)),
                    CrossMethodMismatch);
}

TEST_CASE("build_table n=3 with residue and minor") {
    CoefficientArray arr = random_array(3, 78, 2, 2);
    GridSpec grid{.k_max = 3, .k_sum_max = 3, .shift_lo = 0, .shift_hi = 1};
    TauTable table = build_table(arr, grid, {TauMethod::residue, TauMethod::minor}, 2);
    for (const auto& [key, methods] : table.entries()) CHECK(methods.size() == 2);
}
