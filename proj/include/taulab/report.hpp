#pragma once

#include "taulab/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace taulab {

// Per-equation residuals for one difference system on one instance.
// Proven systems pass iff every residual is exactly zero; conjecture
// probes report instead of passing or failing.
struct RelationReport {
    struct Residual {
        std::string point;
        int eq = 0;
        Scalar value;
    };
    struct Skip {
        std::string point;
        std::string reason;
    };

    std::string system;
    std::uint64_t seed = 0;
    std::string grid_desc;
    bool conjecture = false;
    std::vector<Residual> residuals;
    std::vector<Skip> skipped;

    bool all_zero() const {
        for (const auto& r : residuals)
            if (!is_zero(r.value)) return false;
        return true;
    }
    std::string verdict() const {
        if (conjecture) return "reported";
        return all_zero() ? "pass" : "fail";
    }
    // first nonzero residual, for diagnostics
    const Residual* first_nonzero() const {
        for (const auto& r : residuals)
            if (!is_zero(r.value)) return &r;
        return nullptr;
    }

    std::string to_json() const;
};

} // namespace taulab
