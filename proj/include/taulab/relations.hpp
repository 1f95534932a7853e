#pragma once

#include "taulab/coeff_array.hpp"
#include "taulab/loop.hpp"
#include "taulab/report.hpp"
#include "taulab/tau.hpp"

namespace taulab {

// Difference systems evaluated from a tau table. The table must cover the
// grid plus a one-step halo; taus with a negative translation index are 0.
RelationReport check_2T(const TauTable& table, const GridSpec& grid);
RelationReport check_3T_three_term(const TauTable& table, const GridSpec& grid);
RelationReport check_3T_four_term(const TauTable& table, const GridSpec& grid);

// h-coefficient identities against tau ratios, cross-multiplied so no
// division occurs; points whose Gauss factorization does not exist are
// skipped with a reason. Covers the n = 2 ratio/difference identities and
// the n = 3 leading-coefficient and diagonal-difference identities.
RelationReport check_h_differences(const CoefficientArray& arr, const GridSpec& grid);

// Single-point conjecture probes; n = 2, 3 are proven cases (residual 0),
// higher n is reported. Points with vanishing denominator taus are
// skipped.
RelationReport probe_conjecture_glinf(const CoefficientArray& arr, int i,
                                      const std::vector<int>& k_vector,
                                      const std::vector<int>& shift_vector);
RelationReport probe_conjecture_gln(const QCoefficients& q, int i,
                                    const std::vector<int>& k_vector,
                                    const std::vector<int>& beta);

void merge_into(RelationReport& dst, const RelationReport& src);

} // namespace taulab
