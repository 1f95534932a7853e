#pragma once

#include "taulab/coeff_array.hpp"
#include "taulab/laurent.hpp"

#include <vector>

namespace taulab {

// Linear moment functional backed by one block of a CoefficientArray.
// moment(k,l) reads the raw entry (k + off_i, l + off_j); the plain
// functional on polynomials additionally cuts off negative moments,
// matching c(z^k w^l) = 0 for k < 0 or l < 0. Shifted group elements
// reference raw entries, so the shifted series skip the cutoff.
class Condition {
  public:
    Condition(const CoefficientArray& arr, BlockPair block,
              int off_i = 0, int off_j = 0, bool negative_cutoff = true)
        : arr_(&arr), block_(block), off_i_(off_i), off_j_(off_j),
          cutoff_(negative_cutoff) {}

    Scalar moment(int k, int l) const {
        if (cutoff_ && (k < 0 || l < 0)) return Scalar(0);
        return arr_->get(block_, k + off_i_, l + off_j_);
    }

  private:
    const CoefficientArray* arr_;
    BlockPair block_;
    int off_i_, off_j_;
    bool cutoff_;
};

// Linear extension of z^k w^l -> moment(k,l). f must be a polynomial in
// exactly one (z,w) variable pair.
Scalar condition_eval(const Condition& c, const LaurentPoly& f);

// Product condition: f lives in pairs (z_1,w_1),...,(z_e,w_e), ordered as
// consecutive variable pairs; on each monomial the per-pair moments are
// multiplied, then extended linearly.
Scalar product_condition_eval(const std::vector<Condition>& cs, const LaurentPoly& f);

// One term of a shift-field expansion: coeff * tau(S^{power * direction} arr).
struct ShiftFieldTerm {
    int power;
    Scalar coeff;
    CoefficientArray arr;
};

// Expansion of (1 - S^dir / y)^{+1} (exactly two terms) or its inverse
// geometric series truncated at y^{-order}. `direction` is one of
// (+-1,0) or (0,+-1).
std::vector<ShiftFieldTerm> shift_field_expand(const CoefficientArray& arr,
                                               const BlockPair& block,
                                               Index2 direction, int sign, int order);

} // namespace taulab
