#include "taulab/condition.hpp"

#include <stdexcept>

namespace taulab {

Scalar condition_eval(const Condition& c, const LaurentPoly& f) {
    if (f.variables().size() != 2)
        throw std::invalid_argument("condition_eval: f must be in one (z,w) pair");
    Scalar out(0);
    for (const auto& [e, coeff] : f.terms())
        out += coeff * c.moment(e[0], e[1]);
    return out;
}

Scalar product_condition_eval(const std::vector<Condition>& cs, const LaurentPoly& f) {
    if (f.variables().size() != 2 * cs.size())
        throw std::invalid_argument("product_condition_eval: variable/condition count mismatch");
    Scalar out(0);
    for (const auto& [e, coeff] : f.terms()) {
        Scalar m = coeff;
        for (std::size_t i = 0; i < cs.size() && !is_zero(m); ++i)
            m *= cs[i].moment(e[2 * i], e[2 * i + 1]);
        out += m;
    }
    return out;
}

std::vector<ShiftFieldTerm> shift_field_expand(const CoefficientArray& arr,
                                               const BlockPair& block,
                                               Index2 direction, int sign, int order) {
    const bool unit_direction =
        (std::abs(direction.first) + std::abs(direction.second)) == 1;
    if (!unit_direction)
        throw std::invalid_argument("shift_field_expand: direction must be (+-1,0) or (0,+-1)");
    if (order < 0) throw std::invalid_argument("shift_field_expand: negative order");

    std::vector<ShiftFieldTerm> terms;
    if (sign > 0) {
        // (1 - S/y): two terms regardless of order (order >= 1 needed for both)
        terms.push_back({0, Scalar(1), arr});
        if (order >= 1)
            terms.push_back({1, Scalar(-1), shift(arr, block, direction.first, direction.second)});
    } else {
        CoefficientArray cur = arr;
        for (int m = 0; m <= order; ++m) {
            terms.push_back({m, Scalar(1), cur});
            if (m < order) cur = shift(cur, block, direction.first, direction.second);
        }
    }
    return terms;
}

} // namespace taulab
