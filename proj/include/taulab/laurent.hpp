#pragma once

#include "taulab/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace taulab {

// Sparse multivariate Laurent polynomial. Terms map exponent vectors
// (negative exponents allowed) to nonzero coefficients; the empty term
// map is the canonical zero.
class LaurentPoly {
  public:
    using Exponents = std::vector<int>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::vector<std::string> variables)
        : vars_(std::move(variables)) {}

    static LaurentPoly constant(std::vector<std::string> variables, const Scalar& c);
    // Monomial c * var^e in the given variable list.
    static LaurentPoly monomial(std::vector<std::string> variables,
                                const std::string& var, int e, const Scalar& c);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::map<Exponents, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Scalar& c);

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly operator*(const Scalar& c) const;
    bool operator==(const LaurentPoly& other) const;

    // Coefficient slice with exponent -1 in the named variable; the result
    // lives in the remaining variables. Unknown variable names are rejected.
    LaurentPoly residue(const std::string& var) const;

    std::size_t var_index(const std::string& var) const;

  private:
    std::vector<std::string> vars_;
    std::map<Exponents, Scalar> terms_;
};

} // namespace taulab
