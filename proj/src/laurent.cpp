#include "taulab/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace taulab {

LaurentPoly LaurentPoly::constant(std::vector<std::string> variables, const Scalar& c) {
    LaurentPoly p(std::move(variables));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> variables,
                                  const std::string& var, int e, const Scalar& c) {
    LaurentPoly p(std::move(variables));
    Exponents exps(p.vars_.size(), 0);
    exps[p.var_index(var)] = e;
    p.add_term(exps, c);
    return p;
}

std::size_t LaurentPoly::var_index(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable: " + var);
    return static_cast<std::size_t>(it - vars_.begin());
}

void LaurentPoly::add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
    if (taulab::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (taulab::is_zero(it->second)) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    if (vars_ != other.vars_) throw std::invalid_argument("variable list mismatch");
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    if (vars_ != other.vars_) throw std::invalid_argument("variable list mismatch");
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    if (vars_ != other.vars_) throw std::invalid_argument("variable list mismatch");
    LaurentPoly out(vars_);
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

LaurentPoly LaurentPoly::operator*(const Scalar& c) const {
    LaurentPoly out(vars_);
    if (taulab::is_zero(c)) return out;
    for (const auto& [e, t] : terms_) out.add_term(e, t * c);
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
    return vars_ == other.vars_ && terms_ == other.terms_;
}

LaurentPoly LaurentPoly::residue(const std::string& var) const {
    const std::size_t idx = var_index(var);
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (i != idx) rest.push_back(vars_[i]);
    LaurentPoly out(rest);
    Exponents e(rest.size());
    for (const auto& [exps, c] : terms_) {
        if (exps[idx] != -1) continue;
        std::size_t k = 0;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (i != idx) e[k++] = exps[i];
        out.add_term(e, c);
    }
    return out;
}

} // namespace taulab
