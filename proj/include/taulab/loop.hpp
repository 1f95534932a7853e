#pragma once

#include "taulab/coeff_array.hpp"
#include "taulab/matrix.hpp"
#include "taulab/report.hpp"
#include "taulab/tau.hpp"

#include <map>
#include <utility>

namespace taulab {

struct NoBirkhoff : std::runtime_error {
    NoBirkhoff() : std::runtime_error("Birkhoff factorization does not exist (tau = 0)") {}
};

// n x n matrix Laurent polynomial in z.
class LaurentMatrix {
  public:
    explicit LaurentMatrix(int n) : n_(n) {}
    static LaurentMatrix identity(int n);
    // diag(z^{d_a})
    static LaurentMatrix diag_powers(int n, const std::vector<int>& d);

    int n() const { return n_; }
    Scalar get(int deg, int a, int b) const;
    void add(int deg, int a, int b, const Scalar& v);
    const std::map<int, DenseMatrix>& coeffs() const { return coeffs_; }

    LaurentMatrix operator*(const LaurentMatrix& other) const;
    LaurentMatrix operator+(const LaurentMatrix& other) const;
    LaurentMatrix operator-(const LaurentMatrix& other) const;
    bool operator==(const LaurentMatrix& other) const;

    int min_degree() const; // 0 for the zero matrix
    int max_degree() const;
    bool nonnegative_in_z() const { return min_degree() >= 0; }

    // Inverse when det is a unit monomial +-z^d; throws otherwise.
    LaurentMatrix inverse() const;

  private:
    int n_;
    std::map<int, DenseMatrix> coeffs_; // degree -> n x n block
    void prune(int deg);
};

// Single-index moment data gamma_m per lower-triangular block pair.
struct QCoefficients {
    int n = 0;
    std::map<BlockPair, std::map<int, Scalar>> gamma;

    Scalar get(const BlockPair& p, int m) const {
        auto it = gamma.find(p);
        if (it == gamma.end()) return Scalar(0);
        auto jt = it->second.find(m);
        return jt == it->second.end() ? Scalar(0) : jt->second;
    }
};

// Anti-diagonal-constant specialization b_{i,j} = gamma_{i+j} on the box
// |i|, |j| <= radius; restrict inverts it and rejects non-constant input.
CoefficientArray lift(const QCoefficients& q, int radius);
QCoefficients restrict_array(const CoefficientArray& arr);

// Loop JSON format: blocks carry {"m": int, "num": int, "den": int} under
// "loop": true.
std::string loop_to_json(const QCoefficients& q);
QCoefficients loop_from_json(const std::string& text);

// T_{n-1}^{-k_{n-1}} ... T_1^{-k_1} g^{(beta)} as a matrix Laurent
// polynomial; beta has length n (beta[0] is conventionally 0), block
// (a,b) picks up gamma_{m + beta_b - beta_a}.
LaurentMatrix loop_element(const QCoefficients& q, const std::vector<int>& k_vector,
                           const std::vector<int>& beta);

struct BirkhoffPair {
    LaurentMatrix g_minus;     // I + strictly negative powers
    LaurentMatrix g_plus;      // nonnegative powers
    LaurentMatrix g_minus_inv; // g_plus * m^{-1}, exact
};

// Direct route: solves the linear system m C = I + A with C polynomial
// (g_plus^{-1} is polynomial because det m = 1), A strictly negative.
BirkhoffPair birkhoff_factorize(const LaurentMatrix& m);

// Embedded route: lifts to the truncated infinite matrix, Gauss
// factorizes there and reads the g_minus coefficients back off the
// power-zero columns. Must agree with the direct route.
LaurentMatrix birkhoff_minus_embedded(const QCoefficients& q, const std::vector<int>& k_vector,
                                      const std::vector<int>& beta, int extra_margin = 0);

// Single-index Hankel tau: det (gamma_{alpha+i+j})_{k x k} for the (1,0)
// block; the n = 2 loop tau function.
Scalar loop_tau_hankel(const QCoefficients& q, int k, int alpha);

// Loop tau for any n via the generalized minor of the lifted array, with
// the lift box sized to the consumer window.
Scalar loop_tau_minor(const QCoefficients& q, const std::vector<int>& k_vector,
                      const std::vector<int>& shift_vector);

int loop_extent(const QCoefficients& q);

// Verifies, on the grid, (i) nonnegativity of the V/W products, (ii) the
// h-difference identities eq1/eq2 with h's from the Birkhoff factor and
// taus from the restricted table, (iii) the 2Q relation (n = 2); for
// n = 3 the four 3Q equations under the lift.
RelationReport check_q_identities(const QCoefficients& q, const GridSpec& grid);

} // namespace taulab
