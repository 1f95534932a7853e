#pragma once

#include "taulab/coeff_array.hpp"
#include "taulab/fock.hpp"
#include "taulab/matrix.hpp"

#include <array>
#include <map>
#include <vector>

namespace taulab {

struct SingularBlock : std::runtime_error {
    SingularBlock() : std::runtime_error("Gauss factorization: singular (+,+) block, tau = 0") {}
};

// Window-truncated element of the infinite matrix group, stored as a
// per-component shifted identity pattern (row = col + offset_a) plus a
// finite deviation. Entries are indexed by wedge labels (a, k).
class TruncatedMatrix {
  public:
    using Entry = std::pair<WedgeLabel, WedgeLabel>; // (row, col)

    TruncatedMatrix(int n, int window)
        : n_(n), window_(window), offsets_(n, 0) {}
    TruncatedMatrix(int n, int window, std::vector<int> offsets)
        : n_(n), window_(window), offsets_(std::move(offsets)) {}

    int n() const { return n_; }
    int window() const { return window_; }
    const std::vector<int>& offsets() const { return offsets_; }
    const std::map<Entry, Scalar>& deviation() const { return dev_; }

    void add(const WedgeLabel& row, const WedgeLabel& col, const Scalar& v);
    Scalar entry(const WedgeLabel& row, const WedgeLabel& col) const;

    // Dense materialization over labels with powers in [-window, window),
    // H+ block first (k = 0..K-1 by (k,a)), then H- (k = -1..-K).
    DenseMatrix to_dense() const;
    static std::size_t dense_index(int n, int window, const WedgeLabel& l);

    bool operator==(const TruncatedMatrix& other) const {
        return n_ == other.n_ && offsets_ == other.offsets_ && dev_ == other.dev_;
    }

  private:
    int n_, window_;
    std::vector<int> offsets_;
    std::map<Entry, Scalar> dev_;
};

struct GaussPair {
    TruncatedMatrix g_minus;    // unipotent, deviation X in the (-,+) block
    TruncatedMatrix g_zeroplus; // zero (-,+) block
};

// Coefficients of E_ab^{-i-1,j} in g_minus, keyed by (a, b, i, j).
class HTable {
  public:
    using Key = std::array<int, 4>;

    void set(int a, int b, int i, int j, const Scalar& v) {
        if (!is_zero(v)) table_[{a, b, i, j}] = v;
    }
    Scalar get(int a, int b, int i, int j) const {
        auto it = table_.find({a, b, i, j});
        return it == table_.end() ? Scalar(0) : it->second;
    }
    Scalar h(int a, int b) const { return get(a, b, 0, 0); }
    bool empty() const { return table_.empty(); }
    const std::map<Key, Scalar>& entries() const { return table_; }

  private:
    std::map<Key, Scalar> table_;
};

// Matrix of T_{n-1}^{-k_{n-1}} ... T_1^{-k_1} g^{(shift_vector)} on the
// truncation: conjugations become index relabelings on arr, the T factors
// become per-component power offsets.
TruncatedMatrix build_group_element(const CoefficientArray& arr,
                                    const std::vector<int>& shift_vector,
                                    const std::vector<int>& k_vector, int window = 0);

// g = g_minus g_zeroplus; exists iff tau != 0 (SingularBlock otherwise).
// The deviation of g_minus is X = A_{-+} A_{++}^{-1}, found from the
// finite core system; columns beyond the deviation box force zeros.
GaussPair gauss_factorize(const TruncatedMatrix& g);

HTable extract_h(const GaussPair& gp);

// Generalized minor: determinant of the submatrix of g^{(shift_vector)}
// with rows = labels of T^{k_vector} v0 and columns = vacuum labels,
// times the sign of the canonical wedge reordering.
Scalar tau_minor(const CoefficientArray& arr, const std::vector<int>& k_vector,
                 const std::vector<int>& shift_vector, int window_override = 0);

// (g_-^{[kA](sA)})^{-1} Q_mid^{-1} g_-^{[kB](sB)} computed sparsely; true
// iff no entries sit at rows (a,-i-1), columns (b,j) with i, j >= 0.
bool gauss_minus_product_nonnegative(const CoefficientArray& arr, int mid,
                                     const std::vector<int>& k_a, const std::vector<int>& s_a,
                                     const std::vector<int>& k_b, const std::vector<int>& s_b);

// Lemma "nonneg" variants: computes (g_-^A)^{-1} Q^{-1} g_-^B for the
// variant's index pattern and checks the (-,+) block vanishes.
//   1: A = [k](beta),        Q_i,     B = [k](beta + e_i),        0 <= i <= n-1
//   2: A = [k](beta),        Q_{i-1}, B = [k + e_i](beta + e_i),  1 <= i <= n-1
//   3: A = [k](beta),        Q_i,     B = [k - e_i](beta + e_{i-1}), 1 <= i <= n-1
bool check_nonnegative(const CoefficientArray& arr, int variant, int i,
                       const std::vector<int>& k_vector,
                       const std::vector<int>& shift_vector);

} // namespace taulab
