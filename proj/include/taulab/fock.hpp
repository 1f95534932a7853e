#pragma once

#include "taulab/coeff_array.hpp"
#include "taulab/rational.hpp"

#include <compare>
#include <map>
#include <vector>

namespace taulab {

// Basis vector e_a z^k. Canonical order sorts by (power, component).
struct WedgeLabel {
    int component;
    int power;

    friend std::strong_ordering operator<=>(const WedgeLabel& x, const WedgeLabel& y) {
        if (auto c = x.power <=> y.power; c != 0) return c;
        return x.component <=> y.component;
    }
    friend bool operator==(const WedgeLabel&, const WedgeLabel&) = default;
};

// Semi-infinite wedge stored as its finite difference from the vacuum
// (the wedge of all e_a z^k, k >= 0): labels added below the threshold
// and labels removed above it, both kept sorted.
struct ElementaryWedge {
    std::vector<WedgeLabel> added;   // powers < 0
    std::vector<WedgeLabel> removed; // powers >= 0

    friend auto operator<=>(const ElementaryWedge&, const ElementaryWedge&) = default;
};

using FockVector = std::map<ElementaryWedge, Scalar>;

struct WindowOverflow : std::runtime_error {
    WindowOverflow() : std::runtime_error("label outside the active window") {}
};

// Window-truncated n-component wedge engine. All powers live in
// [-window, window); every operation is exact inside the window and
// certified by window-doubling invariance.
class FockSpace {
  public:
    FockSpace(int n, int window);

    int n() const { return n_; }
    int window() const { return window_; }

    FockVector vacuum() const;

    // e_a z^k wedge  /  i(e_a z^k)
    FockVector create(const FockVector& v, int a, int k) const;
    FockVector annihilate(const FockVector& v, int a, int k) const;

    // Fermionic translation operator Q_a^exponent.
    FockVector q_op(const FockVector& v, int a, int exponent) const;

    // T_{n-1}^{k_{n-1}} ... T_1^{k_1} v0 via Q-products with the
    // (-1)^{m(m-1)/2} rearrangement factor.
    FockVector translation_vacuum(const std::vector<int>& k_vector) const;

    // Bilinear form: elementary wedges orthonormal.
    Scalar pairing(const FockVector& u, const FockVector& v) const;

    // g = I + sum of blocks acting factor-wise on each wedge.
    // max_replacements caps the number of modified factors (-1: no cap).
    FockVector apply_group_element(const FockVector& v, const CoefficientArray& arr,
                                   int max_replacements = -1) const;

    // Fermion fields evaluated at a rational point, materialized inside
    // the window.
    FockVector psi_plus_at(const FockVector& v, int a, const Scalar& z) const;
    FockVector psi_minus_at(const FockVector& v, int a, const Scalar& w) const;

    std::vector<int> multidegree(const ElementaryWedge& w) const;

    // All labels of the wedge inside the window, canonically sorted.
    std::vector<WedgeLabel> labels(const ElementaryWedge& w) const;

  private:
    int n_, window_;

    bool present(const ElementaryWedge& w, const WedgeLabel& l) const;
    long count_below(const ElementaryWedge& w, const WedgeLabel& l) const;
    void check_window(int k) const;
};

// Window size for exact evaluation: support + shifts + translation
// offsets + 2. Doubling it must not change any matrix element.
int auto_window(const CoefficientArray& arr, const std::vector<int>& k_vector,
                const std::vector<int>& shift_vector);

// tau_{k}(g^{(shift)}) = <T^k v0, g^(shift) v0> computed entirely in the
// wedge engine. shift_vector has length n, k_vector length n-1.
Scalar tau_fock(const CoefficientArray& arr, const std::vector<int>& k_vector,
                const std::vector<int>& shift_vector, int window_override = 0);

// <T^k v0, prod_i E_10(z_i, w_i) v0> for n = 2 at rational points.
Scalar correlation_fock(int k, const std::vector<Scalar>& zs, const std::vector<Scalar>& ws);

} // namespace taulab
