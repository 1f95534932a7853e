#pragma once

#include "taulab/coeff_array.hpp"
#include "taulab/rational.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace taulab {

// Shifted Hankel determinant (n = 2): det of the k x k matrix with entry
// (i,j) = c_{-beta+j, alpha+i}; k = 0 gives 1.
Scalar tau_hankel(const CoefficientArray& arr, int k, int alpha, int beta);

// Three-component residue formula: sum over n_c + n_d = k, n_d + n_e = l
// of the signed, factorial-normalized product-condition evaluation of the
// kernel polynomial. trunc_override pins the geometric expansion order of
// 1/(z_c - w_e) (negative: auto).
Scalar tau_residue_3(const CoefficientArray& arr, int k, int l, int alpha, int beta, int gamma,
                     int trunc_override = -1);

enum class TauMethod { hankel, minor, fock, residue };
std::string method_name(TauMethod m);

struct TauKey {
    std::vector<int> k;      // length n-1
    std::vector<int> shifts; // length n
    friend auto operator<=>(const TauKey&, const TauKey&) = default;
};

struct CrossMethodMismatch : std::runtime_error {
    CrossMethodMismatch(const TauKey& key, const std::string& m1, const Scalar& v1,
                        const std::string& m2, const Scalar& v2);
    TauKey key;
};

// Values per translation/shift index with provenance; all methods must
// agree on insert.
class TauTable {
  public:
    explicit TauTable(int n) : n_(n) {}

    int n() const { return n_; }
    void insert(const TauKey& key, TauMethod method, const Scalar& v);
    // any stored value; negative translation indices give 0
    Scalar value(const TauKey& key) const;
    bool contains(const TauKey& key) const { return values_.count(key) != 0; }
    const std::map<TauKey, std::map<TauMethod, Scalar>>& entries() const { return values_; }

    std::string to_csv() const;
    std::string to_json() const;

  private:
    int n_;
    std::map<TauKey, std::map<TauMethod, Scalar>> values_;
};

struct GridSpec {
    int k_max = 3;
    int k_sum_max = -1; // cap on sum of translation indices; -1: none
    int shift_lo = -1;
    int shift_hi = 1;
};

std::vector<std::vector<int>> grid_k_vectors(int n, const GridSpec& grid);
std::vector<std::vector<int>> grid_shift_vectors(int n, const GridSpec& grid);

// Fills the table with each requested method; insertion asserts
// cross-method agreement (CrossMethodMismatch carries the first
// disagreeing key).
TauTable build_table(const CoefficientArray& arr, const GridSpec& grid,
                     const std::set<TauMethod>& methods, int jobs = 1);

} // namespace taulab
