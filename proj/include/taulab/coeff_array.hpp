#pragma once

#include "taulab/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace taulab {

// Ordered block pair (a,b) with a > b: strictly lower block-triangular.
using BlockPair = std::pair<int, int>;
// Integer index pair (i,j) into a block.
using Index2 = std::pair<int, int>;

// Finite-support moment arrays indexed over Z^2 per block pair. Entries
// outside the stored support are zero; zero values are never stored.
class CoefficientArray {
  public:
    CoefficientArray() = default;
    explicit CoefficientArray(int n) : n_(n) {}

    int n() const { return n_; }
    const std::map<BlockPair, std::map<Index2, Scalar>>& blocks() const { return blocks_; }
    bool has_block(const BlockPair& p) const { return blocks_.count(p) != 0; }

    void set(const BlockPair& block, int i, int j, const Scalar& v);
    // Zero when absent; Z^2 indexing (negative indices allowed).
    Scalar get(const BlockPair& block, int i, int j) const;

    // Largest absolute row/column index over all stored entries.
    int support_radius() const;

    bool operator==(const CoefficientArray& other) const {
        return n_ == other.n_ && blocks_ == other.blocks_;
    }

  private:
    int n_ = 0;
    std::map<BlockPair, std::map<Index2, Scalar>> blocks_;
};

// Index translation b'_{k,l} = b_{k+alpha, l+beta} on one block; other
// blocks unchanged. The named block must be present.
CoefficientArray shift(const CoefficientArray& arr, const BlockPair& block, int alpha, int beta);

// Conjugated group element: block (a,b) entry (i,j) reads the original
// entry (i - beta_a, j + beta_b).
CoefficientArray conjugate_shift(const CoefficientArray& arr, const std::vector<int>& beta);

// JSON coefficient file format. `loop` files carry single-index entries.
std::string coeff_to_json(const CoefficientArray& arr);
CoefficientArray coeff_from_json(const std::string& text);

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace taulab
