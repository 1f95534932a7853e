#include "taulab/matgroup.hpp"

#include <algorithm>
#include <cassert>

namespace taulab {

void TruncatedMatrix::add(const WedgeLabel& row, const WedgeLabel& col, const Scalar& v) {
    if (is_zero(v)) return;
    auto [it, inserted] = dev_.emplace(Entry{row, col}, v);
    if (!inserted) {
        it->second += v;
        if (is_zero(it->second)) dev_.erase(it);
    }
}

Scalar TruncatedMatrix::entry(const WedgeLabel& row, const WedgeLabel& col) const {
    Scalar v(0);
    if (row.component == col.component && row.power == col.power + offsets_[row.component])
        v += 1;
    auto it = dev_.find({row, col});
    if (it != dev_.end()) v += it->second;
    return v;
}

std::size_t TruncatedMatrix::dense_index(int n, int window, const WedgeLabel& l) {
    if (l.power >= 0) return static_cast<std::size_t>(l.power) * n + l.component;
    return static_cast<std::size_t>(window) * n +
           static_cast<std::size_t>(-l.power - 1) * n + l.component;
}

DenseMatrix TruncatedMatrix::to_dense() const {
    const std::size_t dim = static_cast<std::size_t>(2 * window_) * n_;
    DenseMatrix m(dim, dim);
    for (int a = 0; a < n_; ++a)
        for (int c = -window_; c < window_; ++c) {
            int r = c + offsets_[a];
            if (r >= -window_ && r < window_)
                m.at(dense_index(n_, window_, {a, r}), dense_index(n_, window_, {a, c})) = 1;
        }
    for (const auto& [rc, v] : dev_) {
        const auto& [row, col] = rc;
        if (row.power < -window_ || row.power >= window_ || col.power < -window_ ||
            col.power >= window_)
            continue;
        m.at(dense_index(n_, window_, row), dense_index(n_, window_, col)) =
            m.at(dense_index(n_, window_, row), dense_index(n_, window_, col)) + v;
    }
    return m;
}

TruncatedMatrix build_group_element(const CoefficientArray& arr,
                                    const std::vector<int>& shift_vector,
                                    const std::vector<int>& k_vector, int window) {
    const int n = arr.n();
    if (static_cast<int>(shift_vector.size()) != n || static_cast<int>(k_vector.size()) != n - 1)
        throw std::invalid_argument("build_group_element: bad shift/k vector length");
    if (window == 0) window = auto_window(arr, k_vector, shift_vector);

    // per-component power offsets of the T^{-k} factor
    std::vector<int> offsets(n, 0);
    for (int a = 0; a < n; ++a) {
        int ka = (a >= 1) ? k_vector[a - 1] : 0;
        int ka1 = (a <= n - 2) ? k_vector[a] : 0;
        offsets[a] = ka - ka1;
    }

    TruncatedMatrix m(n, window, offsets);
    CoefficientArray shifted = conjugate_shift(arr, shift_vector);
    for (const auto& [pair, entries] : shifted.blocks())
        for (const auto& [ij, v] : entries) {
            const auto [a, b] = pair;
            const auto [i, j] = ij;
            m.add({a, -i - 1 + offsets[a]}, {b, j}, v);
        }
    return m;
}

namespace {

using Dev = std::map<TruncatedMatrix::Entry, Scalar>;

void dev_add(Dev& d, const WedgeLabel& r, const WedgeLabel& c, const Scalar& v) {
    if (is_zero(v)) return;
    auto [it, inserted] = d.emplace(TruncatedMatrix::Entry{r, c}, v);
    if (!inserted) {
        it->second += v;
        if (is_zero(it->second)) d.erase(it);
    }
}

// product of two finite deviations
Dev dev_product(const Dev& x, const Dev& y) {
    // index y by row label
    std::map<WedgeLabel, std::vector<std::pair<WedgeLabel, Scalar>>> by_row;
    for (const auto& [rc, v] : y) by_row[rc.first].push_back({rc.second, v});
    Dev out;
    for (const auto& [rc, v] : x) {
        auto it = by_row.find(rc.second);
        if (it == by_row.end()) continue;
        for (const auto& [col, w] : it->second) dev_add(out, rc.first, col, v * w);
    }
    return out;
}

// D o dev, with D the shifted identity of the given offsets
Dev relabel_rows(const Dev& d, const std::vector<int>& offsets) {
    Dev out;
    for (const auto& [rc, v] : d)
        dev_add(out, {rc.first.component, rc.first.power + offsets[rc.first.component]},
                rc.second, v);
    return out;
}

// dev o D: column (b,c) of the product reads dev column (b, c + o_b)
Dev relabel_cols(const Dev& d, const std::vector<int>& offsets) {
    Dev out;
    for (const auto& [rc, v] : d)
        dev_add(out, rc.first,
                {rc.second.component, rc.second.power - offsets[rc.second.component]}, v);
    return out;
}

} // namespace

GaussPair gauss_factorize(const TruncatedMatrix& g) {
    const int n = g.n();
    const auto& o = g.offsets();
    const Dev& f = g.deviation();

    // deviation bounds
    int colhi = 0, rowlo = 0;
    for (const auto& [rc, v] : f) {
        colhi = std::max(colhi, rc.second.power);
        rowlo = std::min(rowlo, rc.first.power);
    }
    for (int a = 0; a < n; ++a) rowlo = std::min(rowlo, o[a]);

    // a pure column landing in H- leaves an unremovable (-,+) entry
    for (int b = 0; b < n; ++b)
        if (o[b] < -(colhi + 1)) throw SingularBlock();

    // unknown X columns: (b, m) with 0 <= m <= colhi + o_b; everything
    // beyond is forced to zero by a pure column
    std::vector<WedgeLabel> unknowns, eq_cols, rows_minus;
    for (int b = 0; b < n; ++b)
        for (int m = 0; m <= colhi + o[b]; ++m) unknowns.push_back({b, m});
    for (int b = 0; b < n; ++b)
        for (int c = 0; c <= colhi; ++c) eq_cols.push_back({b, c});
    for (int a = 0; a < n; ++a)
        for (int p = rowlo; p <= -1; ++p) rows_minus.push_back({a, p});

    auto mpp = [&](const WedgeLabel& row, const WedgeLabel& col) { return g.entry(row, col); };

    // Gaussian elimination on [A^T | B^T] with consistency checks:
    // X A = B, A over (unknowns x eq_cols), B over (rows_minus x eq_cols).
    const std::size_t ne = eq_cols.size(), nu = unknowns.size(), nr = rows_minus.size();
    std::vector<std::vector<Scalar>> t(ne, std::vector<Scalar>(nu + nr, Scalar(0)));
    for (std::size_t e = 0; e < ne; ++e) {
        for (std::size_t u = 0; u < nu; ++u) t[e][u] = mpp(unknowns[u], eq_cols[e]);
        for (std::size_t r = 0; r < nr; ++r) t[e][nu + r] = g.entry(rows_minus[r], eq_cols[e]);
    }
    std::vector<std::size_t> pivot_row(nu);
    std::size_t rank = 0;
    for (std::size_t u = 0; u < nu; ++u) {
        std::size_t p = rank;
        while (p < ne && is_zero(t[p][u])) ++p;
        if (p == ne) throw SingularBlock();
        std::swap(t[rank], t[p]);
        Scalar inv = 1 / t[rank][u];
        for (std::size_t j = u; j < nu + nr; ++j) t[rank][j] *= inv;
        for (std::size_t e = 0; e < ne; ++e) {
            if (e == rank || is_zero(t[e][u])) continue;
            Scalar fac = t[e][u];
            for (std::size_t j = u; j < nu + nr; ++j) t[e][j] -= fac * t[rank][j];
        }
        pivot_row[u] = rank;
        ++rank;
    }
    for (std::size_t e = rank; e < ne; ++e)
        for (std::size_t r = 0; r < nr; ++r)
            if (!is_zero(t[e][nu + r])) throw SingularBlock();

    Dev x;
    for (std::size_t u = 0; u < nu; ++u)
        for (std::size_t r = 0; r < nr; ++r)
            dev_add(x, rows_minus[r], unknowns[u], t[pivot_row[u]][nu + r]);

    TruncatedMatrix g_minus(n, g.window());
    for (const auto& [rc, v] : x) g_minus.add(rc.first, rc.second, v);

    // g_{0+} = (I - X) g: deviation f - X o D - X o f
    TruncatedMatrix g_zeroplus(n, g.window(), o);
    Dev dev0 = f;
    for (const auto& [rc, v] : relabel_cols(x, o)) dev_add(dev0, rc.first, rc.second, -v);
    for (const auto& [rc, v] : dev_product(x, f)) dev_add(dev0, rc.first, rc.second, -v);
    for (const auto& [rc, v] : dev0) {
        // the (-,+) block must have cancelled exactly
        if (rc.first.power < 0 && rc.second.power >= 0) {
            bool ident = rc.first.component == rc.second.component &&
                         rc.first.power == rc.second.power + o[rc.first.component];
            Scalar total = v + (ident ? Scalar(1) : Scalar(0));
            if (!is_zero(total)) throw SingularBlock();
        }
        g_zeroplus.add(rc.first, rc.second, v);
    }
    return {g_minus, g_zeroplus};
}

HTable extract_h(const GaussPair& gp) {
    HTable h;
    for (const auto& [rc, v] : gp.g_minus.deviation()) {
        const auto& [row, col] = rc;
        assert(row.power < 0 && col.power >= 0);
        h.set(row.component, col.component, -row.power - 1, col.power, v);
    }
    return h;
}

Scalar tau_minor(const CoefficientArray& arr, const std::vector<int>& k_vector,
                 const std::vector<int>& shift_vector, int window_override) {
    const int n = arr.n();
    const int window = window_override > 0
                           ? window_override
                           : auto_window(arr, k_vector, shift_vector);
    FockSpace space(n, window);
    FockVector tv = space.translation_vacuum(k_vector);
    assert(tv.size() == 1);
    const auto& [wedge, sign] = *tv.begin();

    std::vector<WedgeLabel> rows = space.labels(wedge);
    std::vector<WedgeLabel> cols = space.labels(ElementaryWedge{});
    CoefficientArray shifted = conjugate_shift(arr, shift_vector);

    const std::size_t dim = rows.size();
    if (cols.size() != dim) return Scalar(0); // unequal charge, cannot happen for valid k
    std::map<WedgeLabel, std::size_t> col_index;
    for (std::size_t j = 0; j < dim; ++j) col_index[cols[j]] = j;

    DenseMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        auto it = col_index.find(rows[i]);
        if (it != col_index.end()) m.at(i, it->second) = 1;
    }
    for (const auto& [pair, entries] : shifted.blocks())
        for (const auto& [ij, v] : entries) {
            WedgeLabel row{pair.first, -ij.first - 1};
            WedgeLabel col{pair.second, ij.second};
            auto rit = std::lower_bound(rows.begin(), rows.end(), row);
            auto cit = col_index.find(col);
            if (rit == rows.end() || *rit != row || cit == col_index.end()) continue;
            std::size_t i = rit - rows.begin();
            m.at(i, cit->second) = m.at(i, cit->second) + v;
        }
    return sign * det(m);
}

bool gauss_minus_product_nonnegative(const CoefficientArray& arr, int mid,
                                     const std::vector<int>& k_a, const std::vector<int>& s_a,
                                     const std::vector<int>& k_b, const std::vector<int>& s_b) {
    const int n = arr.n();
    GaussPair a = gauss_factorize(build_group_element(arr, s_a, k_a));
    GaussPair b = gauss_factorize(build_group_element(arr, s_b, k_b));
    const Dev& xa = a.g_minus.deviation();
    const Dev& xb = b.g_minus.deviation();

    // P = (I - X_A) Q_mid^{-1} (I + X_B); Q_mid^{-1} raises component mid by one
    std::vector<int> q(n, 0);
    q[mid] = 1;

    Dev p = relabel_rows(xb, q); // Q^{-1} X_B
    for (const auto& [rc, v] : relabel_cols(xa, q)) dev_add(p, rc.first, rc.second, -v); // -X_A Q^{-1}
    Dev qxb = relabel_rows(xb, q);
    for (const auto& [rc, v] : dev_product(xa, qxb)) dev_add(p, rc.first, rc.second, -v);

    for (const auto& [rc, v] : p)
        if (rc.first.power < 0 && rc.second.power >= 0) return false;
    return true;
}

bool check_nonnegative(const CoefficientArray& arr, int variant, int i,
                       const std::vector<int>& k_vector,
                       const std::vector<int>& shift_vector) {
    const int n = arr.n();
    std::vector<int> kb = k_vector, sb = shift_vector;
    int mid; // middle factor Q_mid^{-1}
    switch (variant) {
        case 1:
            if (i < 0 || i > n - 1) throw std::invalid_argument("variant 1: 0 <= i <= n-1");
            sb[i] += 1;
            mid = i;
            break;
        case 2:
            if (i < 1 || i > n - 1) throw std::invalid_argument("variant 2: 1 <= i <= n-1");
            kb[i - 1] += 1;
            sb[i] += 1;
            mid = i - 1;
            break;
        case 3:
            if (i < 1 || i > n - 1) throw std::invalid_argument("variant 3: 1 <= i <= n-1");
            kb[i - 1] -= 1;
            sb[i - 1] += 1;
            mid = i;
            break;
        default:
            throw std::invalid_argument("check_nonnegative: variant must be 1, 2 or 3");
    }
    return gauss_minus_product_nonnegative(arr, mid, k_vector, shift_vector, kb, sb);
}

} // namespace taulab
