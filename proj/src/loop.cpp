#include "taulab/loop.hpp"

#include "taulab/matgroup.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace taulab {

LaurentMatrix LaurentMatrix::identity(int n) {
    LaurentMatrix m(n);
    for (int a = 0; a < n; ++a) m.add(0, a, a, Scalar(1));
    return m;
}

LaurentMatrix LaurentMatrix::diag_powers(int n, const std::vector<int>& d) {
    LaurentMatrix m(n);
    for (int a = 0; a < n; ++a) m.add(d[a], a, a, Scalar(1));
    return m;
}

Scalar LaurentMatrix::get(int deg, int a, int b) const {
    auto it = coeffs_.find(deg);
    return it == coeffs_.end() ? Scalar(0) : it->second.at(a, b);
}

void LaurentMatrix::add(int deg, int a, int b, const Scalar& v) {
    if (is_zero(v)) return;
    auto it = coeffs_.find(deg);
    if (it == coeffs_.end()) it = coeffs_.emplace(deg, DenseMatrix(n_, n_)).first;
    it->second.at(a, b) += v;
    prune(deg);
}

void LaurentMatrix::prune(int deg) {
    auto it = coeffs_.find(deg);
    if (it == coeffs_.end()) return;
    for (std::size_t a = 0; a < static_cast<std::size_t>(n_); ++a)
        for (std::size_t b = 0; b < static_cast<std::size_t>(n_); ++b)
            if (!is_zero(it->second.at(a, b))) return;
    coeffs_.erase(it);
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& other) const {
    LaurentMatrix out(n_);
    for (const auto& [da, ma] : coeffs_)
        for (const auto& [db, mb] : other.coeffs_) {
            DenseMatrix prod = ma * mb;
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b) out.add(da + db, a, b, prod.at(a, b));
        }
    return out;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& other) const {
    LaurentMatrix out = *this;
    for (const auto& [d, m] : other.coeffs_)
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) out.add(d, a, b, m.at(a, b));
    return out;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& other) const {
    LaurentMatrix out = *this;
    for (const auto& [d, m] : other.coeffs_)
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b) out.add(d, a, b, -m.at(a, b));
    return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& other) const {
    return n_ == other.n_ && coeffs_ == other.coeffs_;
}

int LaurentMatrix::min_degree() const {
    return coeffs_.empty() ? 0 : coeffs_.begin()->first;
}

int LaurentMatrix::max_degree() const {
    return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

namespace {

// scalar Laurent polynomial as degree -> coefficient
using ScalarLaurent = std::map<int, Scalar>;

void sl_add(ScalarLaurent& p, int deg, const Scalar& v) {
    if (is_zero(v)) return;
    auto [it, inserted] = p.emplace(deg, v);
    if (!inserted) {
        it->second += v;
        if (is_zero(it->second)) p.erase(it);
    }
}

ScalarLaurent sl_mul(const ScalarLaurent& x, const ScalarLaurent& y) {
    ScalarLaurent out;
    for (const auto& [dx, vx] : x)
        for (const auto& [dy, vy] : y) sl_add(out, dx + dy, vx * vy);
    return out;
}

ScalarLaurent lm_entry(const LaurentMatrix& m, int a, int b) {
    ScalarLaurent out;
    for (const auto& [d, blk] : m.coeffs()) sl_add(out, d, blk.at(a, b));
    return out;
}

// determinant of the matrix of scalar Laurent polynomials, cofactor
// expansion (n <= 4 here)
ScalarLaurent lm_det(const LaurentMatrix& m, std::vector<int> rows, std::vector<int> cols) {
    if (rows.empty()) return {{0, Scalar(1)}};
    ScalarLaurent out;
    const int r0 = rows[0];
    std::vector<int> rest(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        ScalarLaurent e = lm_entry(m, r0, cols[j]);
        if (e.empty()) continue;
        std::vector<int> sub;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != j) sub.push_back(cols[t]);
        ScalarLaurent minor = lm_det(m, rest, sub);
        ScalarLaurent prod = sl_mul(e, minor);
        for (auto& [d, v] : prod) sl_add(out, d, j % 2 == 0 ? v : -v);
    }
    return out;
}

} // namespace

LaurentMatrix LaurentMatrix::inverse() const {
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    ScalarLaurent d = lm_det(*this, all, all);
    if (d.size() != 1) throw std::invalid_argument("LaurentMatrix::inverse: det not a unit monomial");
    const int ddeg = d.begin()->first;
    const Scalar dval = d.begin()->second;

    LaurentMatrix adj(n_);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            std::vector<int> rows, cols;
            for (int i = 0; i < n_; ++i) {
                if (i != b) rows.push_back(i);
                if (i != a) cols.push_back(i);
            }
            ScalarLaurent cof = lm_det(*this, rows, cols);
            const int sgn = parity_sign(a + b);
            for (const auto& [deg, v] : cof) adj.add(deg - ddeg, a, b, sgn * v / dval);
        }
    return adj;
}

CoefficientArray lift(const QCoefficients& q, int radius) {
    CoefficientArray arr(q.n);
    for (const auto& [pair, gs] : q.gamma)
        for (const auto& [m, v] : gs)
            for (int i = -radius; i <= radius; ++i) {
                int j = m - i;
                if (j >= -radius && j <= radius) arr.set(pair, i, j, v);
            }
    return arr;
}

QCoefficients restrict_array(const CoefficientArray& arr) {
    QCoefficients q;
    q.n = arr.n();
    for (const auto& [pair, entries] : arr.blocks()) {
        // group by anti-diagonal and demand a single common value
        std::map<int, Scalar> diag;
        for (const auto& [ij, v] : entries) {
            int m = ij.first + ij.second;
            auto [it, inserted] = diag.emplace(m, v);
            if (!inserted && it->second != v)
                throw std::invalid_argument("restrict: block not anti-diagonal-constant");
        }
        q.gamma[pair] = std::move(diag);
    }
    return q;
}

std::string loop_to_json(const QCoefficients& q) {
    nlohmann::json j;
    j["n"] = q.n;
    j["loop"] = true;
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& [pair, gs] : q.gamma) {
        nlohmann::json b;
        b["pair"] = std::to_string(pair.first) + std::to_string(pair.second);
        nlohmann::json es = nlohmann::json::array();
        for (const auto& [m, v] : gs) {
            nlohmann::json e;
            e["m"] = m;
            e["num"] = std::stoll(v.get_num().get_str());
            e["den"] = std::stoll(v.get_den().get_str());
            es.push_back(e);
        }
        b["entries"] = es;
        blocks.push_back(b);
    }
    j["blocks"] = blocks;
    return j.dump(2) + "\n";
}

QCoefficients loop_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.value("loop", false)) throw SchemaError("not a loop coefficient file");
    try {
        QCoefficients q;
        q.n = j.at("n").get<int>();
        for (const auto& b : j.at("blocks")) {
            const std::string s = b.at("pair").get<std::string>();
            BlockPair pair{s.at(0) - '0', s.at(1) - '0'};
            for (const auto& e : b.at("entries")) {
                Scalar v = rat(e.at("num").get<long>(), e.at("den").get<long>());
                if (!is_zero(v)) q.gamma[pair][e.at("m").get<int>()] = v;
            }
        }
        return q;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("loop file schema: ") + e.what());
    }
}

LaurentMatrix loop_element(const QCoefficients& q, const std::vector<int>& k_vector,
                           const std::vector<int>& beta) {
    const int n = q.n;
    if (static_cast<int>(beta.size()) != n || static_cast<int>(k_vector.size()) != n - 1)
        throw std::invalid_argument("loop_element: bad beta/k vector length");

    LaurentMatrix g = LaurentMatrix::identity(n);
    for (const auto& [pair, gs] : q.gamma) {
        const auto [a, b] = pair;
        const int shift = beta[b] - beta[a];
        for (const auto& [m, v] : gs) {
            // gamma'_{m'} = gamma_{m' + shift} at degree -m'-1
            int mp = m - shift;
            g.add(-mp - 1, a, b, v);
        }
    }
    std::vector<int> o(n, 0);
    for (int a = 0; a < n; ++a) {
        int ka = (a >= 1) ? k_vector[a - 1] : 0;
        int ka1 = (a <= n - 2) ? k_vector[a] : 0;
        o[a] = ka - ka1;
    }
    return LaurentMatrix::diag_powers(n, o) * g;
}

BirkhoffPair birkhoff_factorize(const LaurentMatrix& m) {
    const int n = m.n();
    const int qdeg = std::max(m.max_degree(), 0);
    const int fmax = (n - 1) * qdeg; // adj(g_plus) degree bound, det m = 1

    // unknowns C_0..C_fmax with [m C]_f = delta_{f,0} I for all f >= 0
    const int emax = fmax + qdeg;
    const std::size_t nunk = static_cast<std::size_t>(n) * n * (fmax + 1);
    const std::size_t neq = static_cast<std::size_t>(n) * n * (emax + 1);

    auto unk_index = [&](int e, int r, int c) {
        return (static_cast<std::size_t>(e) * n + r) * n + c;
    };

    std::vector<std::vector<Scalar>> t(neq, std::vector<Scalar>(nunk + 1, Scalar(0)));
    std::size_t row = 0;
    for (int f = 0; f <= emax; ++f)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b, ++row) {
                // sum_e (m_{f-e} C_e)_{ab} = delta
                for (int e = 0; e <= fmax; ++e) {
                    for (int s = 0; s < n; ++s) {
                        Scalar coef = m.get(f - e, a, s);
                        if (!is_zero(coef)) t[row][unk_index(e, s, b)] = coef;
                    }
                }
                t[row][nunk] = (f == 0 && a == b) ? Scalar(1) : Scalar(0);
            }

    // elimination with consistency check
    std::vector<std::size_t> pivot_of(nunk);
    std::size_t rank = 0;
    for (std::size_t u = 0; u < nunk; ++u) {
        std::size_t p = rank;
        while (p < neq && is_zero(t[p][u])) ++p;
        if (p == neq) throw NoBirkhoff();
        std::swap(t[rank], t[p]);
        Scalar inv = 1 / t[rank][u];
        for (std::size_t j = u; j <= nunk; ++j) t[rank][j] *= inv;
        for (std::size_t e = 0; e < neq; ++e) {
            if (e == rank || is_zero(t[e][u])) continue;
            Scalar fct = t[e][u];
            for (std::size_t j = u; j <= nunk; ++j) t[e][j] -= fct * t[rank][j];
        }
        pivot_of[u] = rank++;
    }
    for (std::size_t e = rank; e < neq; ++e)
        if (!is_zero(t[e][nunk])) throw NoBirkhoff();

    LaurentMatrix c(n);
    for (int e = 0; e <= fmax; ++e)
        for (int r = 0; r < n; ++r)
            for (int col = 0; col < n; ++col)
                c.add(e, r, col, t[pivot_of[unk_index(e, r, col)]][nunk]);

    LaurentMatrix g_minus = m * c; // I + strictly negative part by construction
    LaurentMatrix g_plus = c.inverse();
    return {g_minus, g_plus, g_plus * m.inverse()};
}

int loop_extent(const QCoefficients& q) {
    int extent = 1;
    for (const auto& [pair, gs] : q.gamma)
        for (const auto& [m, v] : gs) extent = std::max(extent, std::abs(m) + 1);
    return extent;
}

Scalar loop_tau_minor(const QCoefficients& q, const std::vector<int>& k_vector,
                      const std::vector<int>& shift_vector) {
    int kmax = 0;
    for (int k : k_vector) kmax = std::max(kmax, std::abs(k));
    int smax = 0;
    for (int b : shift_vector) smax = std::max(smax, std::abs(b));
    const int window = loop_extent(q) + kmax + smax + 2;
    // the lift box must cover the window, plus the conjugation shifts
    CoefficientArray arr = lift(q, window + smax + 1);
    return tau_minor(arr, k_vector, shift_vector, window);
}

LaurentMatrix birkhoff_minus_embedded(const QCoefficients& q, const std::vector<int>& k_vector,
                                      const std::vector<int>& beta, int extra_margin) {
    int kmax = 0;
    for (int k : k_vector) kmax = std::max(kmax, std::abs(k));
    int smax = 0;
    for (int b : beta) smax = std::max(smax, std::abs(b));
    const int window = loop_extent(q) + kmax + smax + 3 + extra_margin;

    CoefficientArray arr = lift(q, window + smax + 1);
    TruncatedMatrix g = build_group_element(arr, beta, k_vector, window);
    LaurentMatrix out = LaurentMatrix::identity(q.n);
    try {
        GaussPair gp = gauss_factorize(g);
        // read the z^{-d} coefficients off the power-zero columns of X
        for (const auto& [rc, v] : gp.g_minus.deviation()) {
            const auto& [row, col] = rc;
            if (col.power == 0) out.add(row.power, row.component, col.component, v);
        }
    } catch (const SingularBlock&) {
        throw NoBirkhoff();
    }
    return out;
}

Scalar loop_tau_hankel(const QCoefficients& q, int k, int alpha) {
    DenseMatrix m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m.at(i, j) = q.get({1, 0}, alpha + i + j);
    return det(m);
}

namespace {

std::string point_desc(int k, int alpha) {
    return "k=" + std::to_string(k) + ",alpha=" + std::to_string(alpha);
}

} // namespace

RelationReport check_q_identities(const QCoefficients& q, const GridSpec& grid) {
    RelationReport report;
    report.system = q.n == 2 ? "2Q" : "3Q";

    if (q.n == 2) {
        // tau and factorization caches over the grid plus halo
        std::map<std::pair<int, int>, Scalar> tau;
        for (int k = -1; k <= grid.k_max + 1; ++k)
            for (int a = grid.shift_lo - 1; a <= grid.shift_hi + 1; ++a)
                tau[{k, a}] = k < 0 ? Scalar(0) : loop_tau_hankel(q, k, a);

        std::map<std::pair<int, int>, BirkhoffPair> fact;
        auto factor_at = [&](int k, int a) -> const BirkhoffPair* {
            auto it = fact.find({k, a});
            if (it != fact.end()) return &it->second;
            if (is_zero(tau[{k, a}])) return nullptr;
            auto bp = birkhoff_factorize(loop_element(q, {k}, {a, 0}));
            return &fact.emplace(std::pair<int, int>{k, a}, std::move(bp)).first->second;
        };

        for (int k = 0; k <= grid.k_max; ++k)
            for (int a = grid.shift_lo; a <= grid.shift_hi; ++a) {
                const std::string pt = point_desc(k, a);
                // 2Q always evaluable
                Scalar r2q = tau[{k, a}] * tau[{k, a}] - tau[{k, a - 1}] * tau[{k, a + 1}] +
                             tau[{k + 1, a - 1}] * tau[{k - 1, a + 1}];
                report.residuals.push_back({pt, 0, r2q});

                const BirkhoffPair* f0 = factor_at(k, a);
                const BirkhoffPair* f1 = factor_at(k, a + 1);
                if (!f0 || !f1) {
                    report.skipped.push_back({pt, "tau = 0, no Birkhoff factorization"});
                    continue;
                }
                // V_k^(a) = g_-^{[k](a) -1} Q_0^{-1} g_-^{[k](a+1)} nonneg
                LaurentMatrix q0inv(2);
                q0inv.add(1, 0, 0, Scalar(1));
                q0inv.add(0, 1, 1, Scalar(1));
                LaurentMatrix v = f0->g_minus_inv * q0inv * f1->g_minus;
                report.residuals.push_back({pt, 1, v.nonnegative_in_z() ? Scalar(0) : Scalar(1)});

                // h00 = -h11
                Scalar h00 = f0->g_minus.get(-1, 0, 0);
                Scalar h11 = f0->g_minus.get(-1, 1, 1);
                report.residuals.push_back({pt, 2, h00 + h11});

                // eq1: (-h11^[k](a) + h11^[k](a+1)) tau_k^a tau_k^{a+1}
                //      = tau_{k+1}^a tau_{k-1}^{a+1}
                Scalar h11b = f1->g_minus.get(-1, 1, 1);
                report.residuals.push_back(
                    {pt, 3,
                     (-h11 + h11b) * tau[{k, a}] * tau[{k, a + 1}] -
                         tau[{k + 1, a}] * tau[{k - 1, a + 1}]});

                // h10, h01 ratios
                report.residuals.push_back(
                    {pt, 4, f0->g_minus.get(-1, 1, 0) * tau[{k, a}] - tau[{k + 1, a}]});
                report.residuals.push_back(
                    {pt, 5, f1->g_minus.get(-1, 0, 1) * tau[{k, a + 1}] - tau[{k - 1, a + 1}]});

                // W_k^(a) = g_-^{[k](a) -1} Q_1^{-1} g_-^{[k-1](a+1)} nonneg, and eq2
                if (k >= 1) {
                    const BirkhoffPair* fw = factor_at(k - 1, a + 1);
                    if (fw) {
                        LaurentMatrix q1inv(2);
                        q1inv.add(0, 0, 0, Scalar(1));
                        q1inv.add(1, 1, 1, Scalar(1));
                        LaurentMatrix w = f0->g_minus_inv * q1inv * fw->g_minus;
                        report.residuals.push_back(
                            {pt, 6, w.nonnegative_in_z() ? Scalar(0) : Scalar(1)});
                        Scalar h11w = fw->g_minus.get(-1, 1, 1);
                        report.residuals.push_back(
                            {pt, 7,
                             (h11 - h11w) * tau[{k, a}] * tau[{k - 1, a + 1}] -
                                 tau[{k - 1, a}] * tau[{k, a + 1}]});
                    } else {
                        report.skipped.push_back({pt, "tau_{k-1}^{(a+1)} = 0, W skipped"});
                    }
                }
            }
        return report;
    }

    if (q.n != 3) throw std::invalid_argument("check_q_identities: n = 2 or 3");

    // n = 3: the four 3Q equations under the lift. The loop parameters
    // (alpha, beta) enter as the shift vector (alpha-beta, 0, -beta),
    // i.e. block shifts (c, d, e) = (alpha-beta, alpha, beta); this is
    // the unique linear map under which all four equations close.
    auto tau3 = [&](int k, int l, int a, int b) -> Scalar {
        if (k < 0 || l < 0) return Scalar(0);
        return loop_tau_minor(q, {k, l}, {a - b, 0, -b});
    };
    std::map<std::array<int, 4>, Scalar> cache;
    auto tau = [&](int k, int l, int a, int b) -> Scalar {
        auto key = std::array<int, 4>{k, l, a, b};
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Scalar v = tau3(k, l, a, b);
        cache.emplace(key, v);
        return v;
    };

    for (int k = 0; k <= grid.k_max; ++k)
        for (int l = 0; l <= grid.k_max; ++l)
            for (int a = grid.shift_lo; a <= grid.shift_hi; ++a)
                for (int b = grid.shift_lo; b <= grid.shift_hi; ++b) {
                    std::string pt = "k=" + std::to_string(k) + ",l=" + std::to_string(l) +
                                     ",alpha=" + std::to_string(a) + ",beta=" + std::to_string(b);
                    Scalar r1 = tau(k - 1, l - 1, a + 1, b) * tau(k + 1, l, a, b) +
                                tau(k, l - 1, a, b) * tau(k, l, a + 1, b) -
                                tau(k, l, a, b) * tau(k, l - 1, a + 1, b);
                    Scalar r2 = tau(k - 1, l, a, b) * tau(k, l + 1, a, b + 1) +
                                tau(k - 1, l + 1, a, b) * tau(k, l, a, b + 1) -
                                tau(k - 1, l, a, b + 1) * tau(k, l + 1, a, b);
                    Scalar r3 = tau(k, l, a + 1, b) * tau(k, l, a + 1, b) -
                                tau(k, l, a, b) * tau(k, l, a + 2, b) -
                                tau(k + 1, l + 1, a, b) * tau(k - 1, l - 1, a + 2, b) +
                                tau(k + 1, l, a, b) * tau(k - 1, l, a + 2, b);
                    Scalar r4 = tau(k, l, a, b + 1) * tau(k, l, a, b + 1) -
                                tau(k, l, a, b) * tau(k, l, a, b + 2) +
                                tau(k, l - 1, a, b + 2) * tau(k, l + 1, a, b) +
                                tau(k + 1, l, a, b + 2) * tau(k - 1, l, a, b);
                    report.residuals.push_back({pt, 0, r1});
                    report.residuals.push_back({pt, 1, r2});
                    report.residuals.push_back({pt, 2, r3});
                    report.residuals.push_back({pt, 3, r4});
                }
    return report;
}

} // namespace taulab
