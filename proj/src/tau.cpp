#include "taulab/tau.hpp"

#include "taulab/condition.hpp"
#include "taulab/fock.hpp"
#include "taulab/laurent.hpp"
#include "taulab/matgroup.hpp"
#include "taulab/matrix.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <thread>

namespace taulab {

Scalar tau_hankel(const CoefficientArray& arr, int k, int alpha, int beta) {
    if (arr.n() != 2) throw std::invalid_argument("tau_hankel: n = 2 only");
    if (k < 0) throw std::invalid_argument("tau_hankel: k >= 0 required");
    DenseMatrix m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            m.at(i, j) = arr.get({1, 0}, -beta + j, alpha + i);
    return det(m);
}

namespace {

std::string var_name(char zw, char group, int i) {
    return std::string(1, zw) + group + std::to_string(i);
}

// (x - y) as a LaurentPoly over vars
LaurentPoly difference(const std::vector<std::string>& vars, const std::string& x,
                       const std::string& y) {
    LaurentPoly p = LaurentPoly::monomial(vars, x, 1, Scalar(1));
    return p - LaurentPoly::monomial(vars, y, 1, Scalar(1));
}

} // namespace

Scalar tau_residue_3(const CoefficientArray& arr, int k, int l, int alpha, int beta, int gamma,
                     int trunc_override) {
    if (arr.n() != 3) throw std::invalid_argument("tau_residue_3: n = 3 only");
    if (k < 0 || l < 0) throw std::invalid_argument("tau_residue_3: k, l >= 0 required");

    int trunc = trunc_override;
    if (trunc < 0) {
        int colmax = 0;
        for (const auto& [pair, entries] : arr.blocks())
            for (const auto& [ij, v] : entries) colmax = std::max(colmax, std::abs(ij.second));
        int smax = std::max({std::abs(alpha), std::abs(beta), std::abs(gamma)});
        trunc = colmax + smax + 1;
    }

    Scalar total(0);
    for (int nd = 0; nd <= std::min(k, l); ++nd) {
        const int nc = k - nd, ne = l - nd;

        std::vector<std::string> vars;
        auto add_pair_vars = [&](char g, int count) {
            for (int i = 0; i < count; ++i) {
                vars.push_back(var_name('z', g, i));
                vars.push_back(var_name('w', g, i));
            }
        };
        add_pair_vars('c', nc);
        add_pair_vars('d', nd);
        add_pair_vars('e', ne);

        LaurentPoly p = LaurentPoly::constant(vars, Scalar(1));
        auto vmonde = [&](char zw, char g, int count) {
            for (int i = 0; i < count; ++i)
                for (int j = i + 1; j < count; ++j)
                    p = p * difference(vars, var_name(zw, g, i), var_name(zw, g, j));
        };
        vmonde('w', 'c', nc);
        vmonde('z', 'c', nc);
        vmonde('w', 'd', nd);
        vmonde('z', 'd', nd);
        vmonde('w', 'e', ne);
        vmonde('z', 'e', ne);
        for (int i = 0; i < nc; ++i)
            for (int j = 0; j < nd; ++j)
                p = p * difference(vars, var_name('w', 'c', i), var_name('w', 'd', j));
        for (int i = 0; i < nd; ++i)
            for (int j = 0; j < ne; ++j)
                p = p * difference(vars, var_name('z', 'd', i), var_name('z', 'e', j));
        // 1/(z_c - w_e) expanded for |w| < |z|
        for (int i = 0; i < nc; ++i)
            for (int j = 0; j < ne; ++j) {
                LaurentPoly kernel(vars);
                const std::size_t zi = p.var_index(var_name('z', 'c', i));
                const std::size_t wj = p.var_index(var_name('w', 'e', j));
                for (int m = 0; m <= trunc; ++m) {
                    LaurentPoly::Exponents e(vars.size(), 0);
                    e[zi] = -m - 1;
                    e[wj] = m;
                    kernel.add_term(e, Scalar(1));
                }
                p = p * kernel;
            }

        std::vector<Condition> conds;
        conds.reserve(nc + nd + ne);
        for (int i = 0; i < nc; ++i)
            conds.push_back(Condition(arr, {1, 0}, -beta, alpha, /*negative_cutoff=*/false));
        for (int i = 0; i < nd; ++i)
            conds.push_back(Condition(arr, {2, 0}, -gamma, alpha, false));
        for (int i = 0; i < ne; ++i)
            conds.push_back(Condition(arr, {2, 1}, -gamma, beta, false));

        Scalar term = product_condition_eval(conds, p);
        term /= factorial(nc) * factorial(nd) * factorial(ne);
        if ((static_cast<long>(nd) * (nd + 1) / 2) % 2 == 1) term = -term;
        total += term;
    }
    return total;
}

std::string method_name(TauMethod m) {
    switch (m) {
        case TauMethod::hankel: return "hankel";
        case TauMethod::minor: return "minor";
        case TauMethod::fock: return "fock";
        case TauMethod::residue: return "residue";
    }
    return "?";
}

CrossMethodMismatch::CrossMethodMismatch(const TauKey& key_, const std::string& m1,
                                         const Scalar& v1, const std::string& m2,
                                         const Scalar& v2)
    : std::runtime_error("cross-method mismatch: " + m1 + "=" + to_string(v1) + " vs " + m2 +
                         "=" + to_string(v2)),
      key(key_) {}

void TauTable::insert(const TauKey& key, TauMethod method, const Scalar& v) {
    auto& slot = values_[key];
    for (const auto& [m, existing] : slot)
        if (existing != v)
            throw CrossMethodMismatch(key, method_name(m), existing, method_name(method), v);
    slot[method] = v;
}

Scalar TauTable::value(const TauKey& key) const {
    for (int k : key.k)
        if (k < 0) return Scalar(0);
    auto it = values_.find(key);
    if (it == values_.end()) throw std::out_of_range("TauTable: key not covered by grid");
    return it->second.begin()->second;
}

std::string TauTable::to_csv() const {
    std::ostringstream out;
    out << "k,l,alpha,beta,gamma,method,value_num,value_den\n";
    for (const auto& [key, methods] : values_)
        for (const auto& [m, v] : methods) {
            out << key.k[0] << ',' << (key.k.size() > 1 ? std::to_string(key.k[1]) : "");
            for (std::size_t i = 0; i < 3; ++i)
                out << ',' << (i < key.shifts.size() ? std::to_string(key.shifts[i]) : "");
            out << ',' << method_name(m) << ',' << v.get_num().get_str() << ','
                << v.get_den().get_str() << '\n';
        }
    return out.str();
}

std::string TauTable::to_json() const {
    std::ostringstream out;
    out << "{\n  \"n\": " << n_ << ",\n  \"values\": [\n";
    bool first = true;
    for (const auto& [key, methods] : values_)
        for (const auto& [m, v] : methods) {
            if (!first) out << ",\n";
            first = false;
            out << "    {\"k\": [";
            for (std::size_t i = 0; i < key.k.size(); ++i)
                out << (i ? "," : "") << key.k[i];
            out << "], \"shifts\": [";
            for (std::size_t i = 0; i < key.shifts.size(); ++i)
                out << (i ? "," : "") << key.shifts[i];
            out << "], \"method\": \"" << method_name(m) << "\", \"num\": \""
                << v.get_num().get_str() << "\", \"den\": \"" << v.get_den().get_str() << "\"}";
        }
    out << "\n  ]\n}\n";
    return out.str();
}

std::vector<std::vector<int>> grid_k_vectors(int n, const GridSpec& grid) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n - 1, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n - 1) {
            if (grid.k_sum_max >= 0) {
                int s = 0;
                for (int x : cur) s += x;
                if (s > grid.k_sum_max) return;
            }
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= grid.k_max; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::vector<int>> grid_shift_vectors(int n, const GridSpec& grid) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            out.push_back(cur);
            return;
        }
        for (int v = grid.shift_lo; v <= grid.shift_hi; ++v) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

TauTable build_table(const CoefficientArray& arr, const GridSpec& grid,
                     const std::set<TauMethod>& methods, int jobs) {
    const int n = arr.n();
    if (methods.count(TauMethod::hankel) && n != 2)
        throw std::invalid_argument("build_table: hankel method needs n = 2");
    if (methods.count(TauMethod::residue) && n != 3)
        throw std::invalid_argument("build_table: residue method needs n = 3");
    TauTable table(n);
    const auto kvecs = grid_k_vectors(n, grid);
    const auto svecs = grid_shift_vectors(n, grid);

    struct Cell {
        TauKey key;
        TauMethod method;
        Scalar value;
    };

    // one work item per shift vector: the fock expansion of g v0 is shared
    // across translation indices
    std::vector<std::vector<Cell>> results(svecs.size());
    auto work = [&](std::size_t si) {
        const auto& shifts = svecs[si];
        std::vector<Cell>& cells = results[si];
        int window = 0;
        for (const auto& kv : kvecs)
            window = std::max(window, auto_window(arr, kv, shifts));

        FockVector gv;
        bool have_gv = false;
        FockSpace space(n, window);
        for (const auto& kv : kvecs) {
            TauKey key{kv, shifts};
            for (TauMethod m : methods) {
                switch (m) {
                    case TauMethod::hankel:
                        cells.push_back({key, m, tau_hankel(arr, kv[0], shifts[0], shifts[1])});
                        break;
                    case TauMethod::minor:
                        cells.push_back({key, m, tau_minor(arr, kv, shifts, window)});
                        break;
                    case TauMethod::residue:
                        cells.push_back({key, m,
                                         tau_residue_3(arr, kv[0], kv[1], shifts[0], shifts[1],
                                                       shifts[2])});
                        break;
                    case TauMethod::fock: {
                        if (!have_gv) {
                            int cap = grid.k_sum_max >= 0 ? grid.k_sum_max
                                                          : grid.k_max * (n - 1);
                            gv = space.apply_group_element(space.vacuum(),
                                                           conjugate_shift(arr, shifts), cap);
                            have_gv = true;
                        }
                        cells.push_back({key, m, space.pairing(space.translation_vacuum(kv), gv)});
                        break;
                    }
                }
            }
        }
    };

    if (jobs <= 1) {
        for (std::size_t si = 0; si < svecs.size(); ++si) work(si);
    } else {
        std::vector<std::thread> pool;
        std::size_t next = 0;
        std::mutex mu;
        for (int t = 0; t < jobs; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    std::size_t si;
                    {
                        std::lock_guard<std::mutex> lock(mu);
                        if (next >= svecs.size()) return;
                        si = next++;
                    }
                    work(si);
                }
            });
        for (auto& t : pool) t.join();
    }

    for (const auto& cells : results)
        for (const auto& cell : cells) table.insert(cell.key, cell.method, cell.value);
    return table;
}

} // namespace taulab
