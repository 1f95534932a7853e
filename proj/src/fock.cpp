#include "taulab/fock.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace taulab {

namespace {

void add_to(FockVector& v, const ElementaryWedge& w, const Scalar& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = v.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) v.erase(it);
    }
}

bool contains(const std::vector<WedgeLabel>& sorted, const WedgeLabel& l) {
    return std::binary_search(sorted.begin(), sorted.end(), l);
}

// count of elements strictly below l
long below(const std::vector<WedgeLabel>& sorted, const WedgeLabel& l) {
    return std::lower_bound(sorted.begin(), sorted.end(), l) - sorted.begin();
}

void toggle(std::vector<WedgeLabel>& sorted, const WedgeLabel& l) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), l);
    if (it != sorted.end() && *it == l)
        sorted.erase(it);
    else
        sorted.insert(it, l);
}

} // namespace

FockSpace::FockSpace(int n, int window) : n_(n), window_(window) {
    if (n < 1 || window < 1) throw std::invalid_argument("FockSpace: need n >= 1, window >= 1");
}

void FockSpace::check_window(int k) const {
    if (k < -window_ || k >= window_) throw WindowOverflow();
}

FockVector FockSpace::vacuum() const {
    FockVector v;
    v.emplace(ElementaryWedge{}, Scalar(1));
    return v;
}

bool FockSpace::present(const ElementaryWedge& w, const WedgeLabel& l) const {
    if (l.power >= 0) return !contains(w.removed, l);
    return contains(w.added, l);
}

long FockSpace::count_below(const ElementaryWedge& w, const WedgeLabel& l) const {
    // vacuum labels strictly below l, then correct for the difference sets
    long vac = l.power <= 0 ? 0 : static_cast<long>(n_) * l.power;
    if (l.power >= 0) vac += l.component;
    return vac - below(w.removed, l) + below(w.added, l);
}

FockVector FockSpace::create(const FockVector& v, int a, int k) const {
    check_window(k);
    const WedgeLabel l{a, k};
    FockVector out;
    for (const auto& [w, c] : v) {
        if (present(w, l)) continue;
        ElementaryWedge nw = w;
        toggle(k >= 0 ? nw.removed : nw.added, l);
        add_to(out, nw, parity_sign(count_below(w, l)) * c);
    }
    return out;
}

FockVector FockSpace::annihilate(const FockVector& v, int a, int k) const {
    check_window(k);
    const WedgeLabel l{a, k};
    FockVector out;
    for (const auto& [w, c] : v) {
        if (!present(w, l)) continue;
        ElementaryWedge nw = w;
        toggle(k >= 0 ? nw.removed : nw.added, l);
        add_to(out, nw, parity_sign(count_below(w, l)) * c);
    }
    return out;
}

namespace {

struct FermionOp {
    bool creator;
    int component;
    int power;
};

} // namespace

FockVector FockSpace::q_op(const FockVector& v, int a, int exponent) const {
    if (a < 0 || a >= n_) throw std::invalid_argument("q_op: bad component");
    FockVector cur = v;
    const int step = exponent >= 0 ? 1 : -1;
    for (int s = 0; s != exponent; s += step) {
        FockVector next;
        for (const auto& [w, coeff] : cur) {
            // express the wedge as an operator monomial on the vacuum
            std::vector<FermionOp> ops;
            for (const auto& l : w.removed) ops.push_back({false, l.component, l.power});
            for (const auto& l : w.added) ops.push_back({true, l.component, l.power});

            FockVector probe = vacuum();
            for (const auto& op : ops)
                probe = op.creator ? create(probe, op.component, op.power)
                                   : annihilate(probe, op.component, op.power);
            assert(probe.size() == 1 && probe.begin()->first == w);
            Scalar sgn_monomial = probe.begin()->second; // +-1

            // conjugate each factor through Q_a^{+-1} and start from Q_a^{+-1} v0
            int cross = 0;
            FockVector acc = step > 0 ? create(vacuum(), a, -1) : annihilate(vacuum(), a, 0);
            for (const auto& op : ops) {
                FermionOp t = op;
                if (t.component == a)
                    t.power -= step;
                else
                    ++cross;
                acc = t.creator ? create(acc, t.component, t.power)
                                : annihilate(acc, t.component, t.power);
                if (acc.empty()) break;
            }
            Scalar factor = coeff * sgn_monomial * parity_sign(cross);
            for (const auto& [nw, nc] : acc) add_to(next, nw, nc * factor);
        }
        cur = std::move(next);
    }
    return cur;
}

FockVector FockSpace::translation_vacuum(const std::vector<int>& k_vector) const {
    if (static_cast<int>(k_vector.size()) != n_ - 1)
        throw std::invalid_argument("translation_vacuum: k_vector must have length n-1");
    // T_1^{k_1} T_2^{k_2} ... T_{n-1}^{k_{n-1}} v_0, rightmost factor
    // applied first; the T_i anticommute in the Fock lift, so the order
    // is part of the tau convention
    FockVector w = vacuum();
    for (int i = n_ - 1; i >= 1; --i) {
        const long m = k_vector[i - 1];
        if (m == 0) continue;
        w = q_op(w, i - 1, static_cast<int>(-m));
        w = q_op(w, i, static_cast<int>(m));
        // T_i^m = (-1)^{m(m-1)/2} Q_i^m Q_{i-1}^{-m}
        if (((m * (m - 1) / 2) % 2 + 2) % 2 == 1)
            for (auto& [wedge, c] : w) c = -c;
    }
    return w;
}

Scalar FockSpace::pairing(const FockVector& u, const FockVector& v) const {
    const FockVector& small = u.size() <= v.size() ? u : v;
    const FockVector& large = u.size() <= v.size() ? v : u;
    Scalar out(0);
    for (const auto& [w, c] : small) {
        auto it = large.find(w);
        if (it != large.end()) out += c * it->second;
    }
    return out;
}

std::vector<int> FockSpace::multidegree(const ElementaryWedge& w) const {
    std::vector<int> d(n_, 0);
    for (const auto& l : w.added) ++d[l.component];
    for (const auto& l : w.removed) --d[l.component];
    return d;
}

std::vector<WedgeLabel> FockSpace::labels(const ElementaryWedge& w) const {
    std::vector<WedgeLabel> out = w.added;
    for (int k = 0; k < window_; ++k)
        for (int a = 0; a < n_; ++a) {
            WedgeLabel l{a, k};
            if (!contains(w.removed, l)) out.push_back(l);
        }
    // added labels are negative-power, already in front and sorted
    return out;
}

namespace {

// One replacement choice while expanding g factor-wise over a wedge.
struct Replacement {
    std::size_t slot; // index into the ordered label list
    WedgeLabel label;
};

// Inversions of the final slot sequence: kept labels are mutually
// sorted, so only replaced-vs-kept and replaced-vs-replaced pairs count.
long replacement_inversions(const std::vector<WedgeLabel>& slots,
                            const std::vector<Replacement>& repl) {
    auto replaced = [&](std::size_t q) {
        for (const auto& r : repl)
            if (r.slot == q) return true;
        return false;
    };
    long inv = 0;
    for (const auto& r : repl) {
        const WedgeLabel& x = r.label;
        if (x > slots[r.slot]) {
            // kept slots after r.slot holding labels < x
            auto hi = std::lower_bound(slots.begin(), slots.end(), x) - slots.begin();
            for (std::size_t q = r.slot + 1; q < static_cast<std::size_t>(hi); ++q)
                if (!replaced(q)) ++inv;
        } else if (x < slots[r.slot]) {
            // kept slots before r.slot holding labels > x
            auto lo = std::upper_bound(slots.begin(), slots.end(), x) - slots.begin();
            for (std::size_t q = lo; q < r.slot; ++q)
                if (!replaced(q)) ++inv;
        }
        for (const auto& s : repl) {
            if (s.slot < r.slot && s.label > x) ++inv;
        }
    }
    return inv;
}

} // namespace

FockVector FockSpace::apply_group_element(const FockVector& v, const CoefficientArray& arr,
                                          int max_replacements) const {
    // column index: label (b, j) -> list of (a, i, coeff)
    struct Target {
        int a;
        int i;
        Scalar c;
    };
    std::map<WedgeLabel, std::vector<Target>> columns;
    for (const auto& [pair, entries] : arr.blocks())
        for (const auto& [ij, c] : entries)
            columns[WedgeLabel{pair.second, ij.second}].push_back({pair.first, ij.first, c});

    FockVector out;
    for (const auto& [w, coeff] : v) {
        const std::vector<WedgeLabel> slots = labels(w);
        std::vector<std::pair<std::size_t, const std::vector<Target>*>> affected;
        for (std::size_t p = 0; p < slots.size(); ++p) {
            auto it = columns.find(slots[p]);
            if (it != columns.end()) affected.push_back({p, &it->second});
        }

        std::vector<Replacement> repl;
        auto emit = [&](const Scalar& prod) {
            // collision checks: against kept labels and among replacements
            for (std::size_t x = 0; x < repl.size(); ++x) {
                const WedgeLabel& l = repl[x].label;
                for (std::size_t y = x + 1; y < repl.size(); ++y)
                    if (repl[y].label == l) return;
                auto it = std::lower_bound(slots.begin(), slots.end(), l);
                if (it != slots.end() && *it == l) {
                    std::size_t q = it - slots.begin();
                    bool vacated = false;
                    for (const auto& r : repl) vacated |= (r.slot == q);
                    if (!vacated) return;
                }
            }
            ElementaryWedge nw = w;
            for (const auto& r : repl) {
                const WedgeLabel& old = slots[r.slot];
                toggle(old.power >= 0 ? nw.removed : nw.added, old);
                toggle(r.label.power >= 0 ? nw.removed : nw.added, r.label);
            }
            add_to(out, nw, prod * parity_sign(replacement_inversions(slots, repl)));
        };

        auto expand = [&](auto&& self, std::size_t idx, const Scalar& prod) -> void {
            if (idx == affected.size()) {
                emit(prod);
                return;
            }
            self(self, idx + 1, prod); // keep this factor
            if (max_replacements >= 0 && static_cast<int>(repl.size()) >= max_replacements)
                return;
            auto [p, targets] = affected[idx];
            for (const auto& t : *targets) {
                const int power = -t.i - 1;
                check_window(power);
                repl.push_back({p, WedgeLabel{t.a, power}});
                self(self, idx + 1, prod * t.c);
                repl.pop_back();
            }
        };
        expand(expand, 0, coeff);
    }
    return out;
}

FockVector FockSpace::psi_plus_at(const FockVector& v, int a, const Scalar& z) const {
    if (is_zero(z)) throw std::invalid_argument("psi_plus_at: z must be nonzero");
    FockVector out;
    // weight z^{-k-1} on the creation at power k
    Scalar zinv = 1 / z;
    for (int k = -window_; k < window_; ++k) {
        Scalar weight(1);
        long e = -static_cast<long>(k) - 1;
        Scalar base = e >= 0 ? z : zinv;
        for (long t = 0; t < std::labs(e); ++t) weight *= base;
        FockVector term = create(v, a, k);
        for (const auto& [w, c] : term) add_to(out, w, c * weight);
    }
    return out;
}

FockVector FockSpace::psi_minus_at(const FockVector& v, int a, const Scalar& w) const {
    if (is_zero(w)) throw std::invalid_argument("psi_minus_at: w must be nonzero");
    FockVector out;
    // i(e_a z^r) carries weight w^r
    Scalar winv = 1 / w;
    for (int r = -window_; r < window_; ++r) {
        Scalar weight(1);
        Scalar base = r >= 0 ? w : winv;
        for (int t = 0; t < std::abs(r); ++t) weight *= base;
        FockVector term = annihilate(v, a, r);
        for (const auto& [wd, c] : term) add_to(out, wd, c * weight);
    }
    return out;
}

int auto_window(const CoefficientArray& arr, const std::vector<int>& k_vector,
                const std::vector<int>& shift_vector) {
    int r = arr.support_radius();
    int s = 0;
    for (int x : shift_vector) s = std::max(s, std::abs(x));
    // per-component power offsets of T^{k}
    int o = 0;
    const int n = static_cast<int>(k_vector.size()) + 1;
    for (int a = 0; a < n; ++a) {
        int ka = (a >= 1) ? k_vector[a - 1] : 0;
        int ka1 = (a + 1 <= n - 1) ? k_vector[a] : 0;
        o = std::max(o, std::abs(ka - ka1));
    }
    return r + s + o + 2;
}

Scalar tau_fock(const CoefficientArray& arr, const std::vector<int>& k_vector,
                const std::vector<int>& shift_vector, int window_override) {
    const int n = arr.n();
    if (static_cast<int>(k_vector.size()) != n - 1)
        throw std::invalid_argument("tau_fock: k_vector must have length n-1");
    if (static_cast<int>(shift_vector.size()) != n)
        throw std::invalid_argument("tau_fock: shift_vector must have length n");

    const int window =
        window_override > 0 ? window_override : auto_window(arr, k_vector, shift_vector);
    FockSpace space(n, window);
    CoefficientArray shifted = conjugate_shift(arr, shift_vector);

    int cap = 0;
    for (int k : k_vector) cap += std::abs(k);
    FockVector gv = space.apply_group_element(space.vacuum(), shifted, cap);
    FockVector tv = space.translation_vacuum(k_vector);
    return space.pairing(tv, gv);
}

Scalar correlation_fock(int k, const std::vector<Scalar>& zs, const std::vector<Scalar>& ws) {
    if (static_cast<int>(zs.size()) != k || static_cast<int>(ws.size()) != k)
        throw std::invalid_argument("correlation_fock: need k points in each variable");
    FockSpace space(2, k + 2);
    FockVector v = space.vacuum();
    for (int i = 0; i < k; ++i) {
        v = space.psi_minus_at(v, 0, ws[i]);
        v = space.psi_plus_at(v, 1, zs[i]);
    }
    FockVector tv = space.translation_vacuum({k});
    return space.pairing(tv, v);
}

} // namespace taulab
