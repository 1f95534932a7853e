// Acceptance suite: every criterion runs with exact rational arithmetic
// and zero tolerance, printing one PASS/FAIL line each. Exits nonzero if
// any criterion fails.

#include "taulab/condition.hpp"
#include "taulab/datagen.hpp"
#include "taulab/fock.hpp"
#include "taulab/laurent.hpp"
#include "taulab/loop.hpp"
#include "taulab/matgroup.hpp"
#include "taulab/matrix.hpp"
#include "taulab/relations.hpp"
#include "taulab/tau.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace taulab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::string detail;

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
    void finish(double budget_seconds = 0) {
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (budget_seconds > 0 && secs > budget_seconds) {
            ok = false;
            detail = "runtime " + std::to_string(secs) + " s exceeds budget";
        }
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << "  " << name;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << "  [" << secs << " s]";
        if (!ok) line << "  -- " << detail;
        std::cout << line.str() << std::endl;
        if (!ok) ++failures;
    }
};

void require_report(Criterion& c, const RelationReport& r, std::size_t min_residuals,
                    const std::string& label) {
    c.require(r.verdict() == "pass", label + ": verdict " + r.verdict() +
                                         (r.first_nonzero() ? " at " + r.first_nonzero()->point
                                                            : ""));
    c.require(r.residuals.size() >= min_residuals,
              label + ": only " + std::to_string(r.residuals.size()) + " residuals evaluated");
}

// ---- criterion 1: cross-method tau equality, n = 2 ----
void criterion1() {
    Criterion c("1. cross-method tau equality n=2 (50 arrays, k<=3, |a|,|b|<=2)");
    GridSpec grid{.k_max = 3, .k_sum_max = -1, .shift_lo = -2, .shift_hi = 2};
    try {
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            CoefficientArray arr = random_array(2, seed, 4, 4);
            TauTable t =
                build_table(arr, grid, {TauMethod::hankel, TauMethod::minor, TauMethod::fock});
            if (t.entries().size() != 4u * 25u) {
                c.require(false, "grid size wrong");
                break;
            }
        }
    } catch (const CrossMethodMismatch& e) {
        c.require(false, e.what());
    }
    c.finish(60);
}

// ---- criterion 2: cross-method tau equality, n = 3 ----
void criterion2() {
    Criterion c("2. cross-method tau equality n=3 (25 arrays, k+l<=3, |shifts|<=1)");
    GridSpec grid{.k_max = 3, .k_sum_max = 3, .shift_lo = -1, .shift_hi = 1};
    try {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            CoefficientArray arr = random_array(3, seed, 2, 2);
            build_table(arr, grid, {TauMethod::residue, TauMethod::minor, TauMethod::fock});
        }
        // wider supports, including negative origins
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            CoefficientArray arr = random_array(3, seed, 3, 3, -1, -1);
            build_table(arr, grid, {TauMethod::residue, TauMethod::minor, TauMethod::fock});
        }
    } catch (const CrossMethodMismatch& e) {
        c.require(false, e.what());
    }
    c.finish(120);
}

// ---- criterion 3: 2T on 100 instances, 2Q on lifted data, collapse ----
void criterion3() {
    Criterion c("3. 2T (100 instances, k<=4); 2Q lifted; termwise 2T->2Q collapse");
    GridSpec grid{.k_max = 4, .k_sum_max = -1, .shift_lo = -2, .shift_hi = 1};
    GridSpec halo{.k_max = 5, .k_sum_max = -1, .shift_lo = -2, .shift_hi = 2};
    for (std::uint64_t seed = 1; seed <= 100 && c.ok; ++seed) {
        CoefficientArray arr = random_array(2, seed, 4, 4, -2, -2);
        TauTable t = build_table(arr, halo, {TauMethod::hankel});
        require_report(c, check_2T(t, grid), 80, "2T seed " + std::to_string(seed));
    }
    GridSpec qgrid{.k_max = 3, .k_sum_max = -1, .shift_lo = -2, .shift_hi = 2};
    for (std::uint64_t seed = 1; seed <= 25 && c.ok; ++seed) {
        QCoefficients q;
        q.n = 2;
        q.gamma = random_loop_data(2, seed, 3);
        require_report(c, check_q_identities(q, qgrid), 50, "2Q seed " + std::to_string(seed));

        // termwise collapse: every 2T factor becomes a single-index tau
        auto t = [&](int k, int a) { return k < 0 ? Scalar(0) : loop_tau_hankel(q, k, a); };
        for (int k = 0; k <= 3 && c.ok; ++k)
            for (int a = -2; a <= 2; ++a) {
                for (int b = -2; b <= 2; ++b)
                    c.require(loop_tau_minor(q, {k}, {a, b}) == t(k, a - b),
                              "2T factor does not collapse to the single-index tau");
                c.require(t(k + 1, a - 1) * t(k - 1, a + 1) ==
                              t(k, a + 1) * t(k, a - 1) - t(k, a) * t(k, a),
                          "collapsed 2T is not the 2Q relation");
            }
    }
    c.finish();
}

// ---- criterion 4: the six 3T relations on 50 instances ----
void criterion4() {
    Criterion c("4. 3T three-term + four-term (50 instances, k,l<=3)");
    GridSpec grid{.k_max = 3, .k_sum_max = -1, .shift_lo = 0, .shift_hi = 0};
    GridSpec halo{.k_max = 4, .k_sum_max = -1, .shift_lo = -1, .shift_hi = 1};
    for (std::uint64_t seed = 1; seed <= 50 && c.ok; ++seed) {
        CoefficientArray arr = random_array(3, seed, 3, 3, -1, -1);
        TauTable t = build_table(arr, halo, {TauMethod::minor});
        require_report(c, check_3T_three_term(t, grid), 48,
                       "3-term seed " + std::to_string(seed));
        require_report(c, check_3T_four_term(t, grid), 48,
                       "4-term seed " + std::to_string(seed));
    }
    // a wider shift grid on a subset
    GridSpec wgrid{.k_max = 3, .k_sum_max = -1, .shift_lo = -1, .shift_hi = 0};
    GridSpec whalo{.k_max = 4, .k_sum_max = -1, .shift_lo = -2, .shift_hi = 1};
    for (std::uint64_t seed = 1; seed <= 5 && c.ok; ++seed) {
        CoefficientArray arr = random_array(3, 100 + seed, 3, 3, -1, -1);
        TauTable t = build_table(arr, whalo, {TauMethod::minor}, 4);
        require_report(c, check_3T_three_term(t, wgrid), 300,
                       "3-term wide seed " + std::to_string(seed));
        require_report(c, check_3T_four_term(t, wgrid), 300,
                       "4-term wide seed " + std::to_string(seed));
    }
    c.finish();
}

// ---- criterion 5: 3Q under the lift ----
void criterion5() {
    Criterion c("5. 3Q system on lifted n=3 data (parameter map (a-b, a, b))");
    GridSpec grid{.k_max = 2, .k_sum_max = -1, .shift_lo = -1, .shift_hi = 0};
    for (std::uint64_t seed = 1; seed <= 10 && c.ok; ++seed) {
        QCoefficients q;
        q.n = 3;
        q.gamma = random_loop_data(3, seed, 3);
        require_report(c, check_q_identities(q, grid), 100, "3Q seed " + std::to_string(seed));
    }
    c.finish();
}

// ---- criterion 6: nonnegativity lemma, all variants ----
void criterion6() {
    Criterion c("6. Lemma nonneg variants 1-3 (100 instances, n=2 and n=3)");
    long evaluated = 0, skipped = 0;
    auto run = [&](const CoefficientArray& arr, const std::vector<int>& k,
                   const std::vector<int>& s) {
        const int n = arr.n();
        for (int variant = 1; variant <= 3 && c.ok; ++variant)
            for (int i = (variant == 1 ? 0 : 1); i <= n - 1 && c.ok; ++i) {
                try {
                    bool ok = check_nonnegative(arr, variant, i, k, s);
                    ++evaluated;
                    c.require(ok, "variant " + std::to_string(variant) + " i=" +
                                      std::to_string(i) + " found a negative term");
                } catch (const SingularBlock&) {
                    ++skipped;
                }
            }
    };
    for (std::uint64_t seed = 1; seed <= 100 && c.ok; ++seed)
        run(random_array(2, seed, 3, 3, -1, -1), {1}, {0, 0});
    for (std::uint64_t seed = 1; seed <= 100 && c.ok; ++seed)
        run(random_array(3, seed, 3, 3, -1, -1), {1, 1}, {0, 0, 0});
    c.require(evaluated >= 900, "too few evaluable instances: " + std::to_string(evaluated));
    c.finish();
}

// ---- criterion 7: h-identities ----
void criterion7() {
    Criterion c("7. h-identities: 8.1 ratios, eq1/eq2, diag1-3, six n=3 sign patterns");
    GridSpec grid2{.k_max = 2, .k_sum_max = -1, .shift_lo = -1, .shift_hi = 1};
    for (std::uint64_t seed = 1; seed <= 20 && c.ok; ++seed)
        require_report(c, check_h_differences(random_array(2, seed, 3, 3, -1, -1), grid2), 30,
                       "hdiff n=2 seed " + std::to_string(seed));
    GridSpec grid3{.k_max = 1, .k_sum_max = -1, .shift_lo = -1, .shift_hi = 0};
    for (std::uint64_t seed = 1; seed <= 15 && c.ok; ++seed)
        require_report(c, check_h_differences(random_array(3, seed, 3, 3, -1, -1), grid3), 60,
                       "hdiff n=3 seed " + std::to_string(seed));
    // eq1/eq2 and the V/W nonnegativity live in the loop identities
    GridSpec gridq{.k_max = 3, .k_sum_max = -1, .shift_lo = -2, .shift_hi = 2};
    for (std::uint64_t seed = 40; seed <= 50 && c.ok; ++seed) {
        QCoefficients q;
        q.n = 2;
        q.gamma = random_loop_data(2, seed, 3);
        require_report(c, check_q_identities(q, gridq), 60, "eq1/eq2 seed " + std::to_string(seed));
    }
    c.finish();
}

// ---- criterion 8: fock-engine algebra suite ----
void criterion8() {
    Criterion c("8. Fock algebra: Clifford, Q/T identities, adjointness, lemmas, Heine");
    Rng rng(12345);
    FockSpace sp(3, 6);

    auto random_vec = [&](FockSpace& space) {
        FockVector v = space.vacuum();
        for (int t = 0; t < 4; ++t) {
            int a = static_cast<int>(rng.uniform(0, space.n() - 1));
            int k = static_cast<int>(rng.uniform(-2, 2));
            FockVector nx = rng.uniform(0, 1) ? space.create(v, a, k) : space.annihilate(v, a, k);
            if (!nx.empty()) v = std::move(nx);
        }
        return v;
    };
    auto add = [](FockVector x, const FockVector& y) {
        for (const auto& [w, cc] : y) {
            auto [it, ins] = x.emplace(w, cc);
            if (!ins) {
                it->second += cc;
                if (is_zero(it->second)) x.erase(it);
            }
        }
        return x;
    };

    for (int trial = 0; trial < 50 && c.ok; ++trial) {
        FockVector v = random_vec(sp);
        FockVector w = random_vec(sp);
        int a = static_cast<int>(rng.uniform(0, 2)), b = static_cast<int>(rng.uniform(0, 2));
        int k = static_cast<int>(rng.uniform(-2, 2)), l = static_cast<int>(rng.uniform(-2, 2));

        // Clifford anticommutators
        FockVector anti = add(sp.create(sp.annihilate(v, b, l), a, k),
                              sp.annihilate(sp.create(v, a, k), b, l));
        c.require(anti == ((a == b && k == l) ? v : FockVector{}), "anticommutator");

        // adjointness of wedging/contracting, Q and T unitarity
        c.require(sp.pairing(sp.create(v, a, k), w) == sp.pairing(v, sp.annihilate(w, a, k)),
                  "eq. 8 adjointness");
        c.require(sp.pairing(sp.q_op(v, a, 1), w) == sp.pairing(v, sp.q_op(w, a, -1)),
                  "Q unitarity");
        FockVector tv = sp.q_op(sp.q_op(v, 0, -1), 1, 1); // T_1 v
        FockVector tw = sp.q_op(sp.q_op(w, 1, -1), 0, 1); // T_1^{-1} w
        c.require(sp.pairing(tv, w) == sp.pairing(v, tw), "T unitarity");

        // Q commutation: T_a Q_b = +-Q_b T_a
        int qa = 1 + static_cast<int>(rng.uniform(0, 1));
        int qb = static_cast<int>(rng.uniform(0, 2));
        FockVector t_qb = sp.q_op(sp.q_op(sp.q_op(v, qb, 1), qa - 1, -1), qa, 1);
        FockVector qb_t = sp.q_op(sp.q_op(sp.q_op(v, qa - 1, -1), qa, 1), qb, 1);
        if (qa == qb || qa == qb + 1)
            for (auto& [wd, cc] : qb_t) cc = -cc;
        c.require(t_qb == qb_t, "T Q commutation");
    }

    // T_i^m rearrangement and Q^k vacuum formula
    FockSpace sp2(2, 7);
    for (int m = -3; m <= 3 && c.ok; ++m) {
        FockVector direct = sp2.translation_vacuum({m});
        FockVector manual = sp2.q_op(sp2.q_op(sp2.vacuum(), 0, -m), 1, m);
        if (((static_cast<long>(m) * (m - 1) / 2) % 2) == 1)
            for (auto& [wd, cc] : manual) cc = -cc;
        c.require(direct == manual, "T^m = (-1)^{m(m-1)/2} Q_1^m Q_0^{-m} on the vacuum");
    }

    // factorization and reduction lemmas
    FockSpace one(1, 7);
    for (int trial = 0; trial < 30 && c.ok; ++trial) {
        int alpha = static_cast<int>(rng.uniform(-2, 2));
        int beta = static_cast<int>(rng.uniform(-2, 2));
        std::vector<std::pair<bool, int>> m1, m0;
        for (int i = 0; i < 3; ++i) {
            m1.push_back({rng.uniform(0, 1) == 1, static_cast<int>(rng.uniform(-3, 3))});
            m0.push_back({rng.uniform(0, 1) == 1, static_cast<int>(rng.uniform(-3, 3))});
        }
        FockSpace two(2, 7);
        auto apply = [&](FockSpace& space, FockVector v, const auto& ops, int comp) {
            for (auto it = ops.rbegin(); it != ops.rend(); ++it)
                v = it->first ? space.create(v, comp, it->second)
                              : space.annihilate(v, comp, it->second);
            return v;
        };
        FockVector m0v = apply(two, two.vacuum(), m0, 0);
        FockVector full = apply(two, m0v, m1, 1);
        FockVector bra = two.q_op(two.q_op(two.vacuum(), 0, beta), 1, alpha);
        Scalar lhs = two.pairing(bra, full);
        Scalar f1 = two.pairing(two.q_op(two.vacuum(), 1, alpha), apply(two, two.vacuum(), m1, 1));
        Scalar f0 = two.pairing(two.q_op(two.vacuum(), 0, beta), m0v);
        c.require(lhs == f1 * f0, "factorization lemma");

        // reduction to one component
        FockVector in_two = apply(two, two.vacuum(), m0, 0);
        FockVector in_one = apply(one, one.vacuum(), m0, 0);
        c.require(two.pairing(two.q_op(two.vacuum(), 0, beta), in_two) ==
                      one.pairing(one.q_op(one.vacuum(), 0, beta), in_one),
                  "reduction lemma");
    }

    // Vandermonde lemma k <= 4 and the correlation determinant
    for (int k = 1; k <= 4 && c.ok; ++k) {
        std::vector<Scalar> zs, ws;
        for (int i = 0; i < k; ++i) {
            zs.push_back(rat(static_cast<long>(rng.uniform(1, 30)), 7));
            ws.push_back(rat(static_cast<long>(rng.uniform(1, 30)), 11));
        }
        Scalar expect(1);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) expect *= zs[j] - zs[i];
        FockVector plus = one.vacuum();
        for (int i = 0; i < k; ++i) plus = one.psi_plus_at(plus, 0, zs[i]);
        c.require(one.pairing(one.q_op(one.vacuum(), 0, k), plus) == expect, "Vandermonde lemma");
        c.require(correlation_fock(k, zs, ws) == det(vandermonde(zs)) * det(vandermonde(ws)),
                  "correlation = det V_z det V_w");
    }

    // Heine: product condition of the Vandermonde pair = k! det(moments)
    CoefficientArray arr = random_array(2, 777, 4, 4);
    Condition cond(arr, {1, 0});
    for (int k = 1; k <= 3 && c.ok; ++k) {
        std::vector<std::string> vars;
        for (int i = 0; i < k; ++i) {
            vars.push_back("z" + std::to_string(i));
            vars.push_back("w" + std::to_string(i));
        }
        auto det_poly = [&](char base) {
            LaurentPoly out(vars);
            std::vector<int> p(k);
            for (int i = 0; i < k; ++i) p[i] = i;
            do {
                int inv = 0;
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        if (p[i] > p[j]) ++inv;
                LaurentPoly::Exponents e(vars.size(), 0);
                for (int i = 0; i < k; ++i)
                    e[out.var_index(std::string(1, base) + std::to_string(i))] = p[i];
                out.add_term(e, rat(inv % 2 == 0 ? 1 : -1));
            } while (std::next_permutation(p.begin(), p.end()));
            return out;
        };
        LaurentPoly f = det_poly('z') * det_poly('w');
        std::vector<Condition> cs(static_cast<std::size_t>(k), cond);
        DenseMatrix moments(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) moments.at(i, j) = arr.get({1, 0}, i, j);
        c.require(product_condition_eval(cs, f) == factorial(k) * det(moments),
                  "Heine k! det identity");
    }
    c.finish();
}

// ---- criterion 9: exactness certification ----
void criterion9() {
    Criterion c("9. exactness: window doubling and truncation-order increase");
    for (std::uint64_t seed = 1; seed <= 5 && c.ok; ++seed) {
        CoefficientArray arr = random_array(2, seed, 4, 4, -1, -1);
        for (int k = 0; k <= 3 && c.ok; ++k)
            for (int a = -1; a <= 1; ++a)
                for (int b = -1; b <= 1; ++b) {
                    int w = auto_window(arr, {k}, {a, b});
                    c.require(tau_minor(arr, {k}, {a, b}, w) ==
                                  tau_minor(arr, {k}, {a, b}, 2 * w),
                              "minor window doubling (n=2)");
                    c.require(tau_fock(arr, {k}, {a, b}, w) == tau_fock(arr, {k}, {a, b}, 2 * w),
                              "fock window doubling (n=2)");
                }
        // h invariance: the factorization from the doubled-window element
        for (int k = 0; k <= 2 && c.ok; ++k) {
            if (is_zero(tau_minor(arr, {k}, {0, 0}))) continue;
            int w = auto_window(arr, {k}, {0, 0});
            HTable h1 = extract_h(gauss_factorize(build_group_element(arr, {0, 0}, {k}, w)));
            HTable h2 = extract_h(gauss_factorize(build_group_element(arr, {0, 0}, {k}, 2 * w)));
            c.require(h1.entries() == h2.entries(), "h window doubling (n=2)");
        }
    }
    for (std::uint64_t seed = 1; seed <= 3 && c.ok; ++seed) {
        CoefficientArray arr = random_array(3, seed, 2, 2);
        for (int k = 0; k <= 2 && c.ok; ++k)
            for (int l = 0; k + l <= 3; ++l) {
                int w = auto_window(arr, {k, l}, {1, 0, -1});
                c.require(tau_minor(arr, {k, l}, {1, 0, -1}, w) ==
                              tau_minor(arr, {k, l}, {1, 0, -1}, 2 * w),
                          "minor window doubling (n=3)");
                c.require(tau_fock(arr, {k, l}, {1, 0, -1}, w) ==
                              tau_fock(arr, {k, l}, {1, 0, -1}, 2 * w),
                          "fock window doubling (n=3)");
                Scalar r = tau_residue_3(arr, k, l, 1, 0, -1);
                c.require(r == tau_residue_3(arr, k, l, 1, 0, -1, 9),
                          "residue truncation-order increase");
            }
    }
    // embedded birkhoff under a larger lift radius
    for (std::uint64_t seed = 1; seed <= 5 && c.ok; ++seed) {
        QCoefficients q;
        q.n = 2;
        q.gamma = random_loop_data(2, seed, 3);
        for (int k = 0; k <= 2; ++k) {
            if (is_zero(loop_tau_hankel(q, k, 0))) continue;
            c.require(birkhoff_minus_embedded(q, {k}, {0, 0}) ==
                          birkhoff_minus_embedded(q, {k}, {0, 0}, 4),
                      "embedded birkhoff radius increase");
        }
    }
    c.finish();
}

// ---- criterion 10: conjecture probes ----
void criterion10() {
    Criterion c("10. conjecture probes: n=2,3 zero; n=4 completes and reports");
    // proven specializations; count evaluated points so the check is not vacuous
    long evaluated = 0;
    auto tally = [&](const RelationReport& r, const char* label) {
        evaluated += static_cast<long>(r.residuals.size());
        require_report(c, r, 0, label);
    };
    for (std::uint64_t seed = 60; seed <= 62 && c.ok; ++seed) {
        CoefficientArray a2 = random_array(2, seed, 3, 3, -1, -1);
        for (int i = 0; i <= 1; ++i)
            for (int k = 0; k <= 2; ++k)
                tally(probe_conjecture_glinf(a2, i, {k}, {0, 0}), "glinf n=2");
        CoefficientArray a3 = random_array(3, seed, 2, 2, -1, -1);
        for (int i = 0; i <= 2; ++i)
            tally(probe_conjecture_glinf(a3, i, {1, 1}, {0, 0, 0}), "glinf n=3");
        QCoefficients q2;
        q2.n = 2;
        q2.gamma = random_loop_data(2, seed, 3);
        for (int k = 0; k <= 2; ++k)
            tally(probe_conjecture_gln(q2, 1, {k}, {0, 0}), "gln n=2");
        QCoefficients q3;
        q3.n = 3;
        q3.gamma = random_loop_data(3, seed, 2);
        for (int i = 1; i <= 2; ++i)
            tally(probe_conjecture_gln(q3, i, {1, 1}, {0, 0, 0}), "gln n=3");
    }
    c.require(evaluated >= 20, "too few evaluable proven-case probes");

    // n = 4 probes: complete on k-vectors with entries <= 2, emit reports
    CoefficientArray a4 = random_array(4, 5, 3, 3, -1, -1);
    RelationReport glinf4;
    glinf4.system = "conj-glinf-n4";
    glinf4.conjecture = true;
    GridSpec kgrid{.k_max = 2, .k_sum_max = -1, .shift_lo = 0, .shift_hi = 0};
    for (const auto& kv : grid_k_vectors(4, kgrid))
        for (int i = 0; i < 4; ++i)
            merge_into(glinf4, probe_conjecture_glinf(a4, i, kv, {0, 0, 0, 0}));
    c.require(!glinf4.residuals.empty(), "glinf n=4 evaluated nothing");
    c.require(glinf4.all_zero(), "glinf n=4 found a nonzero residual (reported)");

    QCoefficients q4;
    q4.n = 4;
    q4.gamma = random_loop_data(4, 5, 2);
    RelationReport gln4;
    gln4.system = "conj-gln-n4";
    gln4.conjecture = true;
    for (const auto& kv : grid_k_vectors(4, kgrid))
        for (int i = 1; i < 4; ++i)
            merge_into(gln4, probe_conjecture_gln(q4, i, kv, {0, 0, 0, 0}));
    c.require(!gln4.residuals.empty(), "gln n=4 evaluated nothing");
    c.require(gln4.all_zero(), "gln n=4 found a nonzero residual (reported)");

    std::ofstream("acceptance_conj_glinf_n4.json") << glinf4.to_json();
    std::ofstream("acceptance_conj_gln_n4.json") << gln4.to_json();
    c.finish(300);
}

} // namespace

int main() {
    std::cout << "taulab acceptance suite (exact arithmetic, zero tolerance)\n";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::cout << (failures == 0 ? "all criteria passed\n"
                                : std::to_string(failures) + " criteria FAILED\n");
    return failures == 0 ? 0 : 1;
}
