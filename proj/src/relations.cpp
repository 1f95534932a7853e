#include "taulab/relations.hpp"

#include "taulab/matgroup.hpp"

#include <array>
#include <optional>
#include <sstream>

namespace taulab {

std::string RelationReport::to_json() const {
    std::ostringstream out;
    out << "{\n  \"system\": \"" << system << "\",\n  \"seed\": " << seed << ",\n  \"grid\": \""
        << grid_desc << "\",\n  \"residuals\": [\n";
    for (std::size_t i = 0; i < residuals.size(); ++i) {
        const auto& r = residuals[i];
        out << "    {\"point\": \"" << r.point << "\", \"eq\": " << r.eq << ", \"num\": \""
            << r.value.get_num().get_str() << "\", \"den\": \"" << r.value.get_den().get_str()
            << "\"}" << (i + 1 < residuals.size() ? "," : "") << "\n";
    }
    out << "  ],\n  \"verdict\": \"" << verdict() << "\",\n  \"skipped\": [\n";
    for (std::size_t i = 0; i < skipped.size(); ++i)
        out << "    {\"point\": \"" << skipped[i].point << "\", \"reason\": \""
            << skipped[i].reason << "\"}" << (i + 1 < skipped.size() ? "," : "") << "\n";
    out << "  ]\n}\n";
    return out.str();
}

void merge_into(RelationReport& dst, const RelationReport& src) {
    dst.residuals.insert(dst.residuals.end(), src.residuals.begin(), src.residuals.end());
    dst.skipped.insert(dst.skipped.end(), src.skipped.begin(), src.skipped.end());
}

namespace {

std::string pt2(int k, int a, int b) {
    return "k=" + std::to_string(k) + ",a=" + std::to_string(a) + ",b=" + std::to_string(b);
}

std::string pt3(int k, int l, int a, int b, int g) {
    return "k=" + std::to_string(k) + ",l=" + std::to_string(l) + ",a=" + std::to_string(a) +
           ",b=" + std::to_string(b) + ",g=" + std::to_string(g);
}

} // namespace

RelationReport check_2T(const TauTable& table, const GridSpec& grid) {
    RelationReport report;
    report.system = "2T";
    auto tau = [&](int k, int a, int b) { return table.value({{k}, {a, b}}); };
    for (int k = 0; k <= grid.k_max; ++k)
        for (int a = grid.shift_lo; a <= grid.shift_hi; ++a)
            for (int b = grid.shift_lo; b <= grid.shift_hi; ++b) {
                Scalar r = tau(k + 1, a, b + 1) * tau(k - 1, a + 1, b) -
                           tau(k, a + 1, b) * tau(k, a, b + 1) +
                           tau(k, a, b) * tau(k, a + 1, b + 1);
                report.residuals.push_back({pt2(k, a, b), 0, r});
            }
    return report;
}

RelationReport check_3T_three_term(const TauTable& table, const GridSpec& grid) {
    RelationReport report;
    report.system = "3T-three-term";
    auto tau = [&](int k, int l, int a, int b, int g) {
        return table.value({{k, l}, {a, b, g}});
    };
    for (int k = 0; k <= grid.k_max; ++k)
        for (int l = 0; l <= grid.k_max; ++l)
            for (int a = grid.shift_lo; a <= grid.shift_hi; ++a)
                for (int b = grid.shift_lo; b <= grid.shift_hi; ++b)
                    for (int g = grid.shift_lo; g <= grid.shift_hi; ++g) {
                        const std::string pt = pt3(k, l, a, b, g);
                        Scalar r1 = -tau(k, l - 1, a, b, g) * tau(k, l, a + 1, b, g) +
                                    tau(k, l - 1, a + 1, b, g) * tau(k, l, a, b, g) -
                                    tau(k + 1, l, a, b, g) * tau(k - 1, l - 1, a + 1, b, g);
                        Scalar r2 = tau(k + 1, l - 1, a, b + 1, g) * tau(k, l, a, b, g) +
                                    tau(k, l - 1, a, b, g) * tau(k + 1, l, a, b + 1, g) -
                                    tau(k + 1, l, a, b, g) * tau(k, l - 1, a, b + 1, g);
                        Scalar r3 = tau(k - 1, l - 1, a, b, g) * tau(k, l + 1, a, b, g + 1) -
                                    tau(k - 1, l, a, b, g + 1) * tau(k, l, a, b, g) +
                                    tau(k - 1, l, a, b, g) * tau(k, l, a, b, g + 1);
                        report.residuals.push_back({pt, 0, r1});
                        report.residuals.push_back({pt, 1, r2});
                        report.residuals.push_back({pt, 2, r3});
                    }
    return report;
}

RelationReport check_3T_four_term(const TauTable& table, const GridSpec& grid) {
    RelationReport report;
    report.system = "3T-four-term";
    auto tau = [&](int k, int l, int a, int b, int g) {
        return table.value({{k, l}, {a, b, g}});
    };
    for (int k = 0; k <= grid.k_max; ++k)
        for (int l = 0; l <= grid.k_max; ++l)
            for (int a = grid.shift_lo; a <= grid.shift_hi; ++a)
                for (int b = grid.shift_lo; b <= grid.shift_hi; ++b)
                    for (int g = grid.shift_lo; g <= grid.shift_hi; ++g) {
                        const std::string pt = pt3(k, l, a, b, g);
                        // rel1
                        Scalar r1 = tau(k, l, a, b, g) * tau(k, l, a + 1, b + 1, g + 1) -
                                    tau(k, l, a + 1, b, g) * tau(k, l, a, b + 1, g + 1) -
                                    tau(k + 1, l + 1, a, b + 1, g + 1) *
                                        tau(k - 1, l - 1, a + 1, b, g) +
                                    tau(k + 1, l, a, b + 1, g + 1) * tau(k - 1, l, a + 1, b, g);
                        // eq:3
                        Scalar r2 = tau(k, l, a, b, g) * tau(k, l, a + 1, b + 1, g + 1) -
                                    tau(k, l, a, b + 1, g) * tau(k, l, a + 1, b, g + 1) +
                                    tau(k, l + 1, a + 1, b, g + 1) * tau(k, l - 1, a, b + 1, g) +
                                    tau(k - 1, l, a + 1, b, g + 1) * tau(k + 1, l, a, b + 1, g);
                        // eq:4
                        Scalar r3 = tau(k, l, a, b, g) * tau(k, l, a + 1, b + 1, g + 1) -
                                    tau(k, l, a, b, g + 1) * tau(k, l, a + 1, b + 1, g) -
                                    tau(k - 1, l - 1, a + 1, b + 1, g) *
                                        tau(k + 1, l + 1, a, b, g + 1) +
                                    tau(k, l - 1, a + 1, b + 1, g) * tau(k, l + 1, a, b, g + 1);
                        report.residuals.push_back({pt, 0, r1});
                        report.residuals.push_back({pt, 1, r2});
                        report.residuals.push_back({pt, 2, r3});
                    }
    return report;
}

namespace {

// cached Gauss h-tables per (k-vector, shift-vector); nullptr when the
// factorization does not exist
class HCache {
  public:
    explicit HCache(const CoefficientArray& arr) : arr_(&arr) {}

    const HTable* at(const std::vector<int>& k, const std::vector<int>& s) {
        auto key = std::make_pair(k, s);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second ? &*it->second : nullptr;
        std::optional<HTable> h;
        try {
            h = extract_h(gauss_factorize(build_group_element(*arr_, s, k)));
        } catch (const SingularBlock&) {
            h.reset();
        }
        auto [jt, ok] = cache_.emplace(key, std::move(h));
        return jt->second ? &*jt->second : nullptr;
    }

  private:
    const CoefficientArray* arr_;
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::optional<HTable>> cache_;
};

} // namespace

RelationReport check_h_differences(const CoefficientArray& arr, const GridSpec& grid) {
    RelationReport report;
    report.system = arr.n() == 2 ? "hdiff-2" : "hdiff-3";
    HCache hs(arr);

    if (arr.n() == 2) {
        auto tau = [&](int k, int a, int b) {
            return k < 0 ? Scalar(0) : tau_hankel(arr, k, a, b);
        };
        for (int k = 0; k <= grid.k_max; ++k)
            for (int a = grid.shift_lo; a <= grid.shift_hi; ++a)
                for (int b = grid.shift_lo; b <= grid.shift_hi; ++b) {
                    const std::string pt = pt2(k, a, b);
                    const HTable* h00 = hs.at({k}, {a, b});
                    const HTable* h10 = hs.at({k}, {a + 1, b});
                    const HTable* h01 = hs.at({k + 1}, {a, b + 1});
                    if (!h00) {
                        report.skipped.push_back({pt, "tau = 0, no factorization"});
                        continue;
                    }
                    // ratio identities from the negative factor
                    report.residuals.push_back(
                        {pt, 0, h00->h(1, 0) * tau(k, a, b) - tau(k + 1, a, b)});
                    if (h10) {
                        report.residuals.push_back(
                            {pt, 1, h10->h(0, 1) * tau(k, a + 1, b) - tau(k - 1, a + 1, b)});
                        // h11 difference in the alpha direction
                        report.residuals.push_back(
                            {pt, 2,
                             (h10->h(1, 1) - h00->h(1, 1)) * tau(k, a, b) * tau(k, a + 1, b) -
                                 tau(k + 1, a, b) * tau(k - 1, a + 1, b)});
                    } else {
                        report.skipped.push_back({pt, "tau^(a+1,b) = 0"});
                    }
                    if (h01) {
                        // h11 difference in the (k, beta) direction
                        report.residuals.push_back(
                            {pt, 3,
                             (h01->h(1, 1) - h00->h(1, 1)) * tau(k, a, b) * tau(k + 1, a, b + 1) -
                                 tau(k + 1, a, b) * tau(k, a, b + 1)});
                    } else {
                        report.skipped.push_back({pt, "tau_{k+1}^(a,b+1) = 0"});
                    }
                }
        return report;
    }

    if (arr.n() != 3) throw std::invalid_argument("check_h_differences: n = 2 or 3");

    std::map<std::array<int, 5>, Scalar> tcache;
    auto tau = [&](int k, int l, int a, int b, int g) -> Scalar {
        if (k < 0 || l < 0) return Scalar(0);
        std::array<int, 5> key{k, l, a, b, g};
        auto it = tcache.find(key);
        if (it != tcache.end()) return it->second;
        Scalar v = tau_minor(arr, {k, l}, {a, b, g});
        tcache.emplace(key, v);
        return v;
    };

    for (int k = 0; k <= grid.k_max; ++k)
        for (int l = 0; l <= grid.k_max; ++l)
            for (int a = grid.shift_lo; a <= grid.shift_hi; ++a)
                for (int b = grid.shift_lo; b <= grid.shift_hi; ++b)
                    for (int g = grid.shift_lo; g <= grid.shift_hi; ++g) {
                        const std::string pt = pt3(k, l, a, b, g);
                        const HTable* h = hs.at({k, l}, {a, b, g});
                        if (!h) {
                            report.skipped.push_back({pt, "tau = 0, no factorization"});
                            continue;
                        }
                        const Scalar t = tau(k, l, a, b, g);
                        const int sk = parity_sign(k);
                        // six leading-coefficient identities, cross-multiplied
                        report.residuals.push_back(
                            {pt, 0, h->h(0, 1) * t - tau(k - 1, l, a, b, g)});
                        report.residuals.push_back(
                            {pt, 1, h->h(1, 0) * t - tau(k + 1, l, a, b, g)});
                        report.residuals.push_back(
                            {pt, 2, h->h(1, 2) * t - sk * tau(k, l - 1, a, b, g)});
                        report.residuals.push_back(
                            {pt, 3, h->h(2, 1) * t - sk * tau(k, l + 1, a, b, g)});
                        report.residuals.push_back(
                            {pt, 4, h->h(0, 2) * t - sk * tau(k - 1, l - 1, a, b, g)});
                        report.residuals.push_back(
                            {pt, 5, h->h(2, 0) * t + sk * tau(k + 1, l + 1, a, b, g)});

                        // diag1..diag3
                        const HTable* hb = hs.at({k, l}, {a, b + 1, g});
                        if (hb) {
                            report.residuals.push_back(
                                {pt, 6,
                                 (hb->h(0, 0) - h->h(0, 0)) * t * tau(k, l, a, b + 1, g) -
                                     tau(k - 1, l, a, b, g) * tau(k + 1, l, a, b + 1, g)});
                        } else {
                            report.skipped.push_back({pt, "tau^(a,b+1,g) = 0"});
                        }
                        const HTable* ha = hs.at({k, l}, {a + 1, b, g});
                        const HTable* hk = hs.at({k + 1, l}, {a, b, g});
                        if (ha && hk) {
                            report.residuals.push_back(
                                {pt, 7,
                                 (ha->h(0, 0) - hk->h(0, 0)) * tau(k + 1, l, a, b, g) *
                                         tau(k, l, a + 1, b, g) -
                                     t * tau(k + 1, l, a + 1, b, g)});
                        } else {
                            report.skipped.push_back({pt, "diag2 factorization missing"});
                        }
                        const HTable* hg = hs.at({k, l}, {a, b, g + 1});
                        if (hg) {
                            report.residuals.push_back(
                                {pt, 8,
                                 (h->h(0, 0) - hg->h(0, 0)) * t * tau(k, l, a, b, g + 1) -
                                     tau(k - 1, l - 1, a, b, g) * tau(k + 1, l + 1, a, b, g + 1)});
                        } else {
                            report.skipped.push_back({pt, "tau^(a,b,g+1) = 0"});
                        }
                    }
    return report;
}

RelationReport probe_conjecture_glinf(const CoefficientArray& arr, int i,
                                      const std::vector<int>& k_vector,
                                      const std::vector<int>& shift_vector) {
    const int n = arr.n();
    RelationReport report;
    report.system = "conj-glinf";
    report.conjecture = n >= 4;

    std::ostringstream pt;
    pt << "i=" << i << ",k=[";
    for (std::size_t t = 0; t < k_vector.size(); ++t) pt << (t ? "," : "") << k_vector[t];
    pt << "],beta=[";
    for (std::size_t t = 0; t < shift_vector.size(); ++t) pt << (t ? "," : "") << shift_vector[t];
    pt << "]";

    std::vector<int> s_plus_i = shift_vector, s_all_but_i = shift_vector, s_all = shift_vector;
    s_plus_i[i] += 1;
    for (int t = 0; t < n; ++t) {
        s_all[t] += 1;
        if (t != i) s_all_but_i[t] += 1;
    }

    Scalar t_base = tau_minor(arr, k_vector, shift_vector);
    Scalar t_all = tau_minor(arr, k_vector, s_all);
    Scalar t_plus = tau_minor(arr, k_vector, s_plus_i);
    Scalar t_but = tau_minor(arr, k_vector, s_all_but_i);
    if (is_zero(t_plus) || is_zero(t_but)) {
        report.skipped.push_back({pt.str(), "denominator tau = 0"});
        return report;
    }

    HTable h_but = extract_h(gauss_factorize(build_group_element(arr, s_all_but_i, k_vector)));
    HTable h_plus = extract_h(gauss_factorize(build_group_element(arr, s_plus_i, k_vector)));

    Scalar rhs(0);
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        rhs += h_but.h(j, i) * h_plus.h(i, j);
    }
    Scalar lhs = Scalar(1) - t_base * t_all / (t_plus * t_but);
    report.residuals.push_back({pt.str(), 0, lhs - rhs});
    return report;
}

RelationReport probe_conjecture_gln(const QCoefficients& q, int i,
                                    const std::vector<int>& k_vector,
                                    const std::vector<int>& beta) {
    const int n = q.n;
    RelationReport report;
    report.system = "conj-gln";
    report.conjecture = n >= 4;

    std::ostringstream pt;
    pt << "i=" << i << ",k=[";
    for (std::size_t t = 0; t < k_vector.size(); ++t) pt << (t ? "," : "") << k_vector[t];
    pt << "],beta=[";
    for (std::size_t t = 1; t < beta.size(); ++t) pt << (t > 1 ? "," : "") << beta[t];
    pt << "]";

    std::vector<int> b_plus = beta, b_minus = beta;
    b_plus[i] += 1;
    b_minus[i] -= 1;

    Scalar t_base = loop_tau_minor(q, k_vector, beta);
    Scalar t_plus = loop_tau_minor(q, k_vector, b_plus);
    Scalar t_minus = loop_tau_minor(q, k_vector, b_minus);
    if (is_zero(t_plus) || is_zero(t_minus)) {
        report.skipped.push_back({pt.str(), "denominator tau = 0"});
        return report;
    }

    LaurentMatrix gm_plus(n), gm_minus(n);
    try {
        gm_plus = birkhoff_factorize(loop_element(q, k_vector, b_plus)).g_minus;
        gm_minus = birkhoff_factorize(loop_element(q, k_vector, b_minus)).g_minus;
    } catch (const NoBirkhoff&) {
        report.skipped.push_back({pt.str(), "no Birkhoff factorization"});
        return report;
    }

    Scalar rhs(0);
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        rhs += gm_minus.get(-1, j, i) * gm_plus.get(-1, i, j);
    }
    Scalar lhs = Scalar(1) - t_base * t_base / (t_plus * t_minus);
    report.residuals.push_back({pt.str(), 0, lhs - rhs});
    return report;
}

} // namespace taulab
