// taulab: generate coefficient data, build tau tables by independent
// methods, run the difference-system check suites, and dump Gauss
// factorizations.
//
// Exit codes: 0 pass, 1 relation failure or cross-method mismatch,
// 2 input error, 3 internal assertion.

#include "taulab/datagen.hpp"
#include "taulab/loop.hpp"
#include "taulab/matgroup.hpp"
#include "taulab/relations.hpp"
#include "taulab/tau.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace taulab;

namespace {

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{2, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{2, "cannot write " + path};
    out << text;
}

std::pair<int, int> parse_pair_arg(const std::string& s, char sep) {
    auto pos = s.find(sep);
    if (pos == std::string::npos) throw CliError{2, "expected <a>" + std::string(1, sep) + "<b>: " + s};
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
}

int default_jobs() {
    if (const char* env = std::getenv("TAULAB_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

// config file: flat JSON object, flags take precedence
void apply_config(CLI::App& app, const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw CliError{2, std::string("config: ") + e.what()};
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        for (CLI::App* sub : app.get_subcommands({})) (void)sub;
        auto set_on = [&](CLI::App* a) {
            CLI::Option* opt = a->get_option_no_throw("--" + it.key());
            if (!opt) return;
            std::string v = it.value().is_string() ? it.value().get<std::string>()
                                                   : it.value().dump();
            opt->default_val(v);
        };
        set_on(&app);
        for (CLI::App* sub : app.get_subcommands({})) set_on(sub);
    }
}

struct CommonOpts {
    int n = 2;
    std::uint64_t seed = 1;
    std::string box = "3x3";
    std::string origin = "0,0";
    bool loop = false;
    std::string in_path;
    std::string out_path;
    int grid = 3;
    int ksum = -1;
    std::string shifts = "-1:1";
    std::string methods = "hankel,minor";
    std::string suite = "all";
    std::vector<int> kvec;
    std::vector<int> shiftvec;
    int jobs = default_jobs();
};

CoefficientArray load_or_generate(const CommonOpts& o) {
    if (!o.in_path.empty()) {
        try {
            return coeff_from_json(read_file(o.in_path));
        } catch (const SchemaError& e) {
            throw CliError{2, e.what()};
        }
    }
    auto [rows, cols] = parse_pair_arg(o.box, 'x');
    auto [oi, oj] = parse_pair_arg(o.origin, ',');
    return random_array(o.n, o.seed, rows, cols, oi, oj);
}

QCoefficients load_or_generate_loop(const CommonOpts& o) {
    if (!o.in_path.empty()) {
        try {
            return loop_from_json(read_file(o.in_path));
        } catch (const SchemaError& e) {
            throw CliError{2, e.what()};
        }
    }
    auto [rows, cols] = parse_pair_arg(o.box, 'x');
    QCoefficients q;
    q.n = o.n;
    q.gamma = random_loop_data(o.n, o.seed, rows);
    return q;
}

GridSpec grid_from(const CommonOpts& o) {
    auto [lo, hi] = parse_pair_arg(o.shifts, ':');
    return GridSpec{.k_max = o.grid, .k_sum_max = o.ksum, .shift_lo = lo, .shift_hi = hi};
}

int cmd_gen(const CommonOpts& o) {
    std::string text;
    if (o.loop)
        text = loop_to_json(load_or_generate_loop(o));
    else
        text = coeff_to_json(load_or_generate(o));
    if (o.out_path.empty())
        std::cout << text;
    else
        write_file(o.out_path, text);
    return 0;
}

int cmd_tau(const CommonOpts& o) {
    CoefficientArray arr = load_or_generate(o);
    std::set<TauMethod> methods;
    for (const auto& name : {"hankel", "minor", "fock", "residue"})
        if (o.methods.find(name) != std::string::npos) {
            if (std::string(name) == "hankel") methods.insert(TauMethod::hankel);
            if (std::string(name) == "minor") methods.insert(TauMethod::minor);
            if (std::string(name) == "fock") methods.insert(TauMethod::fock);
            if (std::string(name) == "residue") methods.insert(TauMethod::residue);
        }
    if (methods.empty()) throw CliError{2, "no valid methods in: " + o.methods};

    GridSpec grid = grid_from(o);
    if (arr.n() >= 3 && grid.k_sum_max < 0 && methods.count(TauMethod::residue))
        grid.k_sum_max = grid.k_max; // keep the residue expansion small

    TauTable table = build_table(arr, grid, methods, o.jobs);
    std::string base = o.out_path.empty() ? "tau_table" : o.out_path;
    write_file(base + ".csv", table.to_csv());
    write_file(base + ".json", table.to_json());
    std::cout << "wrote " << base << ".csv and " << base << ".json ("
              << table.entries().size() << " grid points)\n";
    return 0;
}

void print_report(const RelationReport& r) {
    std::cout << r.system << ": " << r.verdict() << " (" << r.residuals.size() << " residuals, "
              << r.skipped.size() << " skipped)\n";
    if (const auto* f = r.first_nonzero())
        std::cout << "  first nonzero residual at " << f->point << " eq " << f->eq << " = "
                  << to_string(f->value) << "\n";
}

int cmd_check(const CommonOpts& o) {
    std::vector<RelationReport> reports;
    const GridSpec grid = grid_from(o);

    auto run_2t = [&]() {
        CommonOpts a = o;
        a.n = 2;
        CoefficientArray arr = load_or_generate(a);
        GridSpec halo = grid;
        halo.k_max += 1;
        halo.shift_hi += 1;
        TauTable t = build_table(arr, halo, {TauMethod::hankel}, o.jobs);
        reports.push_back(check_2T(t, grid));
    };
    auto run_3t = [&]() {
        CommonOpts a = o;
        a.n = 3;
        CoefficientArray arr = load_or_generate(a);
        GridSpec halo = grid;
        halo.k_max += 1;
        halo.shift_lo -= 1;
        halo.shift_hi += 1;
        TauTable t = build_table(arr, halo, {TauMethod::minor}, o.jobs);
        reports.push_back(check_3T_three_term(t, grid));
        reports.push_back(check_3T_four_term(t, grid));
    };
    auto run_q = [&](int n) {
        CommonOpts a = o;
        a.n = n;
        reports.push_back(check_q_identities(load_or_generate_loop(a), grid));
    };
    auto run_hdiff = [&]() {
        CoefficientArray arr = load_or_generate(o);
        reports.push_back(check_h_differences(arr, grid));
    };
    auto run_nonneg = [&]() {
        CoefficientArray arr = load_or_generate(o);
        RelationReport r;
        r.system = "nonneg";
        std::vector<int> base_k(arr.n() - 1, 1), base_s(arr.n(), 0);
        for (int variant = 1; variant <= 3; ++variant)
            for (int i = (variant == 1 ? 0 : 1); i <= arr.n() - 1; ++i) {
                std::string pt = "variant=" + std::to_string(variant) + ",i=" + std::to_string(i);
                try {
                    bool ok = check_nonnegative(arr, variant, i, base_k, base_s);
                    r.residuals.push_back({pt, 0, ok ? Scalar(0) : Scalar(1)});
                } catch (const SingularBlock&) {
                    r.skipped.push_back({pt, "tau = 0, factorization missing"});
                }
            }
        reports.push_back(std::move(r));
    };
    auto run_conj_glinf = [&]() {
        CoefficientArray arr = load_or_generate(o);
        RelationReport merged;
        merged.system = "conj-glinf";
        merged.conjecture = arr.n() >= 4;
        std::vector<int> base_s(arr.n(), 0);
        const int kcap = arr.n() >= 4 ? 2 : grid.k_max;
        GridSpec kgrid{.k_max = kcap, .k_sum_max = -1, .shift_lo = 0, .shift_hi = 0};
        for (const auto& kv : grid_k_vectors(arr.n(), kgrid))
            for (int i = 0; i < arr.n(); ++i)
                merge_into(merged, probe_conjecture_glinf(arr, i, kv, base_s));
        reports.push_back(std::move(merged));
    };
    auto run_conj_gln = [&]() {
        QCoefficients q = load_or_generate_loop(o);
        RelationReport merged;
        merged.system = "conj-gln";
        merged.conjecture = q.n >= 4;
        std::vector<int> base_b(q.n, 0);
        const int kcap = q.n >= 4 ? 2 : grid.k_max;
        GridSpec kgrid{.k_max = kcap, .k_sum_max = -1, .shift_lo = 0, .shift_hi = 0};
        for (const auto& kv : grid_k_vectors(q.n, kgrid))
            for (int i = 1; i < q.n; ++i)
                merge_into(merged, probe_conjecture_gln(q, i, kv, base_b));
        reports.push_back(std::move(merged));
    };

    const std::string& s = o.suite;
    if (s == "2T") run_2t();
    else if (s == "3T") run_3t();
    else if (s == "2Q") run_q(2);
    else if (s == "3Q") run_q(3);
    else if (s == "hdiff") run_hdiff();
    else if (s == "nonneg") run_nonneg();
    else if (s == "conj-glinf") run_conj_glinf();
    else if (s == "conj-gln") run_conj_gln();
    else if (s == "all") {
        if (o.loop) {
            run_q(o.n);
            run_conj_gln();
        } else if (o.n == 2) {
            run_2t();
            run_hdiff();
            run_nonneg();
            run_conj_glinf();
        } else if (o.n == 3) {
            run_3t();
            run_hdiff();
            run_nonneg();
            run_conj_glinf();
        } else {
            run_nonneg();
            run_conj_glinf();
        }
    } else {
        throw CliError{2, "unknown suite: " + s};
    }

    bool pass = true;
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        RelationReport& r = reports[i];
        r.seed = o.seed;
        r.grid_desc = "k<=" + std::to_string(grid.k_max) + ", shifts " + o.shifts;
        print_report(r);
        out << r.to_json() << (i + 1 < reports.size() ? "," : "") << "\n";
        if (!r.conjecture && r.verdict() != "pass") pass = false;
    }
    out << "]\n";
    if (!o.out_path.empty()) write_file(o.out_path, out.str());
    return pass ? 0 : 1;
}

int cmd_factor(const CommonOpts& o) {
    CoefficientArray arr = load_or_generate(o);
    std::vector<int> k = o.kvec.empty() ? std::vector<int>(arr.n() - 1, 1) : o.kvec;
    std::vector<int> s = o.shiftvec.empty() ? std::vector<int>(arr.n(), 0) : o.shiftvec;
    if (static_cast<int>(k.size()) != arr.n() - 1 || static_cast<int>(s.size()) != arr.n())
        throw CliError{2, "factor: need n-1 translation indices and n shifts"};

    Scalar tau = tau_minor(arr, k, s);
    std::ostringstream out;
    out << "{\n  \"n\": " << arr.n() << ",\n  \"k\": [";
    for (std::size_t i = 0; i < k.size(); ++i) out << (i ? "," : "") << k[i];
    out << "],\n  \"shifts\": [";
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
    out << "],\n  \"tau_num\": \"" << tau.get_num().get_str() << "\",\n  \"tau_den\": \""
        << tau.get_den().get_str() << "\",\n";
    try {
        HTable h = extract_h(gauss_factorize(build_group_element(arr, s, k)));
        out << "  \"g_minus\": [\n";
        bool first = true;
        for (const auto& [key, v] : h.entries()) {
            if (!first) out << ",\n";
            first = false;
            out << "    {\"a\": " << key[0] << ", \"b\": " << key[1] << ", \"i\": " << key[2]
                << ", \"j\": " << key[3] << ", \"num\": \"" << v.get_num().get_str()
                << "\", \"den\": \"" << v.get_den().get_str() << "\"}";
        }
        out << "\n  ]\n}\n";
    } catch (const SingularBlock&) {
        out << "  \"g_minus\": null,\n  \"error\": \"tau = 0, no Gauss factorization\"\n}\n";
    }
    if (o.out_path.empty())
        std::cout << out.str();
    else
        write_file(o.out_path, out.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tau-function laboratory for lower-triangular subgroup actions"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string config_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "component count");
        sub->add_option("--seed", o.seed, "generation seed");
        sub->add_option("--box", o.box, "support box ROWSxCOLS");
        sub->add_option("--origin", o.origin, "support box origin I,J");
        sub->add_flag("--loop", o.loop, "loop (anti-diagonal-constant) data");
        sub->add_option("--in", o.in_path, "input coefficient file");
        sub->add_option("--out", o.out_path, "output path");
        sub->add_option("--grid", o.grid, "translation index bound");
        sub->add_option("--ksum", o.ksum, "translation index sum bound (-1: none)");
        sub->add_option("--shifts", o.shifts, "shift range LO:HI");
        sub->add_option("--jobs", o.jobs, "worker threads (env TAULAB_JOBS)");
        sub->add_option("--config", config_path, "JSON config file (flags win)");
    };

    CLI::App* gen = app.add_subcommand("gen", "write a seeded random coefficient file");
    add_common(gen);
    CLI::App* tau = app.add_subcommand("tau", "build tau tables by the requested methods");
    add_common(tau);
    tau->add_option("--methods", o.methods, "comma list: hankel,minor,fock,residue");
    CLI::App* check = app.add_subcommand("check", "run a verification suite");
    add_common(check);
    check->add_option("--suite", o.suite, "2T|2Q|3T|3Q|hdiff|nonneg|conj-gln|conj-glinf|all");
    CLI::App* factor = app.add_subcommand("factor", "dump the Gauss factorization of one instance");
    add_common(factor);
    factor->add_option("--k", o.kvec, "translation indices")->delimiter(',');
    factor->add_option("--shift", o.shiftvec, "shift vector")->delimiter(',');

    try {
        // config defaults before the real parse
        for (int i = 1; i + 1 < argc; ++i)
            if (std::string(argv[i]) == "--config") apply_config(app, argv[i + 1]);
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }

    try {
        if (gen->parsed()) return cmd_gen(o);
        if (tau->parsed()) return cmd_tau(o);
        if (check->parsed()) return cmd_check(o);
        if (factor->parsed()) return cmd_factor(o);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const CrossMethodMismatch& e) {
        std::cerr << "cross-method mismatch: " << e.what() << "\n";
        return 1;
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
