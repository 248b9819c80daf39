#include "mdt/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mdt/class_expr.hpp"
#include "mdt/json_io.hpp"
#include "mdt/partitions.hpp"
#include "mdt/verify.hpp"

namespace mdt::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
    std::string format = "text";
    int threads = 0;  // 0: take MDT_THREADS, else 1
};

int effective_threads(const Options& o) {
    if (o.threads > 0) return o.threads;
    if (const char* env = std::getenv("MDT_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--threads", o.threads, "Worker threads for enumeration")
        ->check(CLI::PositiveNumber);
}

long parse_half_integer(const std::string& s) {
    // Accepts n or n/2, n a (signed) integer; returns twice the value.
    const auto slash = s.find('/');
    if (slash == std::string::npos) return 2 * std::stol(s);
    if (s.substr(slash + 1) != "2") throw std::invalid_argument("half-integers must be n or n/2");
    return std::stol(s.substr(0, slash));
}

std::string half_integer_string(long twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

// Per-term rows in the folded q-convention.
void weight_poly_csv_rows(std::ostream& out, long n, const WeightPoly& w) {
    for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) {
        const Int c = (it->first % 2 == 0) ? it->second : Int(-it->second);
        out << n << ',' << it->first << ',' << c.get_str() << '\n';
    }
}

void print_series(std::ostream& out, const Options& o, const TruncSeries<MotWeight>& s) {
    if (o.format == "json") {
        out << to_json(s).dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "n,coefficient\n";
        for (long n = 0; n <= s.order(); ++n) out << n << ',' << to_string(s[n]) << '\n';
    } else {
        for (long n = 0; n <= s.order(); ++n)
            out << "t^" << n << ": " << to_string(s[n]) << '\n';
    }
}

void print_series(std::ostream& out, const Options& o, const TruncSeries<WeightPoly>& s) {
    if (o.format == "json") {
        out << to_json(s).dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "n,q_half_exponent,coefficient\n";
        for (long n = 0; n <= s.order(); ++n) weight_poly_csv_rows(out, n, s[n]);
    } else {
        for (long n = 0; n <= s.order(); ++n)
            out << "t^" << n << ": " << to_string(s[n]) << '\n';
    }
}

void print_series(std::ostream& out, const Options& o, const TruncSeries<Int>& s) {
    if (o.format == "json") {
        out << to_json(s).dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "n,value\n";
        for (long n = 0; n <= s.order(); ++n) out << n << ',' << s[n].get_str() << '\n';
    } else {
        for (long n = 0; n <= s.order(); ++n) out << "t^" << n << ": " << s[n].get_str() << '\n';
    }
}

json identity_json(const IdentityResult& id) {
    json j{{"name", id.name}, {"order", id.order}, {"status", id.pass ? "pass" : "fail"}};
    if (id.first_failure_degree) j["first_failure_degree"] = *id.first_failure_degree;
    if (!id.lhs_sample.empty()) j["lhs"] = id.lhs_sample;
    if (!id.rhs_sample.empty()) j["rhs"] = id.rhs_sample;
    if (!id.note.empty()) j["note"] = id.note;
    return j;
}

int print_verify_report(std::ostream& out, const Options& o, const VerifyReport& rep) {
    if (o.format == "json") {
        json ids = json::array();
        for (const auto& id : rep.identities) ids.push_back(identity_json(id));
        out << json{{"suite", rep.suite},
                    {"status", rep.pass() ? "pass" : "fail"},
                    {"wall_seconds", rep.wall_seconds},
                    {"identities", ids}}
                   .dump(2)
            << '\n';
    } else if (o.format == "csv") {
        out << "identity,order,status,first_failure_degree\n";
        for (const auto& id : rep.identities) {
            out << '"' << id.name << "\"," << id.order << ','
                << (id.pass ? "pass" : "fail") << ',';
            if (id.first_failure_degree) out << *id.first_failure_degree;
            out << '\n';
        }
    } else {
        for (const auto& id : rep.identities) {
            out << (id.pass ? "[pass] " : "[FAIL] ") << id.name << " (order " << id.order
                << ")\n";
            if (!id.pass) {
                if (id.first_failure_degree)
                    out << "       first failure at degree " << *id.first_failure_degree << '\n';
                if (!id.lhs_sample.empty()) out << "       lhs: " << id.lhs_sample << '\n';
                if (!id.rhs_sample.empty()) out << "       rhs: " << id.rhs_sample << '\n';
            }
            if (!id.note.empty()) out << "       " << id.note << '\n';
        }
        out << "suite " << rep.suite << ": " << (rep.pass() ? "pass" : "FAIL") << " ("
            << rep.identities.size() << " identities, " << rep.wall_seconds << "s)\n";
    }
    return rep.pass() ? kExitOk : kExitVerifyFailure;
}

BettiVector parse_betti(const std::string& text) {
    BettiVector b;
    std::stringstream ss(text);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 7) throw std::invalid_argument("--betti takes exactly 7 entries b0,..,b6");
        b.b[i++] = std::stol(item);
        if (b.b[i - 1] < 0) throw std::invalid_argument("Betti numbers must be non-negative");
    }
    if (i != 7) throw std::invalid_argument("--betti takes exactly 7 entries b0,..,b6");
    return b;
}

int run_zc3(std::ostream& out, const Options& o, long order, const std::string& route) {
    if (route == "product" || route == "recursion") {
        const ZSeries z = route == "product" ? z_c3_product(order) : z_c3_recursion(order);
        if (o.format == "json") {
            json j = to_json(z.series);
            j["route"] = route_name(z.route);
            out << j.dump(2) << '\n';
        } else {
            print_series(out, o, z.series);
        }
        return kExitOk;
    }
    const ZSeries prod = z_c3_product(order);
    const ZSeries rec = z_c3_recursion(order);
    const bool agree = prod.series == rec.series;
    if (o.format == "json") {
        json j = to_json(prod.series);
        j["route"] = "both";
        j["routes_agree"] = agree;
        out << j.dump(2) << '\n';
    } else {
        print_series(out, o, prod.series);
        out << "routes_agree: " << (agree ? "true" : "false") << '\n';
    }
    return agree ? kExitOk : kExitVerifyFailure;
}

int run_zx(std::ostream& out, const Options& o, const std::string& class_expr,
           const std::string& betti_text, long order, std::string realize) {
    if (!betti_text.empty()) {
        if (realize.empty()) realize = "weight";
        if (realize != "weight")
            throw std::invalid_argument("--betti input supports only the weight realization");
        print_series(out, o, weight_partition_function(parse_betti(betti_text), order));
        return kExitOk;
    }
    if (realize.empty()) realize = "motivic";
    const MotWeight x = parse_class_expr(class_expr);
    const ZSeries z = z_x_exp(x, order);
    if (realize == "motivic")
        print_series(out, o, z.series);
    else if (realize == "weight")
        print_series(out, o, realize_weight(z.series));
    else
        print_series(out, o, realize_euler(z.series));
    return kExitOk;
}

int run_macmahon(std::ostream& out, const Options& o, const std::string& delta, long order,
                 bool oracle) {
    const long two_delta = parse_half_integer(delta);
    const TruncSeries<WeightPoly> product = refined_macmahon(two_delta, order);
    if (!oracle) {
        print_series(out, o, product);
        return kExitOk;
    }
    const TruncSeries<WeightPoly> sum = refined_sum(order, two_delta);
    const bool agree = product == sum;
    if (o.format == "json") {
        out << json{{"delta", half_integer_string(two_delta)},
                    {"order", order},
                    {"product", to_json(product)},
                    {"enumeration", to_json(sum)},
                    {"agree", agree}}
                   .dump(2)
            << '\n';
    } else {
        out << "product route:\n";
        print_series(out, o, product);
        out << "enumeration route:\n";
        print_series(out, o, sum);
        out << "agree: " << (agree ? "true" : "false") << '\n';
    }
    return agree ? kExitOk : kExitVerifyFailure;
}

int run_guess(std::ostream& out, const Options& o, long dim, long order, bool compare,
              int threads) {
    if (!compare) {
        print_series(out, o, macmahon_guess(dim, order));
        return kExitOk;
    }
    const GuessComparison cmp = compare_guess(dim, order, threads);
    if (o.format == "json") {
        json g = json::array();
        json c = json::array();
        for (long n = 0; n <= cmp.order; ++n) {
            g.push_back(cmp.guess[static_cast<std::size_t>(n)].get_str());
            c.push_back(cmp.counted[static_cast<std::size_t>(n)].get_str());
        }
        json j{{"dim", cmp.dim}, {"order", cmp.order}, {"guess", g}, {"enumeration", c}};
        if (cmp.first_mismatch) j["first_mismatch_degree"] = *cmp.first_mismatch;
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "n,guess,count\n";
        for (long n = 0; n <= cmp.order; ++n)
            out << n << ',' << cmp.guess[static_cast<std::size_t>(n)].get_str() << ','
                << cmp.counted[static_cast<std::size_t>(n)].get_str() << '\n';
    } else {
        for (long n = 0; n <= cmp.order; ++n) {
            const auto i = static_cast<std::size_t>(n);
            out << "n=" << n << ": guess " << cmp.guess[i].get_str() << ", enumeration "
                << cmp.counted[i].get_str()
                << (cmp.guess[i] == cmp.counted[i] ? "" : "   <- differ") << '\n';
        }
        if (cmp.first_mismatch)
            out << "first mismatch at n=" << *cmp.first_mismatch << '\n';
        else
            out << "no mismatch up to n=" << cmp.order << '\n';
    }
    return kExitOk;
}

int run_partition_count(std::ostream& out, const Options& o, long dim, long n, int threads) {
    const std::vector<Int> counts =
        count_dpartitions_upto(static_cast<int>(dim), static_cast<int>(n), threads);
    if (o.format == "json") {
        json c = json::array();
        for (const auto& v : counts) c.push_back(v.get_str());
        out << json{{"dim", dim}, {"n", n}, {"counts", c}}.dump(2) << '\n';
    } else {
        out << "n,count\n";
        for (std::size_t i = 0; i < counts.size(); ++i)
            out << i << ',' << counts[i].get_str() << '\n';
    }
    return kExitOk;
}

int run_partition_refined(std::ostream& out, const Options& o, long n, const std::string& delta) {
    const long two_delta = parse_half_integer(delta);
    const TruncSeries<WeightPoly> sum = refined_sum(n, two_delta);
    if (o.format == "json") {
        out << to_json(sum).dump(2) << '\n';
    } else {
        out << "n,q_half_exponent,coefficient\n";
        for (long k = 0; k <= sum.order(); ++k) weight_poly_csv_rows(out, k, sum[k]);
    }
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact motivic degree-zero Donaldson-Thomas series calculator"};
    app.require_subcommand(1);
    Options opts;

    long zc3_order = -1;  // default depends on the route: 14 product, 8 recursion
    std::string zc3_route = "product";
    auto* zc3 = app.add_subcommand("zc3", "Partition function of affine 3-space");
    zc3->add_option("--order", zc3_order, "Truncation order")->check(CLI::NonNegativeNumber);
    zc3->add_option("--route", zc3_route, "Computation route")
        ->check(CLI::IsMember({"product", "recursion", "both"}));
    add_common(zc3, opts);

    std::string zx_class;
    std::string zx_betti;
    long zx_order = 14;
    std::string zx_realize;
    auto* zx = app.add_subcommand("zx", "Partition function of a threefold class");
    auto* zx_class_opt = zx->add_option("--class", zx_class, "Class expression, e.g. 1+L+L^2");
    auto* zx_betti_opt = zx->add_option("--betti", zx_betti, "Betti numbers b0,..,b6");
    zx_class_opt->excludes(zx_betti_opt);
    zx->add_option("--order", zx_order, "Truncation order")->check(CLI::NonNegativeNumber);
    zx->add_option("--realize", zx_realize, "Realization of the coefficients")
        ->check(CLI::IsMember({"motivic", "weight", "euler"}));
    add_common(zx, opts);

    long unified_dim = 3;
    std::string unified_class = "L^3";
    long unified_order = 14;
    auto* unified = app.add_subcommand("unified", "All-dimensions exponential formula");
    unified->add_option("--dim", unified_dim, "Dimension of the class")->required();
    unified->add_option("--class", unified_class, "Class expression");
    unified->add_option("--order", unified_order, "Truncation order")
        ->check(CLI::NonNegativeNumber);
    add_common(unified, opts);

    std::string mac_delta = "0";
    long mac_order = 14;
    bool mac_oracle = false;
    auto* mac = app.add_subcommand("macmahon", "Refined MacMahon function");
    mac->add_option("--delta", mac_delta, "Half-integer deformation, e.g. -3/2");
    mac->add_option("--order", mac_order, "Truncation order")->check(CLI::NonNegativeNumber);
    mac->add_flag("--oracle", mac_oracle, "Also enumerate plane partitions and compare");
    add_common(mac, opts);

    long guess_dim = 3;
    long guess_order = 8;
    bool guess_compare = false;
    auto* guess = app.add_subcommand("guess", "MacMahon's guessed product for d-partitions");
    guess->add_option("--dim", guess_dim, "Partition dimension (>= 2)")->required();
    guess->add_option("--order", guess_order, "Truncation order")->check(CLI::NonNegativeNumber);
    guess->add_flag("--compare", guess_compare, "Compare against enumeration");
    add_common(guess, opts);

    auto* parts = app.add_subcommand("partitions", "Brute-force partition enumeration");
    parts->require_subcommand(1);
    long pc_dim = 3;
    long pc_n = 8;
    auto* pcount = parts->add_subcommand("count", "Count order ideals by size");
    pcount->add_option("--dim", pc_dim, "Lattice dimension")->required();
    pcount->add_option("--n", pc_n, "Maximum size")->required();
    add_common(pcount, opts);
    long pr_n = 8;
    std::string pr_delta = "0";
    auto* prefined = parts->add_subcommand("refined", "Refined plane-partition statistics");
    prefined->add_option("--n", pr_n, "Maximum size")->required();
    prefined->add_option("--delta", pr_delta, "Half-integer deformation");
    add_common(prefined, opts);

    std::string verify_suite = "all";
    long verify_order = 8;
    auto* verify = app.add_subcommand("verify", "Run exact identity suites");
    verify->add_option("--suite", verify_suite, "Suite name")
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--order", verify_order, "Truncation order")
        ->check(CLI::NonNegativeNumber);
    add_common(verify, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const int threads = effective_threads(opts);
        if (zc3->parsed()) {
            if (zc3_order < 0) zc3_order = (zc3_route == "product") ? 14 : 8;
            return run_zc3(out, opts, zc3_order, zc3_route);
        }
        if (zx->parsed()) {
            if (zx_class.empty() && zx_betti.empty())
                throw std::invalid_argument("zx requires --class or --betti");
            return run_zx(out, opts, zx_class, zx_betti, zx_order, zx_realize);
        }
        if (unified->parsed()) {
            print_series(out, opts,
                         unified_formula(unified_dim, parse_class_expr(unified_class),
                                         unified_order)
                             .series);
            return kExitOk;
        }
        if (mac->parsed()) return run_macmahon(out, opts, mac_delta, mac_order, mac_oracle);
        if (guess->parsed())
            return run_guess(out, opts, guess_dim, guess_order, guess_compare, threads);
        if (parts->parsed()) {
            if (parts->get_subcommands().front()->get_name() == "count")
                return run_partition_count(out, opts, pc_dim, pc_n, threads);
            return run_partition_refined(out, opts, pr_n, pr_delta);
        }
        if (verify->parsed())
            return print_verify_report(out, opts, run_suite(verify_suite, verify_order, threads));
    } catch (const resource_limit_error& e) {
        err << "resource ceiling: " << e.what() << '\n';
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace mdt::cli
