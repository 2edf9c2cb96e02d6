// Command-line front end: verification suites, bracket computations,
// structure-constant tables, and basis dumps with machine-readable output.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gbr/verify_suites.hpp"

using json = nlohmann::ordered_json;
using namespace gbr;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kDegreeCap = 5;  // lifted by --force

struct Options {
    std::uint32_t order = 0;
    std::uint32_t charac = 0;
    int max_degree = 4;
    std::string format = "json";
    std::uint64_t seed = 12345;
    bool force = false;
    bool oracle = false;
    std::string left;
    std::string right;
    int basis_degree = 2;
};

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitUsage;
}

bool parse_class(const std::string& s, long long& deg, long long& exp) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return false;
    try {
        deg = std::stoll(s.substr(0, comma));
        exp = std::stoll(s.substr(comma + 1));
    } catch (const std::exception&) {
        return false;
    }
    return deg >= 0;
}

json graded_to_json(const GradedElt& e) {
    json arr = json::array();
    for (const auto& [key, c] : e.terms())
        arr.push_back({{"degree", key.first}, {"exp", key.second}, {"coeff", c.v}});
    return arr;
}

json header(const Options& opt, const std::string& command) {
    json j;
    j["p"] = opt.charac;
    j["order"] = opt.order;
    j["command"] = command;
    return j;
}

int cmd_verify(const GroupCtx& ctx, const Options& opt) {
    auto reports = run_verification(ctx, opt.max_degree, opt.seed);
    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed;

    if (opt.format == "csv") {
        std::cout << "name,checks,passed,first_failure\n";
        for (const auto& r : reports)
            std::cout << r.name << ',' << r.checks << ',' << (r.passed ? 1 : 0) << ",\""
                      << r.first_failure << "\"\n";
    } else {
        json j = header(opt, "verify");
        j["max_degree"] = opt.max_degree;
        j["seed"] = opt.seed;
        json suites = json::array();
        for (const auto& r : reports) {
            json s;
            s["name"] = r.name;
            s["checks"] = r.checks;
            s["passed"] = r.passed;
            if (!r.passed) s["first_failure"] = r.first_failure;
            suites.push_back(s);
        }
        j["suites"] = suites;
        j["passed"] = all_passed;
        std::cout << j.dump(2) << "\n";
    }
    return all_passed ? kExitPass : kExitFailure;
}

int cmd_bracket(const GroupCtx& ctx, const Options& opt) {
    long long nl, il, nr, ir;
    if (!parse_class(opt.left, nl, il) || !parse_class(opt.right, nr, ir))
        return usage_error("--left/--right must be of the form <degree>,<exponent>");
    const int out_degree = static_cast<int>(nl + nr) - 1;
    if (opt.oracle && !opt.force && out_degree > kDegreeCap)
        return usage_error("bracket degree " + std::to_string(out_degree) +
                           " exceeds the resource guard (use --force)");
    BasisClass a{static_cast<int>(nl), ctx.g(il).exp, ctx.field().one()};
    BasisClass b{static_cast<int>(nr), ctx.g(ir).exp, ctx.field().one()};

    GradedElt closed = closed_bracket(ctx, a, b);
    json j = header(opt, "bracket");
    j["left"] = {{"degree", a.degree}, {"exp", a.exp}};
    j["right"] = {{"degree", b.degree}, {"exp", b.exp}};
    j["result"] = graded_to_json(closed);
    bool match = true;
    if (opt.oracle) {
        GradedElt oracle = oracle_bracket(ctx, a, b);
        match = closed == oracle;
        j["oracle"] = graded_to_json(oracle);
        j["match"] = match;
    }
    if (opt.format == "csv") {
        std::cout << "degree,exp,coeff\n";
        for (const auto& [key, c] : closed.terms())
            std::cout << key.first << ',' << key.second << ',' << c.v << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return match ? kExitPass : kExitFailure;
}

int cmd_table(const GroupCtx& ctx, const Options& opt) {
    const std::uint32_t m = ctx.order();
    const bool csv = opt.format == "csv";
    json rows = json::array();
    if (csv) std::cout << "n,i,m,j,out_degree,out_exp,coeff\n";
    for (int n = 1; n <= opt.max_degree; ++n)
        for (std::uint32_t i = 0; i < m; ++i)
            for (int md = 1; md <= opt.max_degree; ++md)
                for (std::uint32_t j = 0; j < m; ++j) {
                    GradedElt e = closed_bracket(ctx, BasisClass{n, i, ctx.field().one()},
                                                 BasisClass{md, j, ctx.field().one()});
                    const int out_degree = n + md - 1;
                    const std::uint32_t out_exp = (i + j) % m;
                    std::uint32_t coeff = 0;
                    if (!e.is_zero()) coeff = e.terms().begin()->second.v;
                    if (csv) {
                        std::cout << n << ',' << i << ',' << md << ',' << j << ','
                                  << out_degree << ',' << out_exp << ',' << coeff << "\n";
                    } else {
                        rows.push_back({{"n", n},
                                        {"i", i},
                                        {"m", md},
                                        {"j", j},
                                        {"out_degree", out_degree},
                                        {"out_exp", out_exp},
                                        {"coeff", coeff}});
                    }
                }
    if (!csv) {
        json j = header(opt, "table");
        j["max_degree"] = opt.max_degree;
        j["result"] = rows;
        std::cout << j.dump(2) << "\n";
    }
    return kExitPass;
}

int cmd_basis(const GroupCtx& ctx, const Options& opt) {
    const int n = opt.basis_degree;
    if (n < 0) return usage_error("--degree must be >= 0");
    if (!opt.force && n > kDegreeCap)
        return usage_error("degree " + std::to_string(n) +
                           " exceeds the resource guard (use --force)");
    GroupCochain beta = beta_n(ctx, n);
    const bool csv = opt.format == "csv";
    json rows = json::array();
    if (csv) std::cout << "tuple,value\n";
    for (std::size_t idx = 0; idx < beta.values.size(); ++idx) {
        if (beta.values[idx].v == 0) continue;
        auto t = decode_tuple(ctx, idx, n);
        if (csv) {
            for (std::size_t k = 0; k < t.size(); ++k)
                std::cout << (k ? " " : "") << t[k].exp;
            std::cout << ',' << beta.values[idx].v << "\n";
        } else {
            json tuple = json::array();
            for (GroupElt x : t) tuple.push_back(x.exp);
            rows.push_back({{"tuple", tuple}, {"value", beta.values[idx].v}});
        }
    }
    if (!csv) {
        json j = header(opt, "basis");
        j["degree"] = n;
        j["result"] = rows;
        std::cout << j.dump(2) << "\n";
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gerstenhaber brackets for cyclic-group algebras in odd characteristic"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", opt.order, "group order m")->required();
        sub->add_option("--char", opt.charac, "field characteristic p")->required();
        sub->add_option("--max-degree", opt.max_degree, "largest degree to sweep");
        sub->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--seed", opt.seed, "seed for randomized suites");
        sub->add_flag("--force", opt.force, "lift the resource guard");
    };

    CLI::App* verify = app.add_subcommand("verify", "run every verification suite");
    add_common(verify);
    CLI::App* bracket = app.add_subcommand("bracket", "bracket of two basis classes");
    add_common(bracket);
    bracket->add_option("--left", opt.left, "left class as <degree>,<exponent>")->required();
    bracket->add_option("--right", opt.right, "right class as <degree>,<exponent>")->required();
    bracket->add_flag("--oracle", opt.oracle, "cross-check through the Hochschild complex");
    CLI::App* table = app.add_subcommand("table", "structure-constant table");
    add_common(table);
    CLI::App* basis = app.add_subcommand("basis", "support of a basis cocycle");
    add_common(basis);
    basis->add_option("--degree", opt.basis_degree, "cocycle degree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    if (!is_odd_prime(opt.charac)) return usage_error("p must be an odd prime");
    if (opt.order == 0 || opt.order % opt.charac != 0)
        return usage_error("p must divide order");
    if (opt.max_degree < 1) return usage_error("--max-degree must be >= 1");

    try {
        GroupCtx ctx(opt.order, opt.charac);
        if (opt.force) ctx.set_alloc_budget(static_cast<std::size_t>(-1) / (2 * ctx.order()));
        if (verify->parsed()) return cmd_verify(ctx, opt);
        if (bracket->parsed()) return cmd_bracket(ctx, opt);
        if (table->parsed()) return cmd_table(ctx, opt);
        if (basis->parsed()) return cmd_basis(ctx, opt);
    } catch (const alloc_guard_error& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
