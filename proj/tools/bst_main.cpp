// bst: Bernoulli-Stirling triangles, polynomials and verification sweeps.
//
// Subcommands:
//   table <a|b|tandem|ainv|cycle|partition>   emit a triangle
//   poly <P|Q|S|sigma> <k>                    print exact coefficients
//   verify <suite>                            run a property sweep
//
// Flags override an optional key=value config file (--config or the
// BST_CONFIG environment variable), which overrides built-in defaults.
// Exit codes: 0 pass, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "bst/bstriangle.hpp"
#include "bst/render.hpp"
#include "bst/stirling.hpp"
#include "bst/suites.hpp"

namespace {

struct Options {
    bst::SweepConfig cfg;
    std::string format = "pretty";
    std::string config_path;
};

int usage_error(const std::string& message)
{
    std::cerr << "error: " << message << "\n";
    return 2;
}

// key=value lines; '#' starts a comment
std::map<std::string, std::string> read_config(const std::string& path)
{
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

// config file fills in whatever the command line left untouched
void apply_config(Options& opt, const CLI::App& app)
{
    std::string path = opt.config_path;
    if (path.empty())
        if (const char* env = std::getenv("BST_CONFIG"))
            path = env;
    if (path.empty())
        return;
    const auto kv = read_config(path);
    auto set_long = [&](const char* flag, const char* key, long& target) {
        auto it = kv.find(key);
        if (it != kv.end() && app.count(flag) == 0)
            target = std::stol(it->second);
    };
    set_long("--max-n", "max-n", opt.cfg.max_n);
    set_long("--max-k", "max-k", opt.cfg.max_k);
    set_long("--min", "min", opt.cfg.min_index);
    set_long("--max", "max", opt.cfg.max_index);
    set_long("--primes-to", "primes-to", opt.cfg.primes_to);
    set_long("--truncation", "truncation", opt.cfg.truncation);
    if (auto it = kv.find("format"); it != kv.end() && app.count("--format") == 0)
        opt.format = it->second;
    if (auto it = kv.find("out"); it != kv.end() && app.count("--out") == 0)
        opt.cfg.out_path = it->second;
}

int emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
    }
    out << text;
    return 0;
}

int run_table(const Options& opt, const std::string& kind_name)
{
    const auto kind = bst::parse_table_kind(kind_name);
    if (!kind)
        return usage_error("unknown table kind: " + kind_name);
    const auto grid = bst::make_table(*kind, opt.cfg);
    return emit(bst::render_table(grid, opt.cfg.format), opt.cfg.out_path);
}

int run_poly(const Options& opt, const std::string& family, long k)
{
    bst::Polynomial p;
    if (family == "P") {
        p = bst::p_polynomial(k);
    } else if (family == "Q") {
        p = bst::q_polynomial(k);
    } else if (family == "S") {
        if (k < 1)
            return usage_error("poly S needs k >= 1");
        p = bst::s_polynomial(k);
    } else if (family == "sigma") {
        if (k < 1)
            return usage_error("poly sigma needs k >= 1");
        p = bst::sigma_polynomial(k);
    } else {
        return usage_error("unknown polynomial family: " + family);
    }
    return emit(bst::render_polynomial(p, opt.cfg.format), opt.cfg.out_path);
}

int run_verify(const Options& opt, const std::string& suite_name)
{
    const auto suite = bst::parse_suite_kind(suite_name);
    if (!suite)
        return usage_error("unknown verify suite: " + suite_name);
    const auto results = bst::run_suite(*suite, opt.cfg);
    std::ostringstream out;
    long failures = 0;
    for (const auto& r : results) {
        if (!r.pass)
            ++failures;
        if (opt.cfg.format != bst::OutputFormat::pretty || !r.pass)
            out << bst::render_claim(r, opt.cfg.format) << "\n";
    }
    if (opt.cfg.format == bst::OutputFormat::pretty)
        out << (failures ? "FAIL" : "PASS") << " " << suite_name << ": "
            << (results.size() - static_cast<std::size_t>(failures)) << "/"
            << results.size() << " claims passed\n";
    const int rc = emit(out.str(), opt.cfg.out_path);
    if (rc != 0)
        return rc;
    return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv)
{
    Options opt;
    CLI::App app{"Bernoulli-Stirling number toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_option("--config", opt.config_path, "key=value config file");
    app.add_option("--max-n", opt.cfg.max_n, "largest row index");
    app.add_option("--max-k", opt.cfg.max_k, "largest column index");
    app.add_option("--min", opt.cfg.min_index, "tandem window lower bound");
    app.add_option("--max", opt.cfg.max_index, "tandem window upper bound");
    app.add_option("--primes-to", opt.cfg.primes_to, "largest prime in sweeps");
    app.add_option("--truncation", opt.cfg.truncation, "truncation depth for p-adic sweeps");
    app.add_option("--format", opt.format, "pretty, csv or json");
    app.add_option("--out", opt.cfg.out_path, "write output to a file");

    std::string table_kind;
    auto* table = app.add_subcommand("table", "emit a triangle");
    table->add_option("kind", table_kind, "a, b, tandem, ainv, cycle or partition")
        ->required();

    std::string poly_family;
    long poly_index = 0;
    auto* poly = app.add_subcommand("poly", "print a polynomial");
    poly->add_option("family", poly_family, "P, Q, S or sigma")->required();
    poly->add_option("k", poly_index, "family index")->required();

    std::string suite_name;
    auto* verify = app.add_subcommand("verify", "run a property sweep");
    verify->add_option("suite", suite_name,
                       "identities, triangles, duality, egf, congruences or all")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        apply_config(opt, app);
        const auto format = bst::parse_format(opt.format);
        if (!format)
            return usage_error("unknown format: " + opt.format);
        opt.cfg.format = *format;
        if (table->parsed())
            return run_table(opt, table_kind);
        if (poly->parsed())
            return run_poly(opt, poly_family, poly_index);
        if (verify->parsed())
            return run_verify(opt, suite_name);
        return usage_error("no subcommand given");
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
