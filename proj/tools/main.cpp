#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ctnorm/cli.hpp"

namespace {

// Values shared by the option callbacks below.
struct Flags {
    std::string format = "text";
    std::string out_path;
    double tol = 0.0;
    std::uint64_t seed = 1;
    int jobs = 0;
    double min_p_gap = 1e-6;
    double p = 0.0;
    double q = 0.0;
    std::int64_t n = 0;
    std::int64_t nmax = 0;
    std::string suites;
    bool use_oracle = false;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        const std::size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            if (start < s.size()) out.push_back(s.substr(start));
            break;
        }
        if (comma > start) out.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Norms, bounds and crossover constants of the Cauchy-Toeplitz matrices "
                 "T_n = [2/(1+2(i-j))]"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand

    Flags flags;
    app.add_option("--format", flags.format, "Output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", flags.out_path, "Write the report to this file instead of stdout");
    app.add_option("--tol", flags.tol, "Override table comparison tolerance");
    app.add_option("--seed", flags.seed, "Seed for randomized verification grids");
    app.add_option("--jobs", flags.jobs, "Worker threads for grid sweeps (0 = auto)");
    app.add_option("--min-p-gap", flags.min_p_gap, "Minimum p-1 accepted by zeta-based bounds");

    auto* norm = app.add_subcommand("norm", "Evaluate ||T_n||_p or ||T_n||_{p,q}");
    norm->add_option("--n", flags.n, "Matrix order")->required();
    norm->add_option("--p", flags.p, "Entry exponent (inf allowed)")->required();
    norm->add_option("--q", flags.q, "Column exponent (inf allowed)");
    norm->add_flag("--oracle", flags.use_oracle, "Use brute-force entry summation (n <= 10^4)");

    auto* bound = app.add_subcommand("bound", "Evaluate a bound report");
    bound->add_option("which", flags.suites, "bozkurt, refined or conjecture")->required();
    bound->add_option("--n", flags.n, "Matrix order");
    bound->add_option("--p", flags.p, "Exponent")->required();

    auto* root = app.add_subcommand("root", "Solve for a crossover constant");
    root->add_option("which", flags.suites, "delta, mu, delta_p, eta or epsilon")->required();
    root->add_option("--p", flags.p, "Exponent (delta_p, eta)");
    root->add_option("--n", flags.n, "Matrix order (eta, epsilon)");

    auto* thresholds = app.add_subcommand("thresholds", "Compute N1 and N2 for a given p");
    thresholds->add_option("--p", flags.p, "Exponent in (1, mu)")->required();

    auto* table = app.add_subcommand("table", "Reproduce golden table 1, 2 or 3");
    table->add_option("id,--table", flags.n, "Table id")->required()->check(CLI::Range(1, 3));

    auto* classify = app.add_subcommand("classify", "Predict and check the inequality region");
    classify->add_option("--n", flags.n, "Matrix order")->required();
    classify->add_option("--p", flags.p, "Entry exponent (inf allowed)")->required();
    classify->add_option("--q", flags.q, "Column exponent (inf allowed)")->required();

    auto* verify = app.add_subcommand("verify", "Run the verification sweep");
    verify->add_option("--suite", flags.suites,
                       "Comma-separated suite filter (default: all suites)");
    verify->add_option("--nmax", flags.nmax, "Cap the grid sizes of the sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ctnorm::cli::kExitOk : ctnorm::cli::kExitUsage;
    }

    ctnorm::cli::RunConfig config;
    try {
        config.format = ctnorm::report::parse_format(flags.format);
        config.out_path = flags.out_path;
        config.tol_override = flags.tol;
        config.n = flags.n;
        config.use_oracle = flags.use_oracle;
        config.verify.seed = flags.seed;
        config.verify.jobs = flags.jobs;
        config.verify.nmax = flags.nmax;
        config.verify.policy.min_p_gap = flags.min_p_gap;
        if (norm->count("--p") || bound->count("--p") || root->count("--p") ||
            thresholds->count("--p") || classify->count("--p"))
            config.p = flags.p;
        if (norm->count("--q") || classify->count("--q")) config.q = flags.q;

        if (norm->parsed()) {
            config.command = ctnorm::cli::Command::norm;
        } else if (bound->parsed()) {
            config.command = ctnorm::cli::Command::bound;
            config.which = flags.suites;
            if (config.n == 0) config.n = 2;  // constants ignore n; reports need one
        } else if (root->parsed()) {
            config.command = ctnorm::cli::Command::root;
            config.which = flags.suites;
        } else if (thresholds->parsed()) {
            config.command = ctnorm::cli::Command::thresholds;
        } else if (table->parsed()) {
            config.command = ctnorm::cli::Command::table;
            config.table_id = static_cast<int>(flags.n);
        } else if (classify->parsed()) {
            config.command = ctnorm::cli::Command::classify;
        } else {
            config.command = ctnorm::cli::Command::verify;
            config.verify.suites = split_csv(flags.suites);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return ctnorm::cli::kExitUsage;
    }

    return ctnorm::cli::run(config, std::cout, std::cerr);
}
