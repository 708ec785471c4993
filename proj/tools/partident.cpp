#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "partident/identities.hpp"
#include "partident/output.hpp"
#include "partident/partitions.hpp"
#include "partident/qseries.hpp"
#include "partident/totient.hpp"

namespace {

using namespace partident;

struct Range {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
};

// "a" or "a..b", inclusive
Range parse_range(const std::string& text) {
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            const unsigned long v = std::stoul(text);
            return {static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v)};
        }
        const unsigned long lo = std::stoul(text.substr(0, sep));
        const unsigned long hi = std::stoul(text.substr(sep + 2));
        if (lo > hi)
            throw std::invalid_argument("range lower bound exceeds upper bound");
        return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi)};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("malformed range '" + text +
                                    "' (expected N or LO..HI)");
    }
}

int emit(const OutputRecord& record, const std::string& format,
         const std::string& out_path) {
    const std::string payload = format == "json" ? to_json(record) : to_csv(record);
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << out_path << "'\n";
        return 2;
    }
    out << payload;
    return 0;
}

struct ComputeOptions {
    std::string target;
    std::uint32_t max_n = 0;
    bool have_max_n = false;
    std::uint32_t r = 1;
    bool have_r = false;
    std::string n_arg;
    std::string k_arg;
    std::string format = "csv";
    std::string out_path;
};

OutputRecord compute_record(const ComputeOptions& opt) {
    OutputRecord record;
    record.command = "compute " + opt.target;
    record.status = OutputRecord::Status::not_applicable;

    auto row = [&](auto... fields) {
        record.rows.push_back({fields...});
    };

    if (opt.target == "p" || opt.target == "p_r") {
        if (!opt.have_max_n)
            throw std::invalid_argument("compute " + opt.target +
                                        " requires --max-n");
        if (opt.target == "p_r" && (!opt.have_r || opt.r < 1))
            throw std::invalid_argument("compute p_r requires --r >= 1");
        const std::uint32_t r = opt.target == "p" ? 1 : opt.r;
        if (opt.target == "p_r")
            record.parameters.emplace_back("r", std::to_string(r));
        record.parameters.emplace_back("max_n", std::to_string(opt.max_n));
        record.columns = {"n", opt.target};
        if (opt.target == "p") {
            const auto p = partition_count(opt.max_n);
            for (std::uint32_t n = 0; n <= opt.max_n; ++n)
                row(std::to_string(n), p[n].get_str());
        } else {
            const auto table = build_partition_table(r, opt.max_n);
            for (std::uint32_t n = 0; n <= opt.max_n; ++n)
                row(std::to_string(n), table.count(n).get_str());
        }
        return record;
    }

    if (opt.target == "phi") {
        if (!opt.have_max_n || opt.max_n < 1)
            throw std::invalid_argument("compute phi requires --max-n >= 1");
        record.parameters.emplace_back("max_n", std::to_string(opt.max_n));
        record.columns = {"n", "phi"};
        const auto table = build_totient_table(opt.max_n);
        for (std::uint32_t n = 1; n <= opt.max_n; ++n)
            row(std::to_string(n), std::to_string(table.phi(n)));
        return record;
    }

    if (opt.target == "P_phi") {
        if (!opt.have_max_n || opt.max_n < 3)
            throw std::invalid_argument("compute P_phi requires --max-n >= 3");
        record.parameters.emplace_back("max_n", std::to_string(opt.max_n));
        record.columns = {"n", "P_phi"};
        const auto table = build_totient_table(opt.max_n);
        for (std::uint32_t n = 3; n <= opt.max_n; ++n)
            row(std::to_string(n), std::to_string(half_totient(table, n)));
        return record;
    }

    // S: total count of parts equal to k over partitions of n with smallest
    // part >= r
    if (!opt.have_r || opt.n_arg.empty() || opt.k_arg.empty())
        throw std::invalid_argument(
            "compute S requires --r, --n/--n-range and --k/--k-range");
    const Range n_range = parse_range(opt.n_arg);
    const Range k_range = parse_range(opt.k_arg);
    if (opt.r < 1)
        throw std::invalid_argument("compute S requires --r >= 1");
    if (k_range.lo < opt.r)
        throw std::invalid_argument("compute S requires k >= r");

    record.parameters.emplace_back("r", std::to_string(opt.r));
    record.parameters.emplace_back("n", opt.n_arg);
    record.parameters.emplace_back("k", opt.k_arg);
    record.columns = {"n", "k", "S"};
    const auto table = build_partition_table(opt.r, n_range.hi);
    for (std::uint32_t n = n_range.lo; n <= n_range.hi; ++n)
        for (std::uint32_t k = k_range.lo; k <= k_range.hi; ++k)
            row(std::to_string(n), std::to_string(k),
                total_part_count(table, n, k).get_str());
    return record;
}

struct VerifyOptions {
    std::string identity;
    std::uint32_t max_n = 100;
    std::uint32_t oracle_max_n = 25;
    std::uint64_t seed = 42;
    std::string format = "csv";
    std::string out_path;
};

std::vector<IdentityReport> run_verifications(const VerifyOptions& opt) {
    const bool all = opt.identity == "all";
    std::vector<IdentityReport> reports;

    // requested bounds are floored at each identity's smallest verifiable
    // case; the ranges actually swept are echoed in the reports.
    // enumeration-only identities (stanley, weighted-form) sweep the oracle
    // range, everything else the formula range.
    if (all || opt.identity == "stanley")
        reports.push_back(verify_stanley(std::max(1u, opt.oracle_max_n)));
    if (all || opt.identity == "theorem2")
        reports.push_back(verify_theorem2(std::max(1u, opt.max_n), opt.oracle_max_n));
    if (all || opt.identity == "theorem3")
        reports.push_back(verify_theorem3(opt.max_n, opt.oracle_max_n));
    if (all || opt.identity == "interchange")
        reports.push_back(verify_interchange(100, std::max(1u, opt.max_n), opt.seed));
    if (all || opt.identity == "weighted-form")
        reports.push_back(verify_weighted_form(std::max(2u, opt.oracle_max_n)));
    if (all || opt.identity == "euler-divisor-sum")
        reports.push_back(verify_euler_divisor_sum(std::max(1u, opt.max_n)));
    if (all || opt.identity == "lambert")
        reports.push_back(verify_lambert(std::max(1u, opt.max_n)));
    if (all || opt.identity == "qseries-chains") {
        const std::uint32_t order = std::max(3u, opt.max_n);
        reports.push_back(replay_theorem2_chain(order));
        reports.push_back(replay_theorem3_chain(order));
    }
    return reports;
}

int run_verify(const VerifyOptions& opt) {
    const auto reports = run_verifications(opt);

    OutputRecord record;
    record.command = "verify " + opt.identity;
    record.parameters.emplace_back("max_n", std::to_string(opt.max_n));
    record.parameters.emplace_back("oracle_max_n", std::to_string(opt.oracle_max_n));
    record.parameters.emplace_back("seed", std::to_string(opt.seed));
    record.columns = report_columns();
    bool all_passed = true;
    for (const auto& report : reports) {
        record.rows.push_back(report_row(report));
        all_passed = all_passed && report.passed();
    }
    record.status =
        all_passed ? OutputRecord::Status::pass : OutputRecord::Status::fail;

    const int rc = emit(record, opt.format, opt.out_path);
    if (rc != 0)
        return rc;
    return all_passed ? 0 : 1;
}

struct BenchOptions {
    std::uint32_t max_n = 1000;
    std::uint32_t reps = 1;
    std::string format = "csv";
    std::string out_path;
};

int run_bench(const BenchOptions& opt) {
    OutputRecord record;
    record.command = "bench";
    record.parameters.emplace_back("max_n", std::to_string(opt.max_n));
    record.parameters.emplace_back("reps", std::to_string(opt.reps));
    record.columns = {"phase", "reps", "total_ms", "mean_ms"};
    record.status = OutputRecord::Status::not_applicable;

    const std::uint32_t reps = std::max(1u, opt.reps);
    const auto tot = build_totient_table(std::max(1u, opt.max_n));

    auto timed = [&](const std::string& phase, auto&& work) {
        using clock = std::chrono::steady_clock;
        const auto start = clock::now();
        for (std::uint32_t i = 0; i < reps; ++i)
            work();
        const auto stop = clock::now();
        const double total_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        std::ostringstream total, mean;
        total.precision(3);
        mean.precision(3);
        total << std::fixed << total_ms;
        mean << std::fixed << total_ms / reps;
        record.rows.push_back({phase, std::to_string(reps), total.str(), mean.str()});
    };

    timed("totient_sieve", [&] { build_totient_table(std::max(1u, opt.max_n)); });
    for (std::uint32_t r = 1; r <= 3; ++r)
        timed("partition_table_r" + std::to_string(r),
              [&] { build_partition_table(r, opt.max_n); });
    timed("pentagonal_p", [&] { partition_count(opt.max_n); });
    timed("lambert_series", [&] { lambert_phi(tot, opt.max_n); });
    if (opt.max_n >= 1)
        timed("theorem2_sweep", [&] { verify_theorem2(opt.max_n); });
    timed("theorem3_sweep", [&] { verify_theorem3(opt.max_n); });

    return emit(record, opt.format, opt.out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition and totient identity toolkit"};
    app.require_subcommand(1);

    ComputeOptions copt;
    VerifyOptions vopt;
    BenchOptions bopt;
    int rc = 0;

    auto* compute = app.add_subcommand(
        "compute", "compute a table: p, p_r, phi, S or P_phi");
    compute->add_option("target", copt.target, "one of p, p_r, phi, S, P_phi")
        ->required()
        ->check(CLI::IsMember({"p", "p_r", "phi", "S", "P_phi"}));
    auto* max_n_opt =
        compute->add_option("--max-n", copt.max_n, "table range 0..max-n");
    auto* r_opt =
        compute->add_option("--r", copt.r, "smallest allowed part (p_r, S)");
    auto* n_opt = compute->add_option("--n", copt.n_arg, "single n (S)");
    compute->add_option("--n-range", copt.n_arg, "n range LO..HI (S)")
        ->excludes(n_opt);
    auto* k_opt = compute->add_option("--k", copt.k_arg, "single k (S)");
    compute->add_option("--k-range", copt.k_arg, "k range LO..HI (S)")
        ->excludes(k_opt);
    compute->add_option("--format", copt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    compute->add_option("--out", copt.out_path, "write payload to file");
    compute->callback([&] {
        copt.have_max_n = max_n_opt->count() > 0;
        copt.have_r = r_opt->count() > 0;
        rc = emit(compute_record(copt), copt.format, copt.out_path);
    });

    auto* verify = app.add_subcommand("verify", "verify an identity family");
    verify
        ->add_option("identity", vopt.identity,
                     "stanley, theorem2, theorem3, interchange, weighted-form, "
                     "euler-divisor-sum, lambert, qseries-chains or all")
        ->required()
        ->check(CLI::IsMember({"stanley", "theorem2", "theorem3", "interchange",
                               "weighted-form", "euler-divisor-sum", "lambert",
                               "qseries-chains", "all"}));
    verify->add_option("--max-n", vopt.max_n,
                       "closed-formula sweep bound (default 100)");
    verify->add_option("--oracle-max-n", vopt.oracle_max_n,
                       "enumeration sweep bound (default 25)");
    verify->add_option("--seed", vopt.seed, "seed for randomized instances");
    verify->add_option("--format", vopt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", vopt.out_path, "write payload to file");
    verify->callback([&] { rc = run_verify(vopt); });

    auto* bench = app.add_subcommand("bench", "time table builds and sweeps");
    bench->add_option("--max-n", bopt.max_n, "size of timed builds");
    bench->add_option("--reps", bopt.reps, "repetitions per phase");
    bench->add_option("--format", bopt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    bench->add_option("--out", bopt.out_path, "write payload to file");
    bench->callback([&] { rc = run_bench(bopt); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
