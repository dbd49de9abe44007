#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nilcone/error.hpp"
#include "nilcone/report.hpp"

namespace {

int failure_exit(const std::exception& e, int code) {
    std::cerr << "error: " << e.what() << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbit and stabiliser census for nilpotent cones over small finite fields"};
    app.require_subcommand(1);

    // census
    auto* census = app.add_subcommand("census", "closed-form orbit table for one cone");
    std::string cone_name = "enhanced";
    int census_n = 0;
    std::vector<int> census_q;
    std::string census_format = "json";
    bool census_bfs = false;
    uint64_t budget = 1ull << 22;
    int threads = 1;
    census->add_option("--cone", cone_name, "ordinary | enhanced | exotic")->required();
    census->add_option("-n", census_n, "weight of the (bi)partitions")->required();
    census->add_option("--q", census_q, "field sizes (repeatable; default 2 3 4 5 7 8 9)");
    census->add_option("--format", census_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    census->add_flag("--bfs", census_bfs, "verify counts by orbit search where it fits the budget");
    census->add_option("--budget", budget, "state budget for searches (default 2^22)");
    census->add_option("--threads", threads, "worker threads for independent jobs");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    int verify_n = -1;
    std::vector<int> verify_q;
    std::string verify_format = "text";
    verify->add_option("--suite", suite,
                       "symbolic | enhanced-bfs | exotic-bfs | fini | levi | commutant")
        ->required();
    verify->add_option("-n", verify_n, "bound (suite-specific default)");
    verify->add_option("--q", verify_q, "field size for search-based suites (default 2)");
    verify->add_option("--format", verify_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--budget", budget, "state budget for searches (default 2^22)");
    verify->add_option("--threads", threads, "worker threads for independent jobs");

    // orbit-of
    auto* orbitof = app.add_subcommand("orbit-of", "classify a point file");
    std::string point_path;
    std::string orbit_format = "text";
    orbitof->add_option("file", point_path, "point file (see README for the format)")->required();
    orbitof->add_option("--format", orbit_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    orbitof->add_option("--budget", budget, "state budget for the classification search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (census->parsed()) {
            nilcone::CensusOptions opt;
            opt.cone = nilcone::cone_from_string(cone_name);
            opt.n = census_n;
            if (!census_q.empty()) opt.qs = census_q;
            opt.run_bfs = census_bfs;
            opt.budget = budget;
            opt.threads = threads;
            nilcone::Census c = nilcone::run_census(opt);
            std::cout << (census_format == "csv" ? nilcone::census_to_csv(c)
                                                 : nilcone::census_to_json(c));
            if (census_bfs)
                for (const auto& row : c.rows)
                    if (row.bfs_verified && !*row.bfs_verified) return 1;
            return 0;
        }
        if (verify->parsed()) {
            nilcone::VerifyOptions opt;
            opt.suite = suite;
            opt.n = verify_n;
            if (!verify_q.empty()) opt.q = verify_q.front();
            opt.budget = budget;
            opt.threads = threads;
            auto checks = nilcone::run_verify(opt);
            std::cout << (verify_format == "json" ? nilcone::checks_to_json(checks)
                                                  : nilcone::checks_to_text(checks));
            return nilcone::all_passed(checks) ? 0 : 1;
        }
        if (orbitof->parsed()) {
            std::ifstream in(point_path);
            if (!in) throw nilcone::input_error("cannot open file: " + point_path);
            nilcone::PointFile pf = nilcone::parse_point_file(in);
            auto res = nilcone::run_orbit_of(pf, budget);
            std::cout << (orbit_format == "json" ? nilcone::orbit_of_to_json(res)
                                                 : nilcone::orbit_of_to_text(res));
            return 0;
        }
    } catch (const nilcone::input_error& e) {
        return failure_exit(e, 2);
    } catch (const nilcone::budget_exceeded& e) {
        return failure_exit(e, 2);
    } catch (const std::exception& e) {
        return failure_exit(e, 1);
    }
    return 2;
}
