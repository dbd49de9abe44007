#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilcone/partition.hpp"
#include "nilcone/pointio.hpp"
#include "nilcone/qpoly.hpp"

namespace nilcone {

enum class Cone { Ordinary, Enhanced, Exotic };
Cone cone_from_string(const std::string& s);
std::string cone_to_string(Cone c);

struct LeviFactor {
    std::string kind; // "GL" or "Sp"
    int rank = 0;
};

/// One orbit row: combinatorial data, the exact polynomials (ascending
/// coefficients) and their evaluations at the requested field sizes.
struct OrbitReport {
    std::vector<int> mu, nu, lambda;
    long long b = 0;
    std::vector<int> J;
    std::vector<LeviFactor> levi;
    long long unipotent_dim = 0;
    std::vector<BigInt> orbit_poly;
    std::vector<BigInt> stab_poly;
    std::vector<std::pair<int, BigInt>> counts;
    std::optional<bool> bfs_verified;
};

struct CensusOptions {
    Cone cone = Cone::Enhanced;
    int n = 0;
    std::vector<int> qs{2, 3, 4, 5, 7, 8, 9};
    bool run_bfs = false;
    uint64_t budget = 1ull << 22;
    int threads = 1;
    int max_n = 16;
};

struct Census {
    CensusOptions opt;
    std::vector<OrbitReport> rows;
    std::vector<std::pair<int, BigInt>> totals;
    std::vector<std::pair<int, BigInt>> expected;
};

Census run_census(const CensusOptions& opt);
std::string census_to_json(const Census& c);
std::string census_to_csv(const Census& c);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string observed;
    std::string expected;
};

struct VerifyOptions {
    std::string suite; // symbolic | enhanced-bfs | exotic-bfs | fini | levi | commutant
    int n = -1;        // -1: suite default
    int q = 2;
    uint64_t budget = 1ull << 22;
    int threads = 1;
};

std::vector<CheckResult> run_verify(const VerifyOptions& opt);
bool all_passed(const std::vector<CheckResult>& checks);
std::string checks_to_text(const std::vector<CheckResult>& checks);
std::string checks_to_json(const std::vector<CheckResult>& checks);

struct OrbitOfResult {
    bool exotic = false;
    int q = 0;
    Bipartition bp;
    OrbitReport report;
};

OrbitOfResult run_orbit_of(const PointFile& pf, uint64_t budget);
std::string orbit_of_to_text(const OrbitOfResult& r);
std::string orbit_of_to_json(const OrbitOfResult& r);

/// Builds the report row for one (bi)partition of the given cone.
OrbitReport make_report(Cone cone, const Bipartition& bp, const std::vector<int>& qs);

} // namespace nilcone
