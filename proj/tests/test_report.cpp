#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "nilcone/enhanced.hpp"
#include "nilcone/error.hpp"
#include "nilcone/exotic.hpp"
#include "nilcone/qcount.hpp"
#include "nilcone/report.hpp"

using namespace nilcone;

TEST_CASE("census rows, totals and expected totals") {
    CensusOptions opt;
    opt.cone = Cone::Enhanced;
    opt.n = 2;
    opt.qs = {2, 3};
    Census c = run_census(opt);
    CHECK(c.rows.size() == 5);
    for (const auto& [q, total] : c.totals) {
        BigInt expect = BigInt(q) * q * q * q; // q^(n^2)
        CHECK(total == expect);
    }
    CHECK(c.totals == c.expected);

    CensusOptions xopt;
    xopt.cone = Cone::Exotic;
    xopt.n = 1;
    xopt.qs = {3};
    Census xc = run_census(xopt);
    CHECK(xc.rows.size() == 2);
    CHECK(xc.rows[0].counts.at(0).second == 1); // (;(1)) is the zero point
    CHECK(xc.rows[1].counts.at(0).second == 8);
    CHECK(xc.totals.at(0).second == 9);

    CensusOptions oopt;
    oopt.cone = Cone::Ordinary;
    oopt.n = 0;
    oopt.qs = {2};
    Census oc = run_census(oopt);
    CHECK(oc.rows.size() == 1);
    CHECK(oc.totals.at(0).second == 1);

    CHECK_THROWS_AS([&] {
        CensusOptions bad;
        bad.n = 99;
        return run_census(bad);
    }(), input_error);
    CHECK_THROWS_AS([&] {
        CensusOptions bad;
        bad.n = 2;
        bad.qs = {6};
        return run_census(bad);
    }(), input_error);
}

TEST_CASE("ordinary census equals the zero-vector slice") {
    CensusOptions opt;
    opt.cone = Cone::Ordinary;
    opt.n = 4;
    opt.qs = {2, 3, 5};
    Census c = run_census(opt);
    CHECK(c.rows.size() == enumerate_partitions(4).size());
    for (const auto& row : c.rows) CHECK(row.mu.empty());
    for (size_t i = 0; i < c.totals.size(); ++i) CHECK(c.totals[i] == c.expected[i]);
}

TEST_CASE("json census round trips through polynomial evaluation") {
    CensusOptions opt;
    opt.cone = Cone::Exotic;
    opt.n = 3;
    opt.qs = {2, 3, 9};
    Census c = run_census(opt);
    auto parsed = nlohmann::json::parse(census_to_json(c));
    CHECK(parsed["cone"] == "exotic");
    CHECK(parsed["rows"].size() == c.rows.size());
    for (const auto& row : parsed["rows"]) {
        std::vector<BigInt> coeffs;
        for (const auto& cj : row["orbit_poly"])
            coeffs.push_back(cj.is_string() ? BigInt(cj.get<std::string>())
                                            : BigInt(cj.get<long long>()));
        QPoly p(coeffs);
        for (auto& [qs, cnt] : row["counts"].items())
            CHECK(p.evaluate(BigInt(qs)) == BigInt(cnt.get<std::string>()));
        // degree pins the shape: 2n^2 - 2b
        CHECK(p.degree() == 2 * 9 - 2 * row["b"].get<long long>());
    }
    for (auto& [qs, total] : parsed["total"].items())
        CHECK(parsed["expected_total"][qs] == total);
}

TEST_CASE("csv census has the pinned column layout") {
    CensusOptions opt;
    opt.cone = Cone::Enhanced;
    opt.n = 1;
    opt.qs = {2, 5};
    Census c = run_census(opt);
    std::istringstream csv(census_to_csv(c));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "mu,nu,lambda,b,J,levi,unipotent_dim,orbit_poly,q=2,q=5");
    std::getline(csv, line);
    CHECK(line == "-,1,1,1,-,GL1,0,1,1,1"); // (;(1)): the zero orbit
    std::getline(csv, line);
    CHECK(line == "1,-,1,0,1,GL0,0,-1 1,1,4"); // ((1);): orbit q-1
    std::getline(csv, line);
    CHECK(line.substr(0, 6) == "TOTAL,");
    std::getline(csv, line);
    CHECK(line.substr(0, 9) == "EXPECTED,");
}

TEST_CASE("census output is byte stable and thread count independent") {
    CensusOptions opt;
    opt.cone = Cone::Enhanced;
    opt.n = 3;
    opt.qs = {2, 3};
    opt.run_bfs = true;
    Census c1 = run_census(opt);
    opt.threads = 2;
    Census c2 = run_census(opt);
    CHECK(census_to_json(c1) == census_to_json(c2));
    CHECK(census_to_csv(c1) == census_to_csv(c2));
    for (const auto& row : c1.rows) {
        REQUIRE(row.bfs_verified.has_value());
        CHECK(*row.bfs_verified);
    }
}

TEST_CASE("verify suites pass at desk scale") {
    for (const char* suite : {"symbolic", "fini"}) {
        VerifyOptions opt;
        opt.suite = suite;
        opt.n = 4;
        auto checks = run_verify(opt);
        CHECK(!checks.empty());
        CHECK(all_passed(checks));
    }
    {
        VerifyOptions opt;
        opt.suite = "enhanced-bfs";
        opt.n = 3;
        opt.q = 2;
        auto checks = run_verify(opt);
        CHECK(all_passed(checks));
        // the suite reports one size check per bipartition
        int size_checks = 0;
        for (const auto& c : checks)
            if (c.name.rfind("enhanced-bfs (", 0) == 0) ++size_checks;
        CHECK(size_checks == 10);
    }
    {
        VerifyOptions opt;
        opt.suite = "exotic-bfs";
        opt.n = 2;
        opt.q = 3;
        auto checks = run_verify(opt);
        CHECK(all_passed(checks));
    }
    {
        VerifyOptions opt;
        opt.suite = "levi";
        opt.n = 2;
        opt.q = 2;
        auto checks = run_verify(opt);
        CHECK(all_passed(checks));
    }
    {
        VerifyOptions opt;
        opt.suite = "commutant";
        opt.n = 3;
        opt.q = 3;
        auto checks = run_verify(opt);
        CHECK(all_passed(checks));
    }
    CHECK_THROWS_AS(run_verify(VerifyOptions{"nosuch", 2, 2, 1u << 22, 1}), input_error);
    // over-budget request is a usage error, not a crash
    CHECK_THROWS_AS(run_verify(VerifyOptions{"enhanced-bfs", 4, 3, 1u << 22, 1}), input_error);
}

TEST_CASE("verify output formats") {
    VerifyOptions opt;
    opt.suite = "symbolic";
    opt.n = 2;
    auto checks = run_verify(opt);
    std::string text = checks_to_text(checks);
    CHECK(text.find("PASS enhanced-orbit-sum n=2") != std::string::npos);
    CHECK(text.find("OK ") != std::string::npos);
    auto parsed = nlohmann::json::parse(checks_to_json(checks));
    CHECK(parsed["pass"] == true);
    CHECK(parsed["checks"].size() == checks.size());
}

TEST_CASE("point files round trip and classify") {
    const FieldDesc& f2 = make_field(2);
    // (0, J_(2,1)) -> (;(2,1))
    BasisIndex bi(Partition{2, 1}, BasisIndex::Mode::Enhanced);
    MatF x = jordan_matrix(bi, f2);
    std::string text = write_enhanced_point(std::vector<FqElem>(3, 0), x);
    PointFile pf = parse_point_file_text(text);
    CHECK(pf.n == 3);
    CHECK(pf.q == 2);
    auto res = run_orbit_of(pf, 1u << 20);
    CHECK(res.bp == Bipartition{{}, {2, 1}});
    CHECK(orbit_of_to_text(res).find("(();(2,1))") != std::string::npos);

    // the six-dimensional worked example
    auto fix = representative(Bipartition{{1, 1, 1, 1}, {1, 1}}, f2);
    auto res2 = run_orbit_of(parse_point_file_text(write_enhanced_point(fix.v, fix.x)), 1u << 22);
    CHECK(res2.bp == Bipartition{{1, 1, 1, 1}, {1, 1}});

    // a conjugated exotic representative classifies back to its shape
    std::mt19937_64 rng(4);
    const FieldDesc& f3 = make_field(3);
    auto xp = exotic_representative(Bipartition{{1}, {1}}, f3);
    GeneratorSet gens = sp_transvection_generators(xp.space.gram);
    MatF g = MatF::identity(4, f3);
    for (int i = 0; i < 15; ++i) g = g * gens.gens[rng() % gens.size()];
    auto gw = g.apply(xp.w);
    MatF gy = g * xp.y * *inverse(g);
    auto res3 = run_orbit_of(parse_point_file_text(write_exotic_point(gw, gy)), 1u << 20);
    CHECK(res3.exotic);
    CHECK(res3.bp == Bipartition{{1}, {1}});
    auto parsed = nlohmann::json::parse(orbit_of_to_json(res3));
    CHECK(parsed["report"]["counts"]["3"] == "512"); // (q^2-1)(q^4-1) at q=3

    // malformed and invalid inputs
    CHECK_THROWS_AS(parse_point_file_text("enhanced 2\n"), input_error);
    CHECK_THROWS_AS(parse_point_file_text("widget 2 2\n0 0\n0 0\n0 0\n"), input_error);
    CHECK_THROWS_AS(parse_point_file_text("enhanced 2 2\n0 5\n0 0\n0 0\n"), input_error);
    CHECK_THROWS_AS(parse_point_file_text("enhanced 2 2\n0 0\n1 0\n0 1\n"), input_error);
    // identity is not nilpotent -> rejected by orbit-of
    std::string bad = "enhanced 2 2\n0 0\n1 0\n0 1\n";
    // exotic point whose matrix is not of doubled type
    std::string bad2 = "exotic 1 2\n0 0\n0 1\n0 0\n";
    CHECK_THROWS_AS(run_orbit_of(parse_point_file_text(bad2), 1u << 16), input_error);
}

TEST_CASE("verify output is independent of the worker count") {
    VerifyOptions opt;
    opt.suite = "enhanced-bfs";
    opt.n = 3;
    opt.q = 2;
    auto a = run_verify(opt);
    opt.threads = 2;
    auto b = run_verify(opt);
    CHECK(checks_to_text(a) == checks_to_text(b));
}
