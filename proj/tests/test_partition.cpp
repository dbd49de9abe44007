#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcone/partition.hpp"

using namespace nilcone;

TEST_CASE("partition construction and stats") {
    CHECK(partition_stats(Partition{}).weight == 0);
    CHECK(partition_stats(Partition{}).length == 0);
    CHECK(partition_stats(Partition{}).n_invariant == 0);

    auto s6 = partition_stats(Partition{6});
    CHECK(s6.weight == 6);
    CHECK(s6.length == 1);
    CHECK(s6.n_invariant == 0);

    auto s = partition_stats(Partition{2, 2, 1, 1});
    CHECK(s.weight == 6);
    CHECK(s.length == 4);
    CHECK(s.n_invariant == 7); // 0 + 2 + 2 + 3

    CHECK(Partition({3, 2, 0, 0}) == Partition{3, 2}); // trailing zeros dropped
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, -1}));
}

TEST_CASE("exponent form") {
    using EF = std::vector<std::pair<int, int>>;
    CHECK(exponent_form(Partition{2, 2, 1, 1}) == EF{{2, 2}, {1, 2}});
    CHECK(exponent_form(Partition{5}) == EF{{5, 1}});
    CHECK(exponent_form(Partition{3, 3, 3, 1}) == EF{{3, 3}, {1, 1}});
    CHECK(exponent_form(Partition{}) == EF{});

    for (const auto& p : enumerate_partitions(7)) {
        int w = 0, prev = 1 << 20;
        for (auto [l, m] : exponent_form(p)) {
            CHECK(l < prev);
            CHECK(m > 0);
            prev = l;
            w += l * m;
        }
        CHECK(w == p.weight());
    }
}

TEST_CASE("partition enumeration is complete, ordered and duplicate-free") {
    const int pn[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n <= 9; ++n) {
        auto ps = enumerate_partitions(n);
        CHECK(static_cast<int>(ps.size()) == pn[n]);
        for (size_t i = 0; i + 1 < ps.size(); ++i) CHECK(ps[i].parts() > ps[i + 1].parts());
        if (n >= 1) {
            CHECK(ps.front() == Partition{n});
            CHECK(ps.back() == Partition(std::vector<int>(n, 1)));
        }
        for (const auto& p : ps) CHECK(p.weight() == n);
    }
}

TEST_CASE("partition union") {
    CHECK(partition_union(Partition{2, 1}, Partition{2, 1}) == Partition{2, 2, 1, 1});
    CHECK(partition_union(Partition{}, Partition{3, 1}) == Partition{3, 1});
    CHECK(partition_union(Partition{3, 1}, Partition{2, 2}) == Partition{3, 2, 2, 1});
}

TEST_CASE("conjugation is an involution") {
    for (const auto& p : enumerate_partitions(8)) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().weight() == p.weight());
    }
}

TEST_CASE("bipartition enumeration agrees with the double-loop count") {
    const int qn[] = {1, 2, 5, 10, 20, 36, 65};
    for (int n = 0; n <= 6; ++n) {
        auto bps = enumerate_bipartitions(n);
        CHECK(static_cast<int>(bps.size()) == qn[n]);
        // independent oracle: pairs of partitions with weights summing to n
        size_t direct = 0;
        for (int a = 0; a <= n; ++a)
            direct += enumerate_partitions(a).size() * enumerate_partitions(n - a).size();
        CHECK(bps.size() == direct);
        for (const auto& bp : bps) {
            CHECK(bp.n() == n);
            // the componentwise sum is a valid partition by construction
            CHECK(bp.lambda().weight() == n);
        }
    }
}

TEST_CASE("remark-level block constancy holds on every bipartition") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& bp : enumerate_bipartitions(n)) {
            Partition lam = bp.lambda();
            for (int i = 1; i + 1 <= lam.length(); ++i)
                if (lam.part(i) == lam.part(i + 1)) {
                    CHECK(bp.mu().part(i) == bp.mu().part(i + 1));
                    CHECK(bp.nu().part(i) == bp.nu().part(i + 1));
                }
        }
}

TEST_CASE("b invariant") {
    CHECK(b_invariant(Bipartition{{}, {}}) == 0);
    CHECK(b_invariant(Bipartition{{1, 1, 1, 1}, {1, 1}}) == 16);
    CHECK(b_invariant(Bipartition{{1, 1}, {1}}) == 3);
    for (int n = 0; n <= 6; ++n)
        for (const auto& bp : enumerate_bipartitions(n)) {
            long long b = b_invariant(bp); // asserts both formulas internally
            Partition lam = bp.lambda();
            CHECK(b >= 0);
            CHECK(b <= lam.weight() + 2 * lam.n_invariant());
        }
}

TEST_CASE("shape data worked examples") {
    {
        auto sd = shape_data(Bipartition{{1, 1, 1, 1}, {1, 1}});
        REQUIRE(sd.num_blocks() == 2);
        CHECK(sd.blocks[0].j == 1);
        CHECK(sd.blocks[1].j == 1);
        CHECK(sd.blocks[0].k == 1);
        CHECK(sd.blocks[1].k == 0);
        CHECK(sd.J() == std::vector<int>{2});
    }
    {
        auto sd = shape_data(Bipartition{{1, 1}, {1}});
        CHECK(sd.J() == std::vector<int>{2});
    }
    {
        // mu empty: no block passes the j-test
        auto sd = shape_data(Bipartition{{}, {3, 2, 2}});
        CHECK(sd.J().empty());
    }
    {
        auto sd = shape_data(Bipartition{{2, 1}, {}});
        CHECK(sd.J() == std::vector<int>{1});
    }
}

TEST_CASE("shape data reconstructs the bipartition and respects invariants") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& bp : enumerate_bipartitions(n)) {
            auto sd = shape_data(bp);
            std::vector<int> mu, nu, lam;
            int expect_i0 = 1;
            int prev_l = 1 << 20;
            for (const auto& blk : sd.blocks) {
                CHECK(blk.l < prev_l);
                CHECK(blk.l == blk.j + blk.k);
                CHECK(blk.mult > 0);
                CHECK(blk.i0 == expect_i0);
                prev_l = blk.l;
                expect_i0 += blk.mult;
                for (int t = 0; t < blk.mult; ++t) {
                    mu.push_back(blk.j);
                    nu.push_back(blk.k);
                    lam.push_back(blk.l);
                }
            }
            CHECK(expect_i0 == sd.lambda.length() + 1); // blocks cover 1..l(lambda)
            CHECK(Partition(mu) == bp.mu());
            CHECK(Partition(nu) == bp.nu());
            CHECK(Partition(lam) == bp.lambda());
            for (int h : sd.J()) {
                CHECK(h >= 1);
                CHECK(h <= sd.num_blocks());
                CHECK(sd.blocks[h - 1].mult >= 1);
            }
        }
}

TEST_CASE("block cases are exhaustive and exclusive") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& bp : enumerate_bipartitions(n)) {
            auto sd = shape_data(bp);
            for (int h = 1; h <= sd.num_blocks(); ++h) {
                switch (sd.block_case[h - 1]) {
                    case BlockCase::InJ:
                        CHECK(sd.in_J[h - 1]);
                        CHECK(sd.j_of(h) > sd.j_of(h + 1));
                        CHECK(sd.k_less_than_prev(h));
                        break;
                    case BlockCase::ZeroMu:
                        CHECK(sd.j_of(h) == 0);
                        break;
                    case BlockCase::RightRun: {
                        CHECK(sd.j_of(h) != 0);
                        int t = sd.run_partner[h - 1] - h;
                        CHECK(t >= 1);
                        for (int u = 0; u <= t; ++u) CHECK(sd.j_of(h + u) == sd.j_of(h));
                        CHECK(sd.j_of(h + t + 1) != sd.j_of(h));
                        break;
                    }
                    case BlockCase::LeftRun: {
                        CHECK(sd.j_of(h) > sd.j_of(h + 1));
                        int t = h - sd.run_partner[h - 1];
                        CHECK(t >= 1);
                        for (int u = 0; u < t; ++u) CHECK(sd.k_of(h - u) == sd.k_of(h - u - 1));
                        CHECK(!sd.k_less_than_prev(h));
                        break;
                    }
                }
            }
        }
}
