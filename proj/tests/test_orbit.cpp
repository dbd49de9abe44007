#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcone/enhanced.hpp"
#include "nilcone/error.hpp"
#include "nilcone/orbit.hpp"
#include "nilcone/qcount.hpp"

using namespace nilcone;

TEST_CASE("state codec round trip") {
    for (int q : {2, 3, 5, 9}) {
        StateCodec codec(q, 3, 3);
        std::vector<FqElem> v = {1, 0, static_cast<FqElem>(q - 1)};
        const FieldDesc& fd = make_field(q);
        MatF x(3, 3, fd);
        int t = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) x.set(i, j, static_cast<FqElem>((t++) % q));
        StateKey k = codec.encode_state(v, x);
        std::vector<FqElem> v2(3), x2(9);
        codec.decode(k, v2.data(), x2.data());
        CHECK(v2 == v);
        CHECK(x2 == x.data());
        CHECK(codec.encode(v2.data(), x2.data()) == k);
    }
}

TEST_CASE("trivial orbits") {
    const FieldDesc& f2 = make_field(2);
    MatF zero(2, 2, f2);
    std::vector<FqElem> v0 = {0, 0};
    auto orbit = orbit_bfs(v0, zero, gl_generators(2, f2), 1 << 10);
    CHECK(orbit.size() == 1);
    CHECK(orbit.contains(v0, zero));
}

TEST_CASE("orbit budget is enforced") {
    const FieldDesc& f2 = make_field(2);
    MatF zero(3, 3, f2);
    std::vector<FqElem> v = {1, 0, 0};
    CHECK_THROWS_AS(orbit_bfs(v, zero, gl_generators(3, f2), 3), budget_exceeded);
}

TEST_CASE("gl generator closures have the right order") {
    struct Case {
        int n, q;
    };
    for (auto [n, q] : {Case{1, 2}, Case{2, 2}, Case{3, 2}, Case{4, 2}, Case{1, 3}, Case{2, 3},
                        Case{3, 3}, Case{2, 4}, Case{2, 5}}) {
        const FieldDesc& fd = make_field(q);
        auto res = group_closure(n, fd, gl_generators(n, fd), 1u << 22);
        CHECK(BigInt(res.size) == gl_order(n).evaluate(q));
    }
}

TEST_CASE("closure element listing collects the whole group once") {
    const FieldDesc& f3 = make_field(3);
    auto res = group_closure(2, f3, gl_generators(2, f3), 1 << 16, true);
    CHECK(res.size == 48);
    CHECK(res.elements.size() == 48);
    StateCodec codec(3, 0, 2);
    StateSet distinct;
    for (const auto& g : res.elements) {
        CHECK(is_invertible(g));
        distinct.insert(codec.encode(nullptr, g.data().data()));
    }
    CHECK(distinct.size() == 48);
}

TEST_CASE("packed and generic search paths agree") {
    // the q = 2 path is bit-packed; compare against q = 2 run through the
    // generic engine by using a one-off field table copy disguised as q = 3?
    // simpler: check a known orbit size both ways is impossible directly, so
    // instead validate the packed path against closed forms
    const FieldDesc& f2 = make_field(2);
    EnhancedPoint pt = representative(Bipartition{{1}, {1}}, f2);
    auto orbit = orbit_bfs(pt.v, pt.x, gl_generators(2, f2), 1 << 16);
    CHECK(orbit.size() == 3);
    const FieldDesc& f3 = make_field(3);
    EnhancedPoint pt3 = representative(Bipartition{{1}, {1}}, f3);
    auto orbit3 = orbit_bfs(pt3.v, pt3.x, gl_generators(2, f3), 1 << 16);
    CHECK(BigInt(orbit3.size()) == enhanced_orbit_size(Bipartition{{1}, {1}}).evaluate(3));
}
