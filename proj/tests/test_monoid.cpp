#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropbund/scheme.hpp"

using namespace tropbund;

namespace {
bool basis_contains(const std::vector<ZVec>& basis, std::initializer_list<long> v) {
    ZVec t = zv(v);
    for (const auto& b : basis)
        if (b == t) return true;
    return false;
}
}  // namespace

TEST_CASE("dual monoid of the full quadrant cone is free on x, y") {
    auto f = fan_an(2);
    auto d = dual_monoid(f, f.cones[0]);
    REQUIRE(d.hilbert_basis.size() == 2);
    CHECK(basis_contains(d.hilbert_basis, {1, 0}));
    CHECK(basis_contains(d.hilbert_basis, {0, 1}));
    CHECK(d.monoid.relations.empty());
    CHECK(d.complete_at_bound);
}

TEST_CASE("projective line charts and overlap") {
    auto f = fan_p1();
    auto c0 = dual_monoid(f, {0});  // ray R>=0, dual = N
    REQUIRE(c0.hilbert_basis.size() == 1);
    CHECK(c0.hilbert_basis[0][0] == 1);
    auto c1 = dual_monoid(f, {1});
    REQUIRE(c1.hilbert_basis.size() == 1);
    CHECK(c1.hilbert_basis[0][0] == -1);
    auto ov = dual_monoid(f, {});  // zero cone, dual = Z
    REQUIRE(ov.hilbert_basis.size() == 2);
    CHECK(basis_contains(ov.hilbert_basis, {1}));
    CHECK(basis_contains(ov.hilbert_basis, {-1}));
}

TEST_CASE("singular quadric cone has three generators and a binomial relation") {
    Fan f;
    f.rank = 2;
    f.rays = {zv({0, 1}), zv({2, -1})};
    f.cones = {{0, 1}};
    auto d = dual_monoid(f, {0, 1});
    REQUIRE(d.hilbert_basis.size() == 3);
    CHECK(basis_contains(d.hilbert_basis, {1, 0}));
    CHECK(basis_contains(d.hilbert_basis, {1, 1}));
    CHECK(basis_contains(d.hilbert_basis, {1, 2}));
    CHECK(d.monoid.relations.size() == 1);
    CHECK(d.complete_at_bound);
}

TEST_CASE("hilbert-basis completeness over all preset cones") {
    for (const auto& fan : {fan_p1(), fan_p2(), fan_p1xp1(), fan_an(2), fan_an(3), fan_hirzebruch(2)}) {
        for (const auto& cone : fan.cones) {
            auto d = dual_monoid(fan, cone);
            CHECK(d.complete_at_bound);
            CHECK(!d.hilbert_basis.empty());
        }
    }
}

TEST_CASE("unit groups of chart monoids") {
    auto a2 = fan_an(2);
    CHECK(monoid_units(a2, a2.cones[0]).empty());  // N^2: trivial units
    auto p1 = fan_p1();
    CHECK(monoid_units(p1, {}).size() == 1);  // Z
    // N x Z: single ray e1 in Z^2
    Fan half;
    half.rank = 2;
    half.rays = {zv({1, 0})};
    half.cones = {{0}};
    auto u = monoid_units(half, {0});
    REQUIRE(u.size() == 1);
    CHECK((u[0] == zv({0, 1}) || u[0] == zv({0, -1})));
}

TEST_CASE("cancellativity detection") {
    // lattice-embedded chart: certified cancellative
    auto f = fan_p2();
    auto d = dual_monoid(f, f.cones[0]);
    CHECK(is_cancellative(d.monoid) == Cancellativity::yes);

    // xy = x with no zero identification: cancelling x would force y = 1
    MonoidPresentation bad;
    bad.gen_names = {"x", "y"};
    bad.relations = {{{1, 1}, {1, 0}}};
    CHECK(is_cancellative(bad) == Cancellativity::no);
}

TEST_CASE("cover condition on toric schemes") {
    for (const auto& fan : {fan_p1(), fan_p2(), fan_p1xp1(), fan_hirzebruch(1)}) {
        auto x = build_scheme(fan);
        CHECK(check_cover_condition(x) == Cancellativity::yes);
    }
}

TEST_CASE("gluing consistency: chart monoids include into the overlap monoid") {
    for (const auto& fan : {fan_p1(), fan_p2(), fan_p1xp1()}) {
        auto x = build_scheme(fan);
        for (std::size_t p = 0; p < x.pairs.size(); ++p) {
            auto [i, j] = x.pairs[p];
            const auto& rays = x.overlap_rays[p];
            // every chart generator satisfies the (fewer) overlap constraints
            for (int chart : {i, j})
                for (const auto& g : x.charts[chart].hilbert_basis)
                    for (int r : rays) {
                        Z dot(0);
                        for (int c = 0; c < fan.rank; ++c) dot += g[c] * fan.rays[r][c];
                        CHECK(dot >= 0);
                    }
        }
    }
}

TEST_CASE("base change descriptions") {
    auto p1 = build_scheme(fan_p1());
    auto s = base_change(p1, BaseSemifield::tropicalQ);
    REQUIRE(s.charts.size() == 2);
    CHECK(s.charts[0].describe().substr(0, 3) == "T_Q");

    auto an = build_scheme(fan_an(3));
    auto sa = base_change(an, BaseSemifield::tropicalQ);
    REQUIRE(sa.charts.size() == 1);
    CHECK(sa.charts[0].monoid.ngens() == 3);
    CHECK(sa.charts[0].monoid.relations.empty());

    auto pt = build_scheme(fan_an(0));
    auto sp = base_change(pt, BaseSemifield::boolean);
    REQUIRE(sp.charts.size() == 1);
    CHECK(sp.charts[0].monoid.ngens() == 0);  // k[trivial monoid] = k
}

TEST_CASE("units of monoid semirings") {
    auto p1 = fan_p1();
    // T_Q[x^pm]: Q x Z
    auto u1 = units_of_monoid_semiring(BaseSemifield::tropicalQ, p1, {});
    CHECK(u1.has_divisible_part);
    CHECK(u1.lattice_rank() == 1);
    // T_Q[N]: Q only
    auto u2 = units_of_monoid_semiring(BaseSemifield::tropicalQ, p1, {0});
    CHECK(u2.has_divisible_part);
    CHECK(u2.lattice_rank() == 0);
    // B[Z]: Z only
    auto u3 = units_of_monoid_semiring(BaseSemifield::boolean, p1, {});
    CHECK(!u3.has_divisible_part);
    CHECK(u3.lattice_rank() == 1);
}

TEST_CASE("fan presets parse") {
    CHECK(fan_preset("P1").cones.size() == 2);
    CHECK(fan_preset("P2").cones.size() == 3);
    CHECK(fan_preset("P1xP1").cones.size() == 4);
    CHECK(fan_preset("A2").rank == 2);
    CHECK(fan_preset("Fa(3)").rays[2] == zv({-1, 3}));
    CHECK_THROWS(fan_preset("nope"));
}
