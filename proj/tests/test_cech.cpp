#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tropbund/picard.hpp"

using namespace tropbund;

namespace {

CechCocycle p1_twist(const ToricCover& c, long k) {
    CechCocycle x = trivial_cocycle(c, 1);
    x.vals[0].diag[0].lat = ZVec{Z(k)};
    return x;
}

std::vector<Z> abs_class(std::vector<Z> v) {
    for (auto& x : v)
        if (x < 0) x = -x;
    return v;
}

}  // namespace

TEST_CASE("validation on the projective plane cover") {
    auto c = make_cover(fan_p2());
    REQUIRE(c.pairs().size() == 3);
    REQUIRE(c.triples().size() == 1);

    auto t = trivial_cocycle(c, 1);
    CHECK(validate_cocycle(c, t));

    // breaking one overlap value breaks the triple identity
    CechCocycle bad = t;
    bad.vals[0].diag[0].lat = c.pair_units[0][0];
    CHECK_FALSE(validate_cocycle(c, bad));

    // a value outside the overlap unit lattice is rejected
    CechCocycle off = t;
    ZVec outside = c.pair_units[0][0];
    for (auto& x : outside) x += 1;
    bool in = lattice_contains(c.pair_units[0], outside);
    if (!in) {
        off.vals[0].diag[0].lat = outside;
        CHECK_FALSE(validate_cocycle(c, off));
    }

    // scalar parts are forbidden over the boolean base
    auto cb = make_cover(fan_p2(), BaseSemifield::boolean);
    CechCocycle q = trivial_cocycle(cb, 1);
    q.vals[0].diag[0].qpart = Q(1, 2);
    CHECK_FALSE(validate_cocycle(cb, q));
}

TEST_CASE("Pic of the projective line is Z, generated by the coordinate character") {
    auto c = make_cover(fan_p1());
    auto pic = picard_group(c);
    CHECK(pic.h1.free_rank() == 1);
    CHECK(pic.h1.torsion().empty());
    CHECK(pic.divisible_rank == 0);
    REQUIRE(pic.generators.size() == 1);
    ZVec g = pic.generators[0].vals[0].diag[0].lat;
    REQUIRE(g.size() == 1);
    CHECK((g[0] == 1 || g[0] == -1));

    // twists are classified by the integer degree
    for (long k = -3; k <= 3; ++k) {
        auto cls = line_class(c, pic, p1_twist(c, k));
        REQUIRE(cls.size() == 1);
        CHECK(abs_class(cls)[0] == (k < 0 ? -k : k));
    }
    CHECK(line_class(c, pic, p1_twist(c, 2)) != line_class(c, pic, p1_twist(c, -2)));
}

TEST_CASE("affine space has trivial Pic") {
    for (int n = 1; n <= 3; ++n) {
        auto c = make_cover(fan_an(n));
        auto pic = picard_group(c);
        CHECK(pic.h1.is_trivial());
        CHECK(pic.divisible_rank == 0);
    }
}

TEST_CASE("Pic of the product of two projective lines is Z^2") {
    auto c = make_cover(fan_p1xp1());
    auto pic = picard_group(c);
    CHECK(pic.h1.free_rank() == 2);
    CHECK(pic.h1.torsion().empty());
    CHECK(pic.divisible_rank == 0);
    REQUIRE(pic.generators.size() == 2);
    auto c1 = line_class(c, pic, pic.generators[0]);
    auto c2 = line_class(c, pic, pic.generators[1]);
    CHECK(c1 != c2);
    // pulled-back generators are independent: their tensor powers differ
    auto t = tensor_lines(c, pic.generators[0], pic.generators[1]);
    CHECK(validate_cocycle(c, t));
    auto ct = line_class(c, pic, t);
    ZVec sum;
    for (std::size_t i = 0; i < c1.size(); ++i) sum.push_back(c1[i] + c2[i]);
    CHECK(ct == sum);
}

TEST_CASE("Pic of the projective plane and a Hirzebruch surface") {
    auto c2 = make_cover(fan_p2());
    auto pic2 = picard_group(c2);
    CHECK(pic2.h1.free_rank() == 1);
    CHECK(pic2.h1.torsion().empty());

    auto ch = make_cover(fan_hirzebruch(1));
    auto pich = picard_group(ch);
    CHECK(pich.h1.free_rank() == 2);
    CHECK(pich.h1.torsion().empty());
}

TEST_CASE("line equivalence is the exact coboundary solve") {
    auto c = make_cover(fan_p2());
    auto pic = picard_group(c);
    REQUIRE(pic.generators.size() == 1);
    const auto& g = pic.generators[0];
    CHECK(validate_cocycle(c, g));

    CHECK_FALSE(line_equivalent(c, g, trivial_cocycle(c, 1)).equivalent);
    CHECK(line_equivalent(c, g, g).equivalent);

    // adding a scalar coboundary preserves the class
    CechCocycle shifted = g;
    QVec q{Q(1, 3), Q(-2), Q(5, 7)};
    for (std::size_t p = 0; p < c.pairs().size(); ++p) {
        auto [i, j] = c.pairs()[p];
        shifted.vals[p].diag[0].qpart += q[static_cast<std::size_t>(i)] - q[static_cast<std::size_t>(j)];
    }
    CHECK(validate_cocycle(c, shifted));
    auto w = line_equivalent(c, g, shifted);
    CHECK(w.equivalent);
    REQUIRE(w.cochain.size() == 3);
    CHECK(line_class(c, pic, shifted) == line_class(c, pic, g));

    // tensoring with the inverse trivializes
    auto one = tensor_lines(c, g, line_inverse(g));
    CHECK(line_equivalent(c, one, trivial_cocycle(c, 1)).equivalent);
}

TEST_CASE("direct sums decompose back into their line classes") {
    auto c = make_cover(fan_p1());
    auto pic = picard_group(c);
    auto a = p1_twist(c, 2), b = p1_twist(c, -1);
    auto e = direct_sum(c, a, b);
    CHECK(e.rank == 2);
    CHECK(validate_cocycle(c, e));
    auto classes = line_class_multiset(c, pic, e);
    std::vector<std::vector<Z>> want{line_class(c, pic, a), line_class(c, pic, b)};
    std::sort(want.begin(), want.end());
    CHECK(classes == want);

    // a twisted-by-swap cocycle still decomposes (nerve has no triples)
    CechCocycle sw = e;
    sw.vals[0].perm = Perm(std::vector<int>{1, 0});
    CHECK(validate_cocycle(c, sw));
    auto sw_classes = line_class_multiset(c, pic, sw);
    CHECK(sw_classes.size() == 2);

    // order of summands does not matter
    auto e2 = direct_sum(c, b, a);
    CHECK(cocycle_equivalent(c, pic, e, e2));
    auto e3 = direct_sum(c, a, p1_twist(c, 3));
    CHECK_FALSE(cocycle_equivalent(c, pic, e, e3));
}

TEST_CASE("rank-2 classification on the projective plane") {
    auto c = make_cover(fan_p2());
    auto pic = picard_group(c);
    const auto& g = pic.generators[0];
    auto g2 = tensor_lines(c, g, g);
    auto e = direct_sum(c, g, g2);
    CHECK(validate_cocycle(c, e));
    auto lines = decompose_into_lines(c, e);
    REQUIRE(lines.size() == 2);
    for (const auto& l : lines) CHECK(validate_cocycle(c, l));
    auto cls = line_class_multiset(c, pic, e);
    std::vector<std::vector<Z>> want{line_class(c, pic, g), line_class(c, pic, g2)};
    std::sort(want.begin(), want.end());
    CHECK(cls == want);

    CHECK(cocycle_equivalent(c, pic, e, direct_sum(c, g2, g)));
    CHECK_FALSE(cocycle_equivalent(c, pic, e, direct_sum(c, g, g)));
}

TEST_CASE("permutation part of a cocycle is itself a cocycle") {
    auto c = make_cover(fan_p1());
    auto e = direct_sum(c, p1_twist(c, 1), p1_twist(c, 0));
    e.vals[0].perm = Perm(std::vector<int>{1, 0});
    auto p = perm_part(e);
    CHECK(p.rank == 2);
    CHECK(validate_perm_cocycle(c, p));
}

TEST_CASE("base change to and from the boolean base") {
    auto c = make_cover(fan_p1());
    auto pic = picard_group(c);
    auto x = p1_twist(c, 2);
    CHECK(base_change_forward(x).vals[0].diag[0].lat == x.vals[0].diag[0].lat);

    CechCocycle y = x;
    y.vals[0].diag[0].qpart = Q(3, 2);
    CHECK_THROWS(base_change_forward(y));
    auto back = base_change_backward(c, y);
    CHECK(back.vals[0].diag[0].qpart == 0);
    CHECK(line_class(c, pic, back) == line_class(c, pic, x));
    CHECK(line_equivalent(c, y, back).equivalent);
}

TEST_CASE("unordered tuples of classes enumerate rank-n bundles") {
    auto c = make_cover(fan_p1());
    auto pic = picard_group(c);
    auto v1 = classify_vect_n(pic, 1, 1);
    CHECK(v1.representatives.size() == 3);  // degrees -1, 0, 1
    auto v2 = classify_vect_n(pic, 2, 1);
    CHECK(v2.representatives.size() == 6);  // multisets of size 2 from 3 degrees

    auto ca = make_cover(fan_an(2));
    auto pica = picard_group(ca);
    auto va = classify_vect_n(pica, 3, 5);
    CHECK(va.representatives.size() == 1);  // trivial Pic: only the free bundle
}
