#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "onesys/geometry.hpp"
#include "onesys/mobius.hpp"

using namespace onesys;
using namespace onesys::num;
using namespace onesys::mob;
using namespace onesys::geo;

namespace {

using B = MpIv;
using M = Mat<B>;
using P = Bpt<B>;

// deterministic hyperbolic soup for invariance tests
std::vector<M> sample_maps() {
    std::vector<M> out;
    M s = M::axis_shift(B::from_decimal("0.8"));
    M t = M::seam_shift(B::from_decimal("1.3"));
    M f = M::half_turn();
    out.push_back(s);
    out.push_back(t);
    out.push_back(s * t);
    out.push_back(t * s * f);
    out.push_back(f * s * t * s);
    return out;
}

bool close(const B& x, double v, double tol = 1e-20) {
    return x.lo_d() <= v + tol && x.hi_d() >= v - tol && x.rad() < tol;
}

} // namespace

TEST_CASE("axis of an axis shift is the imaginary axis, attracting end up") {
    ScopedBits scope(128);
    auto ax = axis_of(M::axis_shift(B::from_decimal("0.7")));
    CHECK_FALSE(ax.rep.inf);
    CHECK(raw_sign(ax.rep.x) == 0);
    CHECK(ax.att.inf);
}

TEST_CASE("translation length recovers the shift") {
    ScopedBits scope(128);
    for (const char* l : {"0.05", "0.7", "2.0"}) {
        B len = translation_length(M::axis_shift(B::from_decimal(l)));
        CHECK(close(len, std::stod(l)));
    }
    // and is conjugation invariant
    M g = M::seam_shift(B::from_decimal("0.9"));
    M m = g * M::axis_shift(B::from_decimal("0.7")) * g.adj();
    CHECK(close(translation_length(m), 0.7));
}

TEST_CASE("parabolic and elliptic inputs are rejected") {
    ScopedBits scope(128);
    M para{B(1), B(1), B(0), B(1)};
    CHECK_THROWS_AS(translation_length(para), NotHyperbolic);
    M ell{B(0), B(1), B(-1), B(0)};
    CHECK_THROWS_AS(axis_of(ell), NotHyperbolic);
}

TEST_CASE("ccw fixes the orientation of the boundary circle") {
    ScopedBits scope(128);
    P z = P::at(B(0)), o = P::at(B(1)), i = P::infinity();
    CHECK(ccw(z, o, i));
    CHECK_FALSE(ccw(o, z, i));
    CHECK(ccw(o, i, z));
    CHECK(ccw(i, z, o));
    CHECK(ccw(P::at(B(-3)), P::at(B(-1)), P::at(B(2))));
}

TEST_CASE("ccw is invariant under the group") {
    ScopedBits scope(192);
    P u = P::at(B(-2)), v = P::at(B::from_decimal("0.25")), w = P::infinity();
    bool base = ccw(u, v, w);
    for (const M& g : sample_maps()) {
        CHECK(ccw(apply(g, u), apply(g, v), apply(g, w)) == base);
    }
}

TEST_CASE("linked detects endpoint separation") {
    ScopedBits scope(128);
    Axis<B> im{P::at(B(0)), P::infinity()};
    Axis<B> across{P::at(B(-1)), P::at(B(1))};
    Axis<B> right{P::at(B(2)), P::at(B(3))};
    CHECK(linked(im, across));
    CHECK(linked(across, im));
    CHECK_FALSE(linked(im, right));
    CHECK_FALSE(linked(across, right));
    for (const M& g : sample_maps())
        CHECK(linked(apply(g, im), apply(g, across)));
}

TEST_CASE("conjugation transports the axis") {
    ScopedBits scope(192);
    M m = M::seam_shift(B::from_decimal("1.1"));
    auto ax = axis_of(m);
    CHECK(close(ax.att.x, 1.0));
    CHECK(close(ax.rep.x, -1.0));
    for (const M& g : sample_maps()) {
        auto moved = axis_of(g * m * g.adj());
        auto expect = apply(g, ax);
        CHECK_FALSE(moved.rep.inf);
        CHECK_FALSE(moved.att.inf);
        CHECK(raw_sign(moved.att.x - expect.att.x) != 1);
        CHECK(raw_sign(expect.att.x - moved.att.x) != 1);
        CHECK(raw_sign(moved.rep.x - expect.rep.x) != 1);
        CHECK(raw_sign(expect.rep.x - moved.rep.x) != 1);
    }
}

TEST_CASE("std_map and arc-length parameters round trip") {
    ScopedBits scope(128);
    M g = std_map(P::at(B(-3)), P::at(B(5)));
    Hpt<B> z = point_at(g, B::from_decimal("0.4"));
    CHECK(close(foot_param(g, z), 0.4));
    CHECK(close(dist(point_at(g, B(0)), point_at(g, B(2))), 2.0, 1e-18));
}

TEST_CASE("perpendicular foot between the imaginary axis and a half circle") {
    ScopedBits scope(128);
    Axis<B> im{P::at(B(0)), P::infinity()};
    Axis<B> other{P::at(B(1)), P::at(B(4))};
    Hpt<B> foot = perp_foot(im, other);
    CHECK(close(foot.x, 0.0));
    CHECK(close(foot.y, 2.0)); // i * sqrt(1*4)
    Axis<B> crossing{P::at(B(-1)), P::at(B(1))};
    CHECK_THROWS_AS(perp_foot(im, crossing), DegenerateConfiguration);
}

TEST_CASE("side_of matches the left-of-travel convention") {
    ScopedBits scope(128);
    Axis<B> up{P::at(B(0)), P::infinity()};
    CHECK(side_of(up, Hpt<B>{B(-1), B(1)}) == 1);
    CHECK(side_of(up, Hpt<B>{B(1), B(1)}) == -1);
    Axis<B> lr{P::at(B(-1)), P::at(B(1))}; // left to right over the circle
    CHECK(side_of(lr, Hpt<B>{B(0), B(2)}) == 1);  // above: left
    CHECK(side_of(lr, Hpt<B>{B(0), B::from_decimal("0.5")}) == -1);
    Axis<B> rl{P::at(B(1)), P::at(B(-1))};
    CHECK(side_of(rl, Hpt<B>{B(0), B(2)}) == -1);
    for (const M& g : sample_maps()) {
        CHECK(side_of(apply(g, lr), apply(g, Hpt<B>{B(0), B(2)})) == 1);
    }
}

TEST_CASE("cross_point lies on both geodesics") {
    ScopedBits scope(128);
    Axis<B> g1{P::at(B(-2)), P::at(B(2))};
    Axis<B> g2{P::at(B(-1)), P::at(B(4))};
    Hpt<B> z = cross_point(g1, g2);
    B on1 = num::abs(z.x * z.x + z.y * z.y - B(4));
    CHECK(on1.hi_d() < 1e-25);
    B c2 = (B(-1) + B(4)) / B(2);
    B on2 = num::abs(num::sq(z.x - c2) + z.y * z.y - num::sq(B(4) - c2));
    CHECK(on2.hi_d() < 1e-25);
}

TEST_CASE("ideal triangle has area pi and the defect is additive") {
    ScopedBits scope(128);
    using PP = PolyPt<B>;
    auto ideal = [](double v) { return PP::at_infinity(P::at(B(long(v)))); };
    PP inf = PP::at_infinity(P::infinity());
    B api = triangle_area(ideal(0), ideal(1), inf);
    CHECK(close(api, 3.14159265358979323846, 1e-25));
    // ideal quadrilateral = two ideal triangles
    std::vector<PP> quad{ideal(-1), ideal(0), ideal(1), inf};
    CHECK(close(polygon_area(quad), 2 * 3.14159265358979323846, 1e-25));
}

TEST_CASE("triangle area matches the hyperbolic right triangle formula") {
    ScopedBits scope(256);
    // vertices i, 2i, 1+i-ish triangle: compare against angle sums computed
    // independently through the hyperbolic law of cosines
    Hpt<B> A{B(0), B(1)}, C{B(0), B(2)};
    Hpt<B> Bv{B::from_decimal("0.6"), B::from_decimal("1.3")};
    using PP = PolyPt<B>;
    B ar = triangle_area(PP::interior(A), PP::interior(Bv), PP::interior(C));
    B sa = dist(A, Bv), sb = dist(Bv, C), sc = dist(A, C);
    auto angle = [&](const B& x, const B& y, const B& z) {
        return acos_clamped((cosh(x) * cosh(y) - cosh(z)) / (sinh(x) * sinh(y)));
    };
    B defect = B::pi() - angle(sc, sa, sb) - angle(sa, sb, sc) - angle(sb, sc, sa);
    CHECK(num::abs(ar - defect).hi_d() < 1e-40);
    CHECK(raw_sign(ar) == 1);
}

TEST_CASE("degenerate triangles are refused") {
    ScopedBits scope(128);
    using PP = PolyPt<B>;
    Hpt<B> z{B(0), B(1)};
    CHECK_THROWS_AS(triangle_area(PP::interior(z), PP::interior(z),
                                  PP::interior(Hpt<B>{B(1), B(1)})),
                    DegenerateConfiguration);
}

TEST_CASE("convex clipping shrinks area and preserves containment") {
    ScopedBits scope(192);
    // a convex geodesic quadrilateral around i
    Convex<B> q;
    q.v = {Hpt<B>{B::from_decimal("-0.4"), B(1)},
           Hpt<B>{B(0), B::from_decimal("0.6")},
           Hpt<B>{B::from_decimal("0.4"), B(1)},
           Hpt<B>{B(0), B::from_decimal("1.7")}};
    B before = area(q);
    CHECK(raw_sign(before) == 1);

    Axis<B> cut{P::at(B(0)), P::infinity()};
    Convex<B> left = clip(q, cut, +1);
    Convex<B> right = clip(q, cut, -1);
    B la = area(left), ra = area(right);
    CHECK(raw_sign(la) == 1);
    CHECK(raw_sign(ra) == 1);
    CHECK(num::abs(la + ra - before).hi_d() < 1e-30);

    Hpt<B> zl{B::from_decimal("-0.2"), B(1)};
    CHECK(contains(left, zl));
    CHECK_FALSE(contains(right, zl));

    // clipping by a far-away geodesic is the identity or empty; the polygon
    // sits outside that half circle, which is its left side
    Axis<B> far{P::at(B(50)), P::at(B(60))};
    CHECK(clip(q, far, +1).v.size() == q.v.size());
    CHECK(clip(q, far, -1).empty());
}
