#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "onesys/dirichlet.hpp"
#include "onesys/errors.hpp"
#include "onesys/surface.hpp"

using namespace onesys;
using B = num::MpIv;

namespace {

srf::FNCoords fixed_metric(size_t edges) {
    const char* ls[] = {"0.9", "1.0", "1.1", "1.2", "1.3", "1.4",
                        "0.95", "1.05", "1.15"};
    const char* ts[] = {"0.013", "0.029", "0.041", "0.007", "0.037", "0.019",
                        "0.023", "0.011", "0.031"};
    srf::FNCoords fn;
    for (size_t e = 0; e < edges; ++e) {
        fn.lengths.push_back(ls[e % 9]);
        fn.twists.push_back(ts[e % 9]);
    }
    return fn;
}

srf::SurfaceGroup make_surface(int genus) {
    srf::PantsGraph p = srf::build_pants_graph(genus, srf::Scheme::linear);
    size_t ne = p.edges.size();
    return srf::SurfaceGroup(std::move(p), fixed_metric(ne));
}

// chart-consuming checks need more bits as the pairing translates grow
template <class F> void at_sufficient_bits(F&& f) {
    for (int bits = 128;; bits *= 2) {
        num::ScopedBits scope(bits);
        try {
            f();
            return;
        } catch (const NeedMorePrecision&) {
            if (bits >= 4096) throw PrecisionExhausted("in test ladder");
        }
    }
}

} // namespace

TEST_CASE("side pairing closes into an inverse involution") {
    for (int g : {2, 3}) {
        CAPTURE(g);
        srf::SurfaceGroup s = make_surface(g);
        dom::DirichletDomain d = dom::dirichlet_domain(s);
        size_t n = d.sides.size();
        CHECK(n >= 4 * (size_t)g);
        CHECK(n % 2 == 0);
        CHECK(d.radius > 0);
        CHECK(d.radius < 100);
        for (size_t i = 0; i < n; ++i) {
            CAPTURE(i);
            int m = d.sides[i].mate;
            REQUIRE(m >= 0);
            REQUIRE((size_t)m < n);
            CHECK(m != (int)i);
            CHECK(d.sides[m].mate == (int)i);
            CHECK(s.group().is_trivial(
                wrd::concat(d.sides[i].word, d.sides[m].word)));
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                CHECK(d.sides[i].word != d.sides[j].word);
    }
}

TEST_CASE("construction is deterministic") {
    srf::SurfaceGroup s = make_surface(2);
    dom::DirichletDomain d1 = dom::dirichlet_domain(s);
    dom::DirichletDomain d2 = dom::dirichlet_domain(s);
    REQUIRE(d1.sides.size() == d2.sides.size());
    for (size_t i = 0; i < d1.sides.size(); ++i) {
        CHECK(d1.sides[i].word == d2.sides[i].word);
        CHECK(d1.sides[i].mate == d2.sides[i].mate);
    }
}

TEST_CASE("area agrees with the genus-forced value by both routes") {
    for (int g : {2, 3}) {
        CAPTURE(g);
        srf::SurfaceGroup s = make_surface(g);
        dom::DirichletDomain d = dom::dirichlet_domain(s);
        const double target = 4 * std::numbers::pi * (g - 1);
        at_sufficient_bits([&] {
            dom::Chart<B> ch = dom::chart<B>(s, d);
            REQUIRE(ch.poly.v.size() == d.sides.size());
            B a = dom::area_angle_defect(ch);
            CHECK(a.hi_d() - a.lo_d() < 1e-9);
            CHECK(a.lo_d() < target + 1e-9);
            CHECK(a.hi_d() > target - 1e-9);
            double q = dom::area_quadrature(ch);
            CHECK(std::abs(q - target) < 1e-6 * target);
            CHECK(std::abs(q - a.mid()) < 1e-6 * target);
        });
    }
}

TEST_CASE("reduce_point brings orbit points back to the base point") {
    for (int g : {2, 3}) {
        CAPTURE(g);
        srf::SurfaceGroup s = make_surface(g);
        dom::DirichletDomain d = dom::dirichlet_domain(s);
        std::vector<wrd::Word> ws = {{1},    {2},       {-1, 2},
                                     {1, 2}, {2, 1, -2}, {1, 1, 2, -1}};
        at_sufficient_bits([&] {
            dom::Chart<B> ch = dom::chart<B>(s, d);
            for (const auto& w : ws) {
                CAPTURE(wrd::show(w));
                geo::Hpt<B> z =
                    geo::apply(s.matrix_of<B>(w), dom::base_point<B>());
                auto [u, z2] = dom::reduce_point(ch, d, z);
                CHECK(s.group().is_trivial(wrd::concat(u, w)));
                CHECK(geo::dist(z2, dom::base_point<B>()).mid() < 1e-9);
            }
        });
    }
}

TEST_CASE("reduce_point keeps generic points on their orbit, inside") {
    srf::SurfaceGroup s = make_surface(2);
    dom::DirichletDomain d = dom::dirichlet_domain(s);
    at_sufficient_bits([&] {
        dom::Chart<B> ch = dom::chart<B>(s, d);
        std::vector<geo::Hpt<B>> pts = {
            {B(2), B(3)},
            {B(-7) / B(2), B(1) / B(16)},
            {B(41) / B(8), B(23)},
        };
        for (const auto& z : pts) {
            auto [u, z2] = dom::reduce_point(ch, d, z);
            geo::Hpt<B> uz = geo::apply(s.matrix_of<B>(u), z);
            CHECK(geo::dist(uz, z2).mid() < 1e-12);
            CHECK(geo::dist(z2, dom::base_point<B>()).mid() <
                  d.radius + 1e-6);
        }
    });
}

TEST_CASE("bisector endpoints are equidistant witnesses") {
    num::ScopedBits scope(128);
    geo::Hpt<B> p{B(1) / B(8), B(5) / B(4)};
    geo::Hpt<B> q{B(3) / B(4), B(2)};
    mob::Axis<B> ax = dom::bisector(p, q);
    REQUIRE(!ax.rep.inf);
    REQUIRE(!ax.att.inf);
    // top point of the half circle through the two boundary endpoints
    B cx = (ax.rep.x + ax.att.x) / B(2);
    B r = ax.att.x - ax.rep.x;
    if (num::sign(r) < 0) r = B(0) - r;
    geo::Hpt<B> top{cx, r / B(2)};
    B dp = geo::dist(top, p), dq = geo::dist(top, q);
    CHECK(std::abs(dp.mid() - dq.mid()) < 1e-25);
    // swapping the points reverses the orientation
    mob::Axis<B> bx = dom::bisector(q, p);
    CHECK(std::abs(ax.rep.x.mid() - bx.att.x.mid()) < 1e-25);
    CHECK(std::abs(ax.att.x.mid() - bx.rep.x.mid()) < 1e-25);
}
