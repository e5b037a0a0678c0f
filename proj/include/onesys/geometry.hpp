#pragma once

#include <optional>
#include <vector>

#include "onesys/mobius.hpp"

// Interior-point geometry on the upper half plane: geodesics through interior
// points, perpendicular feet, arc-length parameters along an axis, angles and
// geodesic polygon areas, convex clipping.
//
// A geodesic is carried as its ordered boundary endpoints (mob::Axis).  The
// arc-length parameter along an axis uses std_map: the point at parameter s
// is std_map(p,q) applied to i*e^s, so parameters increase toward q.

namespace onesys::geo {

using mob::Axis;
using mob::Bpt;
using mob::Mat;
using onesys::NeedMorePrecision;

template <class B> struct Hpt {
    B x, y; // y > 0
};

template <class B> Hpt<B> apply(const Mat<B>& m, const Hpt<B>& z) {
    B nx = m.a * z.x + m.b, ny = m.a * z.y;
    B dx = m.c * z.x + m.d, dy = m.c * z.y;
    B den = dx * dx + dy * dy;
    return {(nx * dx + ny * dy) / den, (ny * dx - nx * dy) / den};
}

template <class B> B dist(const Hpt<B>& z, const Hpt<B>& w) {
    B dx = z.x - w.x, dy = z.y - w.y;
    return num::acosh_ge1(B(1) + (dx * dx + dy * dy) / (B(2) * z.y * w.y));
}

// G with G(0) = p, G(inf) = q, det 1
template <class B> Mat<B> std_map(const Bpt<B>& p, const Bpt<B>& q) {
    if (q.inf) return {B(1), p.x, B(0), B(1)};
    if (p.inf) return {q.x, B(-1), B(1), B(0)};
    B s = q.x - p.x;
    int sg = num::sign(s);
    if (sg == 0) throw DegenerateConfiguration("std_map: equal endpoints");
    if (sg == 1) {
        B r = num::sqrt(s);
        return {q.x / r, p.x / r, B(1) / r, B(1) / r};
    }
    B r = num::sqrt(-s);
    return {q.x / r, -(p.x / r), B(1) / r, B(-1) / r};
}

template <class B> Mat<B> std_map(const Axis<B>& ax) {
    return std_map(ax.rep, ax.att);
}

// point at arc-length parameter s on the axis carried by G = std_map(axis)
template <class B> Hpt<B> point_at(const Mat<B>& g, const B& s) {
    return apply(g, Hpt<B>{B(0), num::exp(s)});
}

// parameter of the orthogonal projection of z onto the axis of G
template <class B> B foot_param(const Mat<B>& g, const Hpt<B>& z) {
    Hpt<B> w = apply(g.adj(), z);
    return num::log(w.x * w.x + w.y * w.y) / B(2);
}

template <class B> B dist_to_axis(const Mat<B>& g, const Hpt<B>& z) {
    Hpt<B> w = apply(g.adj(), z);
    return num::asinh(num::abs(w.x) / w.y);
}

// foot on a of the common perpendicular of disjoint geodesics a and b
template <class B> Hpt<B> perp_foot(const Axis<B>& a, const Axis<B>& b) {
    Mat<B> g = std_map(a);
    Mat<B> gi = g.adj();
    Bpt<B> pb = mob::apply(gi, b.rep), qb = mob::apply(gi, b.att);
    if (pb.inf || qb.inf)
        throw DegenerateConfiguration("perp_foot: shared endpoint");
    B prod = pb.x * qb.x;
    if (num::sign(prod) != 1)
        throw DegenerateConfiguration("perp_foot: geodesics not disjoint");
    return apply(g, Hpt<B>{B(0), num::sqrt(prod)});
}

// signed side of z relative to the oriented geodesic ax: +1 left, -1 right.
// For the upward imaginary axis, left is x < 0.
template <class B> int side_of(const Axis<B>& ax, const Hpt<B>& z) {
    int s;
    if (ax.att.inf) {
        s = num::sign(ax.rep.x - z.x);
    } else if (ax.rep.inf) {
        s = num::sign(z.x - ax.att.x);
    } else {
        B c = (ax.rep.x + ax.att.x) / B(2);
        B r2 = num::sq((ax.att.x - ax.rep.x) / B(2));
        B q = num::sq(z.x - c) + z.y * z.y - r2;
        int o = num::sign(ax.att.x - ax.rep.x);
        s = o * num::sign(q);
    }
    return s;
}

// side of a boundary point relative to an oriented geodesic; the endpoints of
// ax itself are degenerate inputs
template <class B> int side_of(const Axis<B>& ax, const Bpt<B>& u) {
    if (ax.att.inf) {
        if (u.inf) throw DegenerateConfiguration("side_of: endpoint");
        return num::sign(ax.rep.x - u.x);
    }
    if (ax.rep.inf) {
        if (u.inf) throw DegenerateConfiguration("side_of: endpoint");
        return num::sign(u.x - ax.att.x);
    }
    int o = num::sign(ax.att.x - ax.rep.x);
    if (u.inf) return o; // outside every half circle
    B c = (ax.rep.x + ax.att.x) / B(2);
    B r2 = num::sq((ax.att.x - ax.rep.x) / B(2));
    return o * num::sign(num::sq(u.x - c) - r2);
}

// intersection point of two crossing geodesics
template <class B> Hpt<B> cross_point(const Axis<B>& g, const Axis<B>& h) {
    auto vertical_x = [](const Axis<B>& ax) {
        return ax.att.inf ? ax.rep.x : ax.att.x;
    };
    bool gv = g.rep.inf || g.att.inf;
    bool hv = h.rep.inf || h.att.inf;
    if (gv && hv) throw DegenerateConfiguration("cross_point: parallel verticals");
    if (gv || hv) {
        const Axis<B>& vert = gv ? g : h;
        const Axis<B>& circ = gv ? h : g;
        B v = vertical_x(vert);
        B c = (circ.rep.x + circ.att.x) / B(2);
        B r2 = num::sq((circ.att.x - circ.rep.x) / B(2));
        B y2 = r2 - num::sq(v - c);
        if (num::sign(y2) != 1)
            throw DegenerateConfiguration("cross_point: no interior crossing");
        return {v, num::sqrt(y2)};
    }
    B c1 = (g.rep.x + g.att.x) / B(2), c2 = (h.rep.x + h.att.x) / B(2);
    B r1 = num::sq((g.att.x - g.rep.x) / B(2));
    B r2 = num::sq((h.att.x - h.rep.x) / B(2));
    B den = B(2) * (c2 - c1);
    B x = ((r1 - r2) - (c1 * c1 - c2 * c2)) / den;
    B y2 = r1 - num::sq(x - c1);
    if (num::sign(y2) != 1)
        throw DegenerateConfiguration("cross_point: no interior crossing");
    return {x, num::sqrt(y2)};
}

// geodesic through two interior points, oriented z -> w
template <class B> Axis<B> geodesic_through(const Hpt<B>& z, const Hpt<B>& w) {
    int sx = num::sign(w.x - z.x);
    if (sx == 0) {
        int sy = num::sign(w.y - z.y);
        if (sy == 0) throw DegenerateConfiguration("geodesic_through: equal points");
        if (sy == 1) return {Bpt<B>::at(z.x), Bpt<B>::infinity()};
        return {Bpt<B>::infinity(), Bpt<B>::at(z.x)};
    }
    B c = (w.x * w.x + w.y * w.y - z.x * z.x - z.y * z.y) / (B(2) * (w.x - z.x));
    B r = num::sqrt(num::sq(z.x - c) + z.y * z.y);
    if (sx == 1) return {Bpt<B>::at(c - r), Bpt<B>::at(c + r)};
    return {Bpt<B>::at(c + r), Bpt<B>::at(c - r)};
}

// unit-free tangent direction at z pointing along the geodesic toward t
template <class B> struct Dir {
    B x, y;
};

template <class B> Dir<B> tangent_toward(const Hpt<B>& z, const Hpt<B>& w) {
    Axis<B> g = geodesic_through(z, w);
    if (g.att.inf) return {B(0), B(1)};
    if (g.rep.inf) return {B(0), B(-1)};
    B c = (g.rep.x + g.att.x) / B(2);
    B rx = z.x - c, ry = z.y;
    Dir<B> t{ry, -rx}; // clockwise around the center, i.e. toward larger x
    if (num::sign(g.att.x - g.rep.x) == -1) return {-t.x, -t.y};
    return t;
}

// tangent at interior z toward an ideal endpoint u
template <class B> Dir<B> tangent_toward(const Hpt<B>& z, const Bpt<B>& u) {
    if (u.inf) return {B(0), B(1)};
    int sx = num::sign(u.x - z.x);
    if (sx == 0) return {B(0), B(-1)};
    B c = (z.x * z.x + z.y * z.y - u.x * u.x) / (B(2) * (z.x - u.x));
    B rx = z.x - c, ry = z.y;
    if (sx == 1) return {ry, -rx};
    return {-ry, rx};
}

template <class B> B angle_between(const Dir<B>& u, const Dir<B>& v) {
    B dot = u.x * v.x + u.y * v.y;
    B nn = num::sqrt((u.x * u.x + u.y * u.y) * (v.x * v.x + v.y * v.y));
    return num::acos_clamped(dot / nn);
}

// --------------------------------------------------------------------------
// Geodesic polygons with interior or ideal vertices

template <class B> struct PolyPt {
    bool ideal = false;
    Hpt<B> h{B(0), B(1)};
    Bpt<B> b{B(0), false};

    static PolyPt interior(const Hpt<B>& z) { return {false, z, {}}; }
    static PolyPt at_infinity(const Bpt<B>& u) {
        return {true, {B(0), B(1)}, u};
    }
};

template <class B>
B corner_angle(const PolyPt<B>& prev, const PolyPt<B>& at, const PolyPt<B>& next) {
    if (at.ideal) return B(0);
    Dir<B> u = prev.ideal ? tangent_toward(at.h, prev.b)
                          : tangent_toward(at.h, prev.h);
    Dir<B> v = next.ideal ? tangent_toward(at.h, next.b)
                          : tangent_toward(at.h, next.h);
    return angle_between(u, v);
}

// area by angle defect; vertices must bound a convex geodesic polygon
template <class B> B polygon_area(const std::vector<PolyPt<B>>& vs) {
    size_t n = vs.size();
    if (n < 3) throw DegenerateConfiguration("polygon_area: fewer than 3 vertices");
    B total = B(static_cast<long>(n) - 2) * B::pi();
    for (size_t i = 0; i < n; ++i)
        total -= corner_angle(vs[(i + n - 1) % n], vs[i], vs[(i + 1) % n]);
    return total;
}

template <class B>
B triangle_area(const PolyPt<B>& p, const PolyPt<B>& q, const PolyPt<B>& r) {
    return polygon_area(std::vector<PolyPt<B>>{p, q, r});
}

// --------------------------------------------------------------------------
// Convex clipping.  Polygons here have interior vertices only; edges join
// consecutive vertices along geodesics.  Empty output is a legitimate value.

template <class B> struct Convex {
    std::vector<Hpt<B>> v;

    bool empty() const { return v.size() < 3; }
};

template <class B>
bool contains(const Convex<B>& poly, const Hpt<B>& z, bool closed = true) {
    size_t n = poly.v.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i) {
        Axis<B> e = geodesic_through(poly.v[i], poly.v[(i + 1) % n]);
        int s = side_of(e, z);
        if (s == 2) throw NeedMorePrecision{"convex-contains"};
        if (closed ? s < 0 : s <= 0) return false;
    }
    return true;
}

// keep the side where side_of(cut, z) == keep
template <class B>
Convex<B> clip(const Convex<B>& poly, const Axis<B>& cut, int keep) {
    size_t n = poly.v.size();
    if (n < 3) return {};
    std::vector<int> sides(n);
    for (size_t i = 0; i < n; ++i) {
        int s = side_of(cut, poly.v[i]);
        if (s == 2) throw NeedMorePrecision{"clip-side"};
        sides[i] = s * keep; // +1 kept, -1 dropped, 0 on the cut
    }
    Convex<B> out;
    for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n;
        if (sides[i] >= 0) out.v.push_back(poly.v[i]);
        if (sides[i] * sides[j] < 0) {
            Axis<B> e = geodesic_through(poly.v[i], poly.v[j]);
            out.v.push_back(cross_point(e, cut));
        }
    }
    if (out.v.size() < 3) return {};
    return out;
}

template <class B> B area(const Convex<B>& poly) {
    if (poly.empty()) return B(0);
    std::vector<PolyPt<B>> vs;
    vs.reserve(poly.v.size());
    for (const auto& z : poly.v) vs.push_back(PolyPt<B>::interior(z));
    return polygon_area(vs);
}

} // namespace onesys::geo
