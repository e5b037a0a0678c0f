#pragma once

#include <utility>

#include "onesys/errors.hpp"
#include "onesys/numeric.hpp"

// Real Moebius transformations acting on the upper half plane, plus the
// boundary-circle predicates everything else is built from.
//
// Conventions (fixed, relied on throughout):
//   * matrices act as z -> (az+b)/(cz+d), det > 0
//   * axis(M) returns (repelling, attracting) fixed points
//   * ccw(u,v,w) is the counterclockwise circular order on the boundary
//     circle R u {inf}; ccw(0,1,inf) holds
//   * std_map(p,q) sends 0 -> p, inf -> q, so the image of the upward
//     imaginary axis is the geodesic p -> q

namespace onesys::mob {

using onesys::NeedMorePrecision;

template <class B> struct Mat {
    B a, b, c, d;

    static Mat identity() { return {B(1), B(0), B(0), B(1)}; }

    // diag(e^{l/2}, e^{-l/2}): translation by l along the imaginary axis
    static Mat axis_shift(const B& l) {
        B e = num::exp(l / B(2));
        return {e, B(0), B(0), B(1) / e};
    }

    // translation by d along the unit half circle (axis through -1, 1)
    static Mat seam_shift(const B& d) {
        B ch = num::cosh(d / B(2)), sh = num::sinh(d / B(2));
        return {ch, sh, sh, ch};
    }

    // quarter turn fixing i, swaps the ends of the imaginary axis
    static Mat half_turn() { return {B(0), B(1), B(-1), B(0)}; }

    B tr() const { return a + d; }
    B det() const { return a * d - b * c; }

    Mat adj() const { return {d, -b, -c, a}; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
};

// max entry distance of the det-1 representatives, minimized over the sign
// ambiguity; zero exactly when the maps agree projectively
template <class B> B proj_residual(const Mat<B>& m, const Mat<B>& n) {
    B s = num::sqrt(m.det()), t = num::sqrt(n.det());
    auto entry = [&](const B& u, const B& v, bool flip) {
        return num::abs(u / s + (flip ? v / t : -(v / t)));
    };
    B dsame = num::max(num::max(entry(m.a, n.a, false), entry(m.b, n.b, false)),
                       num::max(entry(m.c, n.c, false), entry(m.d, n.d, false)));
    B dflip = num::max(num::max(entry(m.a, n.a, true), entry(m.b, n.b, true)),
                       num::max(entry(m.c, n.c, true), entry(m.d, n.d, true)));
    return num::min(dsame, dflip);
}

// scale-free equality up to sign, for tolerance checks in tests and
// internal sanity assertions (never a branch point)
template <class B>
bool proj_close(const Mat<B>& m, const Mat<B>& n, const B& tol) {
    return num::raw_sign(proj_residual(m, n) - tol) == -1;
}

// |tr| of the det-1 representative
template <class B> B abs_trace(const Mat<B>& m) {
    return num::abs(m.tr()) / num::sqrt(m.det());
}

template <class B> bool is_hyperbolic(const Mat<B>& m) {
    int s = num::raw_sign(abs_trace(m) - B(2));
    if (s == 2) throw NeedMorePrecision{"is_hyperbolic"};
    return s == 1;
}

template <class B> B translation_length(const Mat<B>& m) {
    if (!is_hyperbolic(m)) throw NotHyperbolic("translation_length");
    return B(2) * num::acosh_ge1(abs_trace(m) / B(2));
}

// Product leaf(lo) * ... * leaf(hi-1) with balanced bracketing.  Interval
// widths in a matrix chain grow with the norms of the evaluated subproducts;
// bracketing in halves keeps those subproducts contiguous subwords, whose
// norms cancellation keeps small, instead of the full prefix-times-remaining
// growth of a left-to-right fold.
template <class B, class F>
Mat<B> chain_product(size_t lo, size_t hi, const F& leaf) {
    if (lo >= hi) return Mat<B>::identity();
    if (hi - lo == 1) return leaf(lo);
    size_t mid = lo + (hi - lo) / 2;
    return chain_product<B>(lo, mid, leaf) * chain_product<B>(mid, hi, leaf);
}

// --------------------------------------------------------------------------
// Boundary points

template <class B> struct Bpt {
    B x;
    bool inf = false;

    static Bpt infinity() { return {B(0), true}; }
    static Bpt at(const B& v) { return {v, false}; }
};

template <class B> Bpt<B> apply(const Mat<B>& m, const Bpt<B>& u) {
    if (u.inf) {
        if (num::raw_sign(m.c) == 0) return Bpt<B>::infinity();
        return Bpt<B>::at(m.a / m.c);
    }
    B den = m.c * u.x + m.d;
    int s = num::raw_sign(den);
    if (s == 0) return Bpt<B>::infinity();
    if (s == 2) throw NeedMorePrecision{"apply-boundary"};
    return Bpt<B>::at((m.a * u.x + m.b) / den);
}

// counterclockwise order of three distinct boundary points
template <class B> bool ccw(const Bpt<B>& u, const Bpt<B>& v, const Bpt<B>& w) {
    if (u.inf) return ccw(v, w, u);
    if (v.inf) return ccw(w, u, v);
    if (w.inf) return num::lt(u.x, v.x);
    return num::sign((u.x - v.x) * (v.x - w.x) * (w.x - u.x)) == 1;
}

// whether x lies on the counterclockwise open arc from a to b
template <class B>
bool in_arc(const Bpt<B>& a, const Bpt<B>& x, const Bpt<B>& b) {
    return ccw(a, x, b);
}

// --------------------------------------------------------------------------
// Axes

template <class B> struct Axis {
    Bpt<B> rep, att; // oriented from repelling to attracting endpoint
};

template <class B> Axis<B> axis_of(const Mat<B>& m) {
    if (!is_hyperbolic(m)) throw NotHyperbolic("axis_of");
    int sc = num::raw_sign(m.c);
    if (sc == 2) throw NeedMorePrecision{"axis-c"};
    if (sc == 0) {
        B p = m.b / (m.d - m.a);
        bool inf_attracts = num::gt(num::abs(m.a), num::abs(m.d));
        if (inf_attracts) return {Bpt<B>::at(p), Bpt<B>::infinity()};
        return {Bpt<B>::infinity(), Bpt<B>::at(p)};
    }
    B t = m.tr();
    B disc = num::sqrt(t * t - B(4) * m.det());
    B z1 = (m.a - m.d + disc) / (B(2) * m.c);
    B z2 = (m.a - m.d - disc) / (B(2) * m.c);
    // attracting fixed point: |M'| < 1 there, i.e. |c z + d| > det^{1/2}
    B q = num::abs(m.c * z1 + m.d) - num::sqrt(m.det());
    int s = num::sign(q);
    if (s == 1) return {Bpt<B>::at(z2), Bpt<B>::at(z1)};
    return {Bpt<B>::at(z1), Bpt<B>::at(z2)};
}

template <class B> Axis<B> apply(const Mat<B>& m, const Axis<B>& ax) {
    return {apply(m, ax.rep), apply(m, ax.att)};
}

template <class B> Axis<B> reversed(const Axis<B>& ax) { return {ax.att, ax.rep}; }

// two axes cross iff their endpoint pairs separate each other on the circle
template <class B> bool linked(const Axis<B>& g, const Axis<B>& h) {
    bool s1 = ccw(g.rep, h.rep, g.att);
    bool s2 = ccw(g.rep, h.att, g.att);
    return s1 != s2;
}

// Same predicate straight from the matrices: the fixed points of m are the
// roots of c z^2 + (d - a) z - b, and two root pairs interlock iff the
// resultant of the quadratics is negative.  Stays decidable when an axis
// passes through infinity (leading coefficient 0), where an enclosure of the
// endpoints cannot settle the c == 0 branch.
template <class B> bool linked(const Mat<B>& m, const Mat<B>& n) {
    B em = m.d - m.a, en = n.d - n.a;
    B res = num::sq(n.c * m.b - m.c * n.b) -
            (m.c * en - n.c * em) * (en * m.b - em * n.b);
    return num::sign(res) == -1;
}

} // namespace onesys::mob
