#include "onesys/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <complex>
#include <cstdlib>
#include <limits>
#include <set>
#include <type_traits>

#include "onesys/errors.hpp"

namespace onesys::dom {

namespace {

template <class B> double hi_double(const B& v) {
    if constexpr (std::is_same_v<B, num::DBall>)
        return v.hi();
    else
        return v.hi_d();
}

// ---------------------------------------------------------------------------
// Disk-model scaffolding.  The half-plane is sent to the unit disk centered
// at the base point o by z -> (z - o)/(z - conj o); in the Klein picture the
// geodesics become straight chords, so the region search below is ordinary
// Euclidean polygon clipping.  A Euclidean square around the disk stands in
// for "unbounded": no finite collection of geodesic sides can enclose a
// large hyperbolic ball, which rules out doing this directly in the
// half-plane.

template <class B> struct Kv {
    B x, y;
};

// image of a boundary point on the unit circle
template <class B> Kv<B> to_circle(const geo::Hpt<B>& o, const mob::Bpt<B>& u) {
    if (u.inf) return {B(1), B(0)};
    B t = u.x - o.x;
    B den = t * t + o.y * o.y;
    return {(t * t - o.y * o.y) / den, B(-2) * t * o.y / den};
}

// oriented chord; the base point (the disk center) has positive side value
template <class B> struct Chord {
    Kv<B> a, b;
};

template <class B> B side_value(const Chord<B>& c, const Kv<B>& p) {
    return (c.b.x - c.a.x) * (p.y - c.a.y) - (c.b.y - c.a.y) * (p.x - c.a.x);
}

template <class B>
Chord<B> chord_of(const geo::Hpt<B>& o, const mob::Axis<B>& bis) {
    Kv<B> a = to_circle(o, bis.rep), b = to_circle(o, bis.att);
    if (num::sign(a.x * b.y - a.y * b.x) == -1) std::swap(a, b);
    return {a, b};
}

template <class B> struct KPoly {
    std::vector<Kv<B>> v;
    std::vector<int> lab; // lab[i] owns the edge (v[i], v[i+1])
};

template <class B> KPoly<B> seed_square() {
    KPoly<B> p;
    p.v = {{B(2), B(-2)}, {B(2), B(2)}, {B(-2), B(2)}, {B(-2), B(-2)}};
    p.lab = {-1, -2, -3, -4};
    return p;
}

template <class B>
KPoly<B> clip_labeled(const KPoly<B>& p, const Chord<B>& cut, int newlab) {
    size_t n = p.v.size();
    std::vector<B> val;
    std::vector<int> s(n);
    for (size_t i = 0; i < n; ++i) {
        val.push_back(side_value(cut, p.v[i]));
        s[i] = num::raw_sign(val[i]);
        if (s[i] == 2) {
            if (std::getenv("ONESYS_DOM_DEBUG")) {
                if constexpr (std::is_same_v<B, num::MpIv>)
                    std::fprintf(stderr,
                                 "  ambiguous side: newlab %d vert %zu "
                                 "(labs %d,%d) val [%.3e, %.3e]\n",
                                 newlab, i, p.lab[(i + n - 1) % n], p.lab[i],
                                 val[i].lo_d(), val[i].hi_d());
            }
            throw NeedMorePrecision{"clip-side"};
        }
    }
    auto crossing = [&](size_t i, size_t j) -> Kv<B> {
        B t = val[i] / (val[i] - val[j]);
        return {p.v[i].x + t * (p.v[j].x - p.v[i].x),
                p.v[i].y + t * (p.v[j].y - p.v[i].y)};
    };
    KPoly<B> out;
    for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n;
        if (s[i] > 0) {
            out.v.push_back(p.v[i]);
            out.lab.push_back(p.lab[i]);
            if (s[j] < 0) {
                out.v.push_back(crossing(i, j));
                out.lab.push_back(newlab);
            }
        } else if (s[i] == 0) {
            out.v.push_back(p.v[i]);
            out.lab.push_back(s[j] >= 0 ? p.lab[i] : newlab);
        } else if (s[j] > 0) {
            out.v.push_back(crossing(i, j));
            out.lab.push_back(p.lab[i]);
        }
    }
    if (out.v.size() < 3) throw ConstructionFailed("domain clipped away");
    return out;
}

// distance from the base point, +inf when the vertex is not certified to be
// inside the disk
template <class B> double vertex_dist_hi(const Kv<B>& k) {
    B n2 = k.x * k.x + k.y * k.y;
    if (num::raw_sign(n2 - B(1)) != -1)
        return std::numeric_limits<double>::infinity();
    double r = std::sqrt(hi_double(n2));
    return 0.5 * std::log((1 + r) / (1 - r)) + 1e-12;
}

// Klein vertex back to the half-plane
template <class B> geo::Hpt<B> to_uhp(const geo::Hpt<B>& o, const Kv<B>& k) {
    B n2 = k.x * k.x + k.y * k.y;
    B scale = B(1) + num::sqrt(B(1) - n2);
    B px = k.x / scale, py = k.y / scale; // conformal disk coordinates
    B nre = o.x * (B(1) - px) - o.y * py;
    B nim = o.y * (B(1) + px) - o.x * py;
    B dre = B(1) - px, dim = -py;
    B d2 = dre * dre + dim * dim;
    return {(nre * dre + nim * dim) / d2, (nim * dre - nre * dim) / d2};
}

} // namespace

template <class B>
Axis<B> bisector(const geo::Hpt<B>& p, const geo::Hpt<B>& q) {
    Axis<B> g = geo::geodesic_through(p, q);
    Mat<B> m = geo::std_map(g);
    B em = num::exp((geo::foot_param(m, p) + geo::foot_param(m, q)) / B(2));
    Axis<B> bis{mob::apply(m, mob::Bpt<B>::at(-em)),
                mob::apply(m, mob::Bpt<B>::at(em))};
    if (geo::side_of(bis, p) == -1) return mob::reversed(bis);
    return bis;
}

namespace {

// One full run of the side-element iteration at a fixed numeric type.
//
// Invariant: the clipped region always contains the true Dirichlet domain,
// because it is the intersection of a subset of its half-planes.  The run
// accepts only when the pairing data proves there is nothing left to cut:
// sides pair into exact group inverses, every vertex cycle has trivial
// pairing product (a word check, not a numeric one) with angle sum pinned to
// one turn, and the certified area matches the value forced by the genus.
template <class B>
DirichletDomain attempt(const srf::SurfaceGroup& s,
                        const std::vector<wrd::Word>& seeds) {
    const srf::Developed<B>& dev = s.developed<B>();
    const wrd::Group& grp = s.group();
    geo::Hpt<B> o = base_point<B>();
    B target = B(4 * (s.genus() - 1)) * B::pi();
    B tol{1e-9};
    const double inf = std::numeric_limits<double>::infinity();

    struct Cand {
        wrd::Word w;
        Mat<B> m;
        Chord<B> ch;
        double disp;
        double tx, ty;     // midpoint of the translate of o, for reduction
        double ax[4] = {}; // axis endpoints on the circle, canonical order
    };
    std::vector<Cand> pool;
    std::set<wrd::Word> proposed;

    auto hyp_mid = [](double ax, double ay, double bx, double by) {
        double dx = ax - bx, dy = ay - by;
        return std::acosh(1 + (dx * dx + dy * dy) / (2 * ay * by));
    };

    // snapshot of the round's polygon used to screen proposals cheaply
    struct Screen {
        std::vector<std::pair<double, double>> verts; // Klein midpoints
        double maxv;
    };

    // True when the chord could remove part of the screened polygon: some
    // vertex sits on (or near) the far side.  The region only shrinks from
    // round to round, so a chord that clearly misses now can never carry a
    // side later and its element may be dropped for good.
    auto cuts = [](const Chord<B>& ch, const Screen& sc) {
        double ax = ch.a.x.mid(), ay = ch.a.y.mid();
        double bx = ch.b.x.mid(), by = ch.b.y.mid();
        for (auto [vx, vy] : sc.verts)
            if ((bx - ax) * (vy - ay) - (by - ay) * (vx - ax) < 1e-9)
                return true;
        return false;
    };

    // admit w and its inverse as candidates; returns how many were added
    auto admit = [&](wrd::Word w, const Screen* sc) -> int {
        w = wrd::reduce(w);
        if (w.empty()) return 0;
        if (!proposed.insert(w).second) return 0;
        Mat<B> m = dev.of_word(w);
        geo::Hpt<B> to = geo::apply(m, o);
        double tx = to.x.mid(), ty = to.y.mid();
        double disp = geo::dist(o, to).mid();
        if (disp < 1e-7 && grp.is_trivial(w)) return 0;
        // fixed points of the element, as circle midpoints; only a probe
        // key for spotting coaxial candidates, so plain doubles suffice
        double ox = o.x.mid(), oy = o.y.mid();
        auto circle_pt = [&](double u, bool at_inf) {
            if (at_inf) return std::pair<double, double>{1.0, 0.0};
            double t = u - ox;
            double den = t * t + oy * oy;
            return std::pair<double, double>{(t * t - oy * oy) / den,
                                             -2 * t * oy / den};
        };
        double ma = m.a.mid(), mb = m.b.mid(), mc = m.c.mid(),
               md = m.d.mid();
        std::pair<double, double> f0, f1;
        if (std::abs(mc) < 1e-14 * (std::abs(ma) + std::abs(md))) {
            f0 = circle_pt(mb / (md - ma), false);
            f1 = circle_pt(0, true);
        } else {
            double gap = ma - md;
            double s = std::sqrt(std::max(gap * gap + 4 * mb * mc, 0.0));
            double q = gap >= 0 ? gap + s : gap - s;
            double rb = q / (2 * mc);
            f0 = circle_pt(rb, false);
            f1 = circle_pt(rb == 0 ? 0 : -mb / (mc * rb), false);
        }
        double ax[4] = {f0.first, f0.second, f1.first, f1.second};
        if (ax[2] < ax[0] || (ax[2] == ax[0] && ax[3] < ax[1])) {
            std::swap(ax[0], ax[2]);
            std::swap(ax[1], ax[3]);
        }
        for (const Cand& c : pool) {
            if (hyp_mid(c.tx, c.ty, tx, ty) < 1e-6) return 0;
            // a longer element on the axis of a shorter one never cuts
            // deeper than the shorter pair already did (its near half-plane
            // contains theirs), and the pool keeps inverses paired, so the
            // shorter pair always clips first
            if (std::abs(ax[0] - c.ax[0]) < 1e-6 &&
                std::abs(ax[1] - c.ax[1]) < 1e-6 &&
                std::abs(ax[2] - c.ax[2]) < 1e-6 &&
                std::abs(ax[3] - c.ax[3]) < 1e-6 && disp > c.disp + 0.1 &&
                grp.is_trivial(wrd::concat(
                    wrd::concat(w, c.w),
                    wrd::concat(wrd::inverse(w), wrd::inverse(c.w)))))
                return 0;
        }
        if (sc && disp / 2 > sc->maxv + 1e-6) return 0;
        Chord<B> ch = chord_of(o, bisector(o, to));
        if (sc && !cuts(ch, *sc)) return 0;
        pool.push_back({w, std::move(m), ch, disp, tx, ty,
                        {ax[0], ax[1], ax[2], ax[3]}});
        wrd::Word inv = wrd::inverse(w);
        proposed.insert(inv);
        Mat<B> mi = dev.of_word(inv);
        geo::Hpt<B> ti = geo::apply(mi, o);
        Chord<B> chi = chord_of(o, bisector(o, ti));
        double ix = ti.x.mid(), iy = ti.y.mid();
        pool.push_back({std::move(inv), std::move(mi), chi, disp, ix, iy,
                        {ax[0], ax[1], ax[2], ax[3]}});
        return 2;
    };

    const bool dbg = std::getenv("ONESYS_DOM_DEBUG") != nullptr;
    std::vector<size_t> side_idx;
    double maxv = inf;
    for (const auto& w : seeds) admit(w, nullptr);

    const double ox = o.x.mid(), oy = o.y.mid();
    const std::complex<double> oc{ox, oy}, occ{ox, -oy};
    // Klein coordinates (around the base point) of a upper half plane point
    auto klein_of = [&](std::complex<double> z) {
        std::complex<double> w = (z - oc) / (z - occ);
        double n = std::norm(w);
        return std::pair<double, double>{2 * w.real() / (1 + n),
                                         2 * w.imag() / (1 + n)};
    };

    for (int round = 0; round < 256; ++round) {
        std::vector<size_t> order(pool.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return pool[a].disp < pool[b].disp;
        });

        KPoly<B> poly = seed_square<B>();
        maxv = inf;
        auto refresh_maxv = [&] {
            maxv = 0;
            for (const auto& k : poly.v)
                maxv = std::max(maxv, vertex_dist_hi(k));
        };
        refresh_maxv();
        // Bisector chords of coaxial elements are perpendiculars of the
        // shared axis, so their extensions all pass through the pole of
        // that axis: a single point, outside the disk but often inside the
        // scaffolding square.  Once the smallest power has cut, every larger
        // one only touches the region at that exact point, where the side
        // test is identically zero and no precision decides it.  Those cuts
        // are redundant anyway: the near half-planes of a coaxial family are
        // nested by displacement.  Same axis means commuting here (the
        // stabilizer of a geodesic is cyclic), an exact word test.
        std::vector<size_t> applied;
        auto coaxial_redundant = [&](size_t idx) {
            const Cand& cw = pool[idx];
            for (size_t ai : applied) {
                const Cand& cc = pool[ai];
                if (std::abs(cw.ax[0] - cc.ax[0]) > 1e-6 ||
                    std::abs(cw.ax[1] - cc.ax[1]) > 1e-6 ||
                    std::abs(cw.ax[2] - cc.ax[2]) > 1e-6 ||
                    std::abs(cw.ax[3] - cc.ax[3]) > 1e-6)
                    continue;
                if (cw.disp < cc.disp + 0.1) continue;
                wrd::Word comm =
                    wrd::concat(wrd::concat(cw.w, cc.w),
                                wrd::concat(wrd::inverse(cw.w),
                                            wrd::inverse(cc.w)));
                if (grp.is_trivial(comm)) return true;
            }
            return false;
        };
        for (size_t idx : order) {
            if (pool[idx].disp / 2 > maxv + 1e-9) break;
            if (coaxial_redundant(idx)) continue;
            applied.push_back(idx);
            if (dbg) {
                try {
                    poly = clip_labeled(poly, pool[idx].ch,
                                        static_cast<int>(idx));
                } catch (const NeedMorePrecision&) {
                    std::fprintf(stderr, "  cutting word [%s] disp %.6f\n",
                                 wrd::show(pool[idx].w).c_str(),
                                 pool[idx].disp);
                    for (size_t i = 0; i < poly.v.size(); ++i)
                        std::fprintf(
                            stderr, "    vert %zu lab %d [%s]\n", i,
                            poly.lab[i],
                            poly.lab[i] >= 0
                                ? wrd::show(pool[poly.lab[i]].w).c_str()
                                : "box");
                    throw;
                }
            } else {
                poly = clip_labeled(poly, pool[idx].ch,
                                    static_cast<int>(idx));
            }
            refresh_maxv();
        }

        size_t n = poly.v.size();
        bool boxed = maxv == inf;
        for (int l : poly.lab) boxed |= l < 0;
        side_idx.clear();
        for (int l : poly.lab)
            if (l >= 0) side_idx.push_back(static_cast<size_t>(l));

        if (dbg) {
            std::fprintf(stderr,
                         "round %d: pool %zu, %zu verts, boxed %d, maxv %.3f,"
                         " labels",
                         round, pool.size(), n, (int)boxed, maxv);
            for (int l : poly.lab) std::fprintf(stderr, " %d", l);
            std::fprintf(stderr, "\n");
        }

        if (!boxed) {
            std::vector<geo::PolyPt<B>> uv;
            for (const auto& k : poly.v)
                uv.push_back(geo::PolyPt<B>::interior(to_uhp(o, k)));
            B excess = geo::polygon_area(uv) - target;
            if (dbg)
                std::fprintf(stderr, "  excess area %.3e\n", excess.mid());
            if (num::raw_sign(excess + tol) == -1)
                throw std::logic_error("fundamental domain area below the "
                                       "value forced by the genus");
            int se = num::raw_sign(excess - tol);
            if (se == 2) throw NeedMorePrecision{"domain area"};
            if (se == -1) {
                // candidate complete: try to certify the pairing exactly
                std::vector<int> mate(n, -1);
                bool ok = true;
                for (size_t i = 0; i < n && ok; ++i) {
                    for (size_t j = 0; j < n; ++j) {
                        if (i == j) continue;
                        if (grp.is_trivial(
                                wrd::concat(pool[poly.lab[i]].w,
                                            pool[poly.lab[j]].w))) {
                            if (mate[i] != -1) ok = false; // ambiguous
                            mate[i] = static_cast<int>(j);
                        }
                    }
                    if (mate[i] == -1) ok = false;
                }
                // vertex cycles: v -> tail of the mate of its edge; the
                // accumulated pairing word must be trivial and the angles
                // must certify a single full turn
                std::vector<char> seen(n, 0);
                for (size_t i = 0; i < n && ok; ++i) {
                    if (seen[i]) continue;
                    wrd::Word prod;
                    B angle{0.0};
                    size_t a = i;
                    do {
                        seen[a] = 1;
                        angle = angle + geo::corner_angle(uv[(a + n - 1) % n],
                                                          uv[a],
                                                          uv[(a + 1) % n]);
                        prod = wrd::concat(prod, pool[poly.lab[a]].w);
                        a = (static_cast<size_t>(mate[a]) + 1) % n;
                    } while (a != i && prod.size() < 64 * n);
                    ok = ok && a == i && grp.is_trivial(prod);
                    if (ok) {
                        int lo = num::raw_sign(angle - B::pi());
                        int hi = num::raw_sign(B(3) * B::pi() - angle);
                        if (lo == 2 || hi == 2)
                            throw NeedMorePrecision{"vertex cycle angle"};
                        // trivial product means the angle is an exact number
                        // of turns; the enclosure then pins it to one
                        ok = lo == 1 && hi == 1;
                    }
                }
                if (ok) {
                    DirichletDomain d;
                    for (size_t i = 0; i < n; ++i)
                        d.sides.push_back({pool[poly.lab[i]].w, mate[i]});
                    d.radius = maxv + 1e-9;
                    return d;
                }
                if (dbg) std::fprintf(stderr, "  pairing not closed yet\n");
            }
        }

        // grow in two ways: products of the current side elements (the next
        // shell of neighbours), and reduction of every pool element across
        // the current sides.  An element's own bisector already clipped the
        // region, so its translate of the base point sits outside; walking
        // the translate back inside through the side pairings ends at an
        // element whose translate is interior, and whose bisector therefore
        // still cuts the region.  That is what forces progress while the
        // region is too large: reductions can only dry up once the region
        // has shrunk to the true domain, and by then it has frozen above.
        Screen sc;
        sc.maxv = maxv;
        for (const auto& k : poly.v)
            sc.verts.push_back({k.x.mid(), k.y.mid()});
        int added = 0;
        for (size_t u : side_idx)
            for (size_t j : side_idx) {
                if (pool.size() > 20000)
                    throw ConstructionFailed("domain candidate explosion");
                // copies: admit() may reallocate the pool
                wrd::Word a = pool[u].w;
                wrd::Word b = pool[j].w;
                added += admit(wrd::concat(a, b), &sc);
                added += admit(wrd::concat(b, a), &sc);
                added += admit(wrd::concat(a, wrd::inverse(b)), &sc);
                added += admit(wrd::concat(wrd::inverse(b), a), &sc);
            }

        struct DSide {
            double ax, ay, bx, by; // chord midpoints
            double ma, mb, mc, md; // pairing matrix midpoints
            wrd::Word w;
        };
        std::vector<DSide> ds;
        for (size_t j : side_idx) {
            const Cand& c = pool[j];
            ds.push_back({c.ch.a.x.mid(), c.ch.a.y.mid(), c.ch.b.x.mid(),
                          c.ch.b.y.mid(), c.m.a.mid(), c.m.b.mid(),
                          c.m.c.mid(), c.m.d.mid(), c.w});
        }
        size_t snapshot = pool.size();
        for (size_t u = 0; u < snapshot && !ds.empty(); ++u) {
            wrd::Word g = pool[u].w;
            std::complex<double> q{pool[u].tx, pool[u].ty};
            for (int step = 0; step < 256 && !g.empty(); ++step) {
                auto [kx, ky] = klein_of(q);
                const DSide* hit = nullptr;
                for (const DSide& s : ds)
                    if ((s.bx - s.ax) * (ky - s.ay) -
                            (s.by - s.ay) * (kx - s.ax) <
                        -1e-12) {
                        hit = &s;
                        break;
                    }
                if (!hit) break;
                q = (hit->md * q - hit->mb) / (-hit->mc * q + hit->ma);
                g = wrd::reduce(wrd::concat(wrd::inverse(hit->w), g));
            }
            if (!g.empty()) added += admit(g, &sc);
            if (pool.size() > 20000)
                throw ConstructionFailed("domain candidate explosion");
        }
        if (dbg) std::fprintf(stderr, "  grew by %d\n", added);
        if (added == 0)
            throw ConstructionFailed("domain iteration stalled");
    }
    throw ConstructionFailed("domain iteration did not converge");
}

} // namespace

DirichletDomain dirichlet_domain(const srf::SurfaceGroup& s) {
    std::vector<wrd::Word> seeds;
    for (int k = 1; k <= 2 * s.genus(); ++k) seeds.push_back({k});
    for (size_t e = 0; e < s.graph().edges.size(); ++e)
        seeds.push_back(s.cuff_word(static_cast<int>(e)));
    return num::certified(
        [&](auto tag) { return attempt<decltype(tag)>(s, seeds); });
}

template <class B>
Chart<B> chart(const srf::SurfaceGroup& s, const DirichletDomain& d) {
    const srf::Developed<B>& dev = s.developed<B>();
    Chart<B> c;
    c.base = base_point<B>();
    size_t n = d.sides.size();
    for (const Side& sd : d.sides) {
        Mat<B> m = dev.of_word(sd.word);
        c.line.push_back(bisector(c.base, geo::apply(m, c.base)));
        c.pair_mat.push_back(std::move(m));
    }
    for (size_t i = 0; i < n; ++i)
        c.poly.v.push_back(
            geo::cross_point(c.line[(i + n - 1) % n], c.line[i]));
    return c;
}

template <class B> B area_angle_defect(const Chart<B>& c) {
    std::vector<geo::PolyPt<B>> vs;
    for (const auto& z : c.poly.v) vs.push_back(geo::PolyPt<B>::interior(z));
    return geo::polygon_area(vs);
}

double area_quadrature(const Chart<num::MpIv>& c, int panels_per_side) {
    double total = 0;
    size_t n = c.poly.v.size();
    for (size_t i = 0; i < n; ++i) {
        Mat<num::MpIv> m = geo::std_map(c.line[i]);
        double s0 = geo::foot_param(m, c.poly.v[i]).mid();
        double s1 = geo::foot_param(m, c.poly.v[(i + 1) % n]).mid();
        double cc = m.c.mid(), dd = m.d.mid();
        // x'(s)/y(s) for z(s) = M(i e^s) reduces to 2 t c d / (d^2 + c^2 t^2)
        auto f = [&](double s) {
            double t = std::exp(s);
            return 2 * t * cc * dd / (dd * dd + cc * cc * t * t);
        };
        int k = panels_per_side;
        double h = (s1 - s0) / k, sum = f(s0) + f(s1);
        for (int j = 1; j < k; ++j) sum += (j % 2 ? 4.0 : 2.0) * f(s0 + j * h);
        total += sum * h / 3;
    }
    return total;
}

template <class B>
std::pair<wrd::Word, geo::Hpt<B>> reduce_point(const Chart<B>& c,
                                               const DirichletDomain& d,
                                               geo::Hpt<B> z) {
    wrd::Word u;
    size_t n = d.sides.size();
    for (long guard = 0; guard < 100000; ++guard) {
        bool moved = false;
        for (size_t i = 0; i < n && !moved; ++i) {
            if (geo::side_of(c.line[i], z) == -1) {
                // closer to sides[i].word(base) than to base: pull back
                z = geo::apply(c.pair_mat[i].adj(), z);
                u = wrd::reduce(
                    wrd::concat(wrd::inverse(d.sides[i].word), u));
                moved = true;
            }
        }
        if (!moved) return {u, z};
    }
    throw ConstructionFailed("point reduction did not terminate");
}

template Axis<num::DBall> bisector(const geo::Hpt<num::DBall>&,
                                   const geo::Hpt<num::DBall>&);
template Axis<num::MpIv> bisector(const geo::Hpt<num::MpIv>&,
                                  const geo::Hpt<num::MpIv>&);
template Chart<num::DBall> chart(const srf::SurfaceGroup&,
                                 const DirichletDomain&);
template Chart<num::MpIv> chart(const srf::SurfaceGroup&,
                                const DirichletDomain&);
template num::DBall area_angle_defect(const Chart<num::DBall>&);
template num::MpIv area_angle_defect(const Chart<num::MpIv>&);
template std::pair<wrd::Word, geo::Hpt<num::DBall>> reduce_point(
    const Chart<num::DBall>&, const DirichletDomain&, geo::Hpt<num::DBall>);
template std::pair<wrd::Word, geo::Hpt<num::MpIv>> reduce_point(
    const Chart<num::MpIv>&, const DirichletDomain&, geo::Hpt<num::MpIv>);

} // namespace onesys::dom
