#pragma once

#include <utility>
#include <vector>

#include "onesys/geometry.hpp"
#include "onesys/surface.hpp"
#include "onesys/words.hpp"

namespace onesys::dom {

template <class B> using Mat = mob::Mat<B>;
template <class B> using Axis = mob::Axis<B>;

// Dirichlet base point.  Exact dyadic, slightly off the imaginary axis so no
// hexagon symmetry fixes it; lies inside vertex 0's pair of pants for every
// metric this library constructs (distance ~0.1 from cuff 0's axis, far less
// than any collar width that occurs here).
template <class B> geo::Hpt<B> base_point() {
    return {B(1) / B(8), B(5) / B(4)};
}

struct Side {
    wrd::Word word; // g: the side lies on the bisector between o and g(o)
    int mate = -1;  // index of the side whose word is the inverse
};

// Combinatorial fundamental domain: the side list in ccw order plus a coarse
// radius bound.  Geometry is recomputed per numeric type via chart().
struct DirichletDomain {
    std::vector<Side> sides;
    double radius = 0; // upper bound on max_{z in domain} d(base, z)
};

// geometric realization: vertex i joins side i-1 to side i, so the polygon
// edge (v[i], v[i+1]) lies on line[i]
template <class B> struct Chart {
    geo::Hpt<B> base;
    std::vector<Mat<B>> pair_mat; // holonomy of sides[i].word
    std::vector<Axis<B>> line;    // bisector geodesics, base on the + side
    geo::Convex<B> poly;
};

// Perpendicular bisector of the segment [p, q], oriented with p on the
// positive side.
template <class B> Axis<B> bisector(const geo::Hpt<B>& p, const geo::Hpt<B>& q);

DirichletDomain dirichlet_domain(const srf::SurfaceGroup& s);

template <class B>
Chart<B> chart(const srf::SurfaceGroup& s, const DirichletDomain& d);

// area of the realized polygon by angle defect (certified enclosure)
template <class B> B area_angle_defect(const Chart<B>& c);

// independent route: Green's theorem, integrating dx/y along the boundary by
// composite Simpson quadrature in the arclength parameter; no angles
// involved, plain doubles taken from the chart midpoints
double area_quadrature(const Chart<num::MpIv>& c, int panels_per_side = 1024);

// Translate z into the closed domain; returns the word u applied, so that
// the result equals u(z).
template <class B>
std::pair<wrd::Word, geo::Hpt<B>> reduce_point(const Chart<B>& c,
                                               const DirichletDomain& d,
                                               geo::Hpt<B> z);

} // namespace onesys::dom
