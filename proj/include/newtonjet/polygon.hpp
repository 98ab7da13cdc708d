#pragma once

#include <vector>

#include "newtonjet/poly.hpp"

namespace newtonjet {

// Compact faces of conv(supp(f) + R^2_{>=0}). Vertices run left to right:
// S_1 on the y-axis, S_{t+1} on the x-axis, slopes strictly increasing.
struct NewtonPolygon {
    std::vector<LatticePoint> vertices;  // S_1..S_{t+1}

    std::size_t face_count() const { return vertices.size() - 1; }
};

// Univariate polynomial over the rationals; c[k] is the coefficient of T^k.
struct UnivariatePoly {
    std::vector<Rational> c;

    long long degree() const { return static_cast<long long>(c.size()) - 1; }
    bool squarefree() const;  // gcd(h, h') is constant
    std::string to_string() const;
};

// Dual ray of one compact face: primitive inner normal alpha_i = (p_i, q_i),
// lattice length r_i (= branch count), and the face polynomial whose roots
// are the branch coefficients.
struct TropicalRay {
    int index = 0;             // 1-based; slopes q/p strictly increase with index
    LatticePoint primitive;    // alpha_i, gcd(p,q) = 1
    long long branch_count = 0;
    long long nu_on_ray = 0;   // alpha_i . S_i = alpha_i . S_{i+1}
    UnivariatePoly face_poly;
};

// A validated Newton non-degenerate plane curve singular at the origin.
// When every ray of the input lies strictly below the diagonal, the curve is
// stored with x and y swapped and `swapped` records that.
struct CurveData {
    SparsePoly poly;       // analyzed polynomial (post-swap when swapped)
    SparsePoly input_poly;
    bool swapped = false;
    NewtonPolygon polygon;
    std::vector<TropicalRay> rays;

    long long s_left() const { return polygon.vertices.front().y; }    // S_1 = (0, s_left)
    long long s_right() const { return polygon.vertices.back().x; }    // S_{t+1} = (s_right, 0)
    int ray_count() const { return static_cast<int>(rays.size()); }

    // index of the ray containing gamma, or 0 when gamma is off the
    // tropical variety (gamma must be nonzero)
    int ray_through(LatticePoint gamma) const;
};

NewtonPolygon newton_polygon(const SparsePoly& f);

std::vector<TropicalRay> tropical_rays(const SparsePoly& f, const NewtonPolygon& P);

// Runs every admissibility check and throws input_error with a diagnostic
// naming the offending face or support point on failure.
CurveData validate(const SparsePoly& f);
CurveData validate_expr(const std::string& expr);

// nu_gamma computed from the polygon vertices only
long long nu_polygon(const CurveData& C, LatticePoint gamma);

}  // namespace newtonjet
