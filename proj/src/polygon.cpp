#include "newtonjet/polygon.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace newtonjet {

bool UnivariatePoly::squarefree() const {
    // Euclidean gcd with the derivative
    std::vector<Rational> a = c, b;
    for (std::size_t k = 1; k < c.size(); ++k) b.push_back(c[k] * Rational(k));
    auto degree = [](const std::vector<Rational>& p) {
        for (std::size_t i = p.size(); i-- > 0;)
            if (p[i] != 0) return static_cast<long long>(i);
        return -1LL;
    };
    while (degree(b) > 0) {
        long long da = degree(a), db = degree(b);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        // a -= lead(a)/lead(b) * T^(da-db) * b
        Rational scale = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
        for (long long k = 0; k <= db; ++k)
            a[static_cast<std::size_t>(k + da - db)] -= scale * b[static_cast<std::size_t>(k)];
        if (degree(a) < degree(b)) std::swap(a, b);
    }
    // remainder chain ended: gcd is constant iff b is a nonzero constant,
    // or b == 0 and a is constant (deg <= 0 polynomials are squarefree)
    long long db = degree(b);
    if (db == 0) return true;
    return degree(a) <= 0;
}

std::string UnivariatePoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Rational abs_c = c[k] < 0 ? Rational(-c[k]) : c[k];
        if (first) {
            if (c[k] < 0) os << "-";
            first = false;
        } else {
            os << (c[k] < 0 ? " - " : " + ");
        }
        if (abs_c != 1 || k == 0) os << rational_to_string(abs_c);
        if (k >= 1) {
            os << "T";
            if (k >= 2) os << "^" << k;
        }
    }
    if (first) os << "0";
    return os.str();
}

NewtonPolygon newton_polygon(const SparsePoly& f) {
    if (f.is_zero()) throw input_error("zero polynomial has no Newton polygon");
    if (f.has_term(0, 0)) throw input_error("curve misses the origin");
    if (f.divisible_by_x() || f.divisible_by_y())
        throw input_error("curve contains a coordinate axis - out of scope");

    // minimal b per column a
    std::map<long long, long long> min_b;
    for (const auto& [e, c] : f.terms()) {
        auto [it, inserted] = min_b.emplace(e.a, e.b);
        if (!inserted) it->second = std::min(it->second, e.b);
    }
    // only strictly decreasing column minima can be hull vertices
    std::vector<LatticePoint> pts;
    for (const auto& [a, b] : min_b) {
        if (pts.empty() || b < pts.back().y) pts.push_back({a, b});
    }
    // monotone chain; strict convexity drops points lying on a face
    std::vector<LatticePoint> hull;
    for (const LatticePoint& p : pts) {
        while (hull.size() >= 2) {
            LatticePoint d1 = hull.back() - hull[hull.size() - 2];
            LatticePoint d2 = p - hull.back();
            if (det(d1, d2) <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    NewtonPolygon P;
    P.vertices = std::move(hull);
    return P;
}

std::vector<TropicalRay> tropical_rays(const SparsePoly& f, const NewtonPolygon& P) {
    std::vector<TropicalRay> rays;
    for (std::size_t i = 0; i + 1 < P.vertices.size(); ++i) {
        LatticePoint s = P.vertices[i];
        LatticePoint d = P.vertices[i + 1] - s;  // (positive, negative)
        auto [len, dir] = gcd_primitive(d);
        TropicalRay ray;
        ray.index = static_cast<int>(i + 1);
        ray.primitive = {-dir.y, dir.x};  // inner normal of the face
        ray.branch_count = len;
        ray.nu_on_ray = ray.primitive.x * s.x + ray.primitive.y * s.y;
        ray.face_poly.c.resize(static_cast<std::size_t>(len) + 1);
        for (long long k = 0; k <= len; ++k) {
            LatticePoint p = s + k * dir;
            ray.face_poly.c[static_cast<std::size_t>(k)] = f.coeff(p.x, p.y);
        }
        rays.push_back(std::move(ray));
    }
    return rays;
}

int CurveData::ray_through(LatticePoint gamma) const {
    for (const TropicalRay& ray : rays) {
        long long p = ray.primitive.x, q = ray.primitive.y;
        long long s = p != 0 ? gamma.x / p : gamma.y / q;
        if (s >= 1 && gamma == s * ray.primitive) return ray.index;
    }
    return 0;
}

namespace {

CurveData validate_normalized(const SparsePoly& f, const SparsePoly& input, bool swapped) {
    CurveData C;
    C.poly = f;
    C.input_poly = input;
    C.swapped = swapped;
    C.polygon = newton_polygon(f);
    for (const auto& [e, c] : f.terms()) {
        if (e.a + e.b < 2)
            throw input_error("support point " + to_string({e.a, e.b}) + " has total degree " +
                              std::to_string(e.a + e.b) + " (smooth at origin)");
    }
    C.rays = tropical_rays(f, C.polygon);
    for (const TropicalRay& ray : C.rays) {
        if (!ray.face_poly.squarefree())
            throw input_error("face " + std::to_string(ray.index) + " polynomial " +
                              ray.face_poly.to_string() + " is not squarefree");
    }
    return C;
}

}  // namespace

CurveData validate(const SparsePoly& f) {
    CurveData C = validate_normalized(f, f, false);
    // curves whose rays all lie strictly below the diagonal are analyzed in
    // swapped coordinates
    bool all_below = true;
    for (const TropicalRay& ray : C.rays)
        if (ray.primitive.y >= ray.primitive.x) all_below = false;
    if (!all_below) return C;
    return validate_normalized(f.swap_xy(), f, true);
}

CurveData validate_expr(const std::string& expr) { return validate(parse_poly(expr)); }

long long nu_polygon(const CurveData& C, LatticePoint gamma) {
    bool first = true;
    long long best = 0;
    for (const LatticePoint& s : C.polygon.vertices) {
        long long w = gamma.x * s.x + gamma.y * s.y;
        if (first || w < best) best = w;
        first = false;
    }
    return best;
}

}  // namespace newtonjet
