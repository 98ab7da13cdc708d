#pragma once

#include <optional>
#include <vector>

#include "newtonjet/polygon.hpp"

namespace newtonjet {

// Exponent pair of u^a v^b, graded order (total degree, then u-exponent).
struct UVExp {
    long long u = 0;
    long long v = 0;

    friend bool operator==(UVExp a, UVExp b) { return a.u == b.u && a.v == b.v; }
    friend bool operator<(UVExp a, UVExp b) {
        long long da = a.u + a.v, db = b.u + b.v;
        if (da != db) return da < db;
        return a.u < b.u;
    }
};

// Exact polynomial in Z[u,v], sparse.
class BivarPoly {
public:
    BivarPoly() = default;

    static BivarPoly one();
    static BivarPoly monomial(long long u, long long v, const Integer& c = 1);
    // 1 - u^a v^b
    static BivarPoly one_minus(long long a, long long b);
    // 1 + u^a v^b
    static BivarPoly one_plus(long long a, long long b);

    bool is_zero() const { return terms_.empty(); }
    const std::map<UVExp, Integer>& terms() const { return terms_; }
    Integer coeff(long long u, long long v) const;
    void add_term(long long u, long long v, const Integer& c);

    BivarPoly operator-() const;
    friend BivarPoly operator+(const BivarPoly& f, const BivarPoly& g);
    friend BivarPoly operator-(const BivarPoly& f, const BivarPoly& g);
    friend BivarPoly operator*(const BivarPoly& f, const BivarPoly& g);
    friend bool operator==(const BivarPoly& f, const BivarPoly& g) {
        return f.terms_ == g.terms_;
    }

    // product keeping only v-degrees <= vmax
    BivarPoly mul_truncated(const BivarPoly& g, long long vmax) const;
    BivarPoly truncated(long long vmax) const;

    // exact quotient, or nullopt when not divisible
    std::optional<BivarPoly> divide_exact(const BivarPoly& divisor) const;

    std::string to_string() const;

private:
    std::map<UVExp, Integer> terms_;
};

// Rational function with the denominator kept as a multiset of binomial
// factors (1 - u^a v^b). Reduction cancels factors dividing the numerator
// exactly; equality is decided by cross-multiplication.
class BivarRational {
public:
    BivarRational() : num_(BivarPoly::one()) {}
    explicit BivarRational(BivarPoly num) : num_(std::move(num)) { normalize(); }
    BivarRational(BivarPoly num, std::map<std::pair<long long, long long>, long long> den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
        reduce();
    }

    const BivarPoly& numerator() const { return num_; }
    const std::map<std::pair<long long, long long>, long long>& denominator() const {
        return den_;
    }
    BivarPoly denominator_product() const;
    bool is_zero() const { return num_.is_zero(); }

    friend BivarRational operator+(const BivarRational& a, const BivarRational& b);
    friend BivarRational operator*(const BivarRational& a, const BivarRational& b);

    bool equals(const BivarRational& other) const;  // exact, by cross-multiplication

    std::string to_string() const;

private:
    BivarPoly num_;
    std::map<std::pair<long long, long long>, long long> den_;  // (a,b) -> multiplicity

    void normalize();
    void reduce();
};

// Decomposition of H into its closed-form pieces; kept around for rendering
// and for the structural tests.
struct SeriesParts {
    struct RayTerm {
        int ray = 0;
        long long branch_count = 0;
        UVExp exps;  // (|alpha_i|, nu_{alpha_i}(f))
    };
    struct InteriorCone {
        int left_ray = 0, right_ray = 0;  // dual cone of vertex S_{right_ray}
        long long det = 0;
        std::vector<UVExp> cell_terms;  // u^|gamma| v^{nu_gamma} over the half-open cell
        bool product_form_valid = false;  // two-generator product form, det == 1 only
    };
    struct BoundaryCone {
        int ray = 0;                 // adjacent extreme ray (denominator factor)
        int vertex = 0;              // 1-based index of the axis vertex fixing nu
        std::vector<UVExp> offsets;  // u^|beta| v^{nu_beta} within one period
    };

    std::vector<RayTerm> rays;
    std::vector<InteriorCone> interior;
    BoundaryCone below;  // between the x-axis and the lowest ray
    BoundaryCone above;  // between the highest ray and the y-axis
};

SeriesParts series_parts(const CurveData& C);

// R: the infinite-component subsum, sum_i r_i u/(1-uv) * w_i/(1-w_i) with
// w_i = u^{|alpha_i|} v^{alpha_i . S_i}.
BivarRational series_R(const CurveData& C);

// H: the hyperplane subsum, one term u^{|beta|} v^{nu_beta(f)} per
// contributor beta, in closed form over the ray factors.
BivarRational series_H(const CurveData& C);

// G = H + R
BivarRational series_G(const CurveData& C);

// polynomial congruent to r modulo v^{M+1}
BivarPoly truncate(const BivarRational& r, long long M);

// brute-force oracle: direct sum over components of Cont^m up to v^M
BivarPoly enumerate_series(const CurveData& C, long long M);

struct PoleFamily {
    enum class Kind { Diagonal, AntiDiagonal, Ray };

    Kind kind = Kind::Ray;
    int ray = 0;               // Ray kind only
    LatticePoint alpha;        // primitive ray generator
    LatticePoint vertex;       // S_l fixing the v-exponent
    long long exp_u = 0;       // factor 1 - u^{exp_u} v^{exp_v}
    long long exp_v = 0;
    long long delta = 0;       // gcd(exp_u, exp_v); splits the family into
                               // root-of-unity components
    long long den_power = 0;   // exact valuation of the factor in the denominator
    long long num_power = 0;   // exact valuation in the numerator
    long long multiplicity = 0;  // den_power - num_power
    bool certified = false;    // both valuations verified by exact division,
                               // numerator residue not divisible
};

struct PoleReport {
    BivarRational g;
    std::vector<PoleFamily> families;
};

PoleReport poles(const CurveData& C);

}  // namespace newtonjet
