#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "newtonjet/errors.hpp"
#include "newtonjet/lattice.hpp"

namespace newtonjet {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent pair of x^a y^b, ordered by total degree first, then x-exponent.
// This graded order fixes the printing order of terms.
struct Exponents {
    long long a = 0;
    long long b = 0;

    friend bool operator==(Exponents u, Exponents v) { return u.a == v.a && u.b == v.b; }
    friend bool operator<(Exponents u, Exponents v) {
        long long du = u.a + u.b, dv = v.a + v.b;
        if (du != dv) return du < dv;
        return u.a < v.a;
    }
};

// Exact bivariate polynomial over the rationals, sparse term map.
class SparsePoly {
public:
    SparsePoly() = default;

    static SparsePoly constant(const Rational& c);
    static SparsePoly term(long long a, long long b, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coeff(long long a, long long b) const;
    bool has_term(long long a, long long b) const;

    // adds c * x^a y^b, erasing the entry if the sum vanishes
    void add_term(long long a, long long b, const Rational& c);

    SparsePoly operator-() const;
    friend SparsePoly operator+(const SparsePoly& f, const SparsePoly& g);
    friend SparsePoly operator-(const SparsePoly& f, const SparsePoly& g);
    friend SparsePoly operator*(const SparsePoly& f, const SparsePoly& g);
    friend bool operator==(const SparsePoly& f, const SparsePoly& g) {
        return f.terms_ == g.terms_;
    }

    SparsePoly swap_xy() const;  // f(y,x)

    bool divisible_by_x() const;
    bool divisible_by_y() const;

    // graded order, explicit signs; parse(to_string(f)) == f
    std::string to_string() const;

private:
    std::map<Exponents, Rational> terms_;
};

// Grammar: rational coefficients (e.g. 3, -1, 5/2), variables x and y,
// operators + - * ^, parentheses, implicit multiplication between factors.
SparsePoly parse_poly(const std::string& text);

// nu_gamma(f) = min of gamma.(a,b) over the support of f
long long nu(const SparsePoly& f, LatticePoint gamma);

// sum of the terms of f achieving nu_omega(f)
SparsePoly initial_form(const SparsePoly& f, LatticePoint omega);

std::string rational_to_string(const Rational& c);

}  // namespace newtonjet
