#pragma once

#include <map>
#include <vector>

#include "newtonjet/poly.hpp"

namespace newtonjet {

// Jet expansions are an independent cross-check for the combinatorial path,
// not part of it. The truncated series multiplication is quadratic in the
// level, which is fine for the oracle range (levels up to ~20).

// Variable x^(j) gets id 2j, y^(j) gets id 2j+1; weight of both is j.
inline int jet_var_x(int j) { return 2 * j; }
inline int jet_var_y(int j) { return 2 * j + 1; }
inline int jet_var_order(int id) { return id / 2; }
inline bool jet_var_is_x(int id) { return id % 2 == 0; }

// sorted (var id, exponent) pairs, exponents > 0
using JetMonomial = std::vector<std::pair<int, int>>;

// Polynomial in the jet variables x^(0..m), y^(0..m).
class JetPolynomial {
public:
    JetPolynomial() = default;
    explicit JetPolynomial(long long level) : level_(level) {}

    long long level() const { return level_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<JetMonomial, Rational>& terms() const { return terms_; }

    void add_term(const JetMonomial& mono, const Rational& c);

    friend JetPolynomial operator+(const JetPolynomial& f, const JetPolynomial& g);
    friend JetPolynomial operator*(const JetPolynomial& f, const JetPolynomial& g);
    friend bool operator==(const JetPolynomial& f, const JetPolynomial& g) {
        return f.terms_ == g.terms_;
    }

    // every monomial has t-weight k when x^(j), y^(j) carry weight j
    bool weighted_homogeneous(long long k) const;

    // sets x^(i) = 0 for i < floor.x and y^(j) = 0 for j < floor.y
    JetPolynomial substitute_zero_below(LatticePoint floor) const;

    std::string to_string() const;

private:
    long long level_ = 0;
    std::map<JetMonomial, Rational> terms_;
};

// Coefficients f^(0)..f^(m) of f(x(t), y(t)) with the full substitution
// x = sum_j x^(j) t^j, y = sum_j y^(j) t^j truncated at t^m.
std::vector<JetPolynomial> jet_expand(const SparsePoly& f, long long m);

// Same expansion with x^(i), y^(j) already set to zero for i < floor.x,
// j < floor.y; agrees with substitute_zero_below applied after jet_expand
// and is much cheaper when the floor is high.
std::vector<JetPolynomial> jet_expand_floor(const SparsePoly& f, long long m,
                                            LatticePoint floor);

// g evaluated at the single pair of variables (x^(alpha.x), y^(alpha.y))
JetPolynomial jet_evaluate_at(const SparsePoly& g, LatticePoint alpha, long long level);

}  // namespace newtonjet
