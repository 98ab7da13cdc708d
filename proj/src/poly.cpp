#include "newtonjet/poly.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace newtonjet {

SparsePoly SparsePoly::constant(const Rational& c) { return term(0, 0, c); }

SparsePoly SparsePoly::term(long long a, long long b, const Rational& c) {
    SparsePoly f;
    f.add_term(a, b, c);
    return f;
}

Rational SparsePoly::coeff(long long a, long long b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool SparsePoly::has_term(long long a, long long b) const {
    return terms_.count({a, b}) != 0;
}

void SparsePoly::add_term(long long a, long long b, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(Exponents{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly g;
    for (const auto& [e, c] : terms_) g.terms_.emplace(e, -c);
    return g;
}

SparsePoly operator+(const SparsePoly& f, const SparsePoly& g) {
    SparsePoly h = f;
    for (const auto& [e, c] : g.terms_) h.add_term(e.a, e.b, c);
    return h;
}

SparsePoly operator-(const SparsePoly& f, const SparsePoly& g) {
    SparsePoly h = f;
    for (const auto& [e, c] : g.terms_) h.add_term(e.a, e.b, -c);
    return h;
}

SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) {
    SparsePoly h;
    for (const auto& [ef, cf] : f.terms_)
        for (const auto& [eg, cg] : g.terms_)
            h.add_term(ef.a + eg.a, ef.b + eg.b, cf * cg);
    return h;
}

SparsePoly SparsePoly::swap_xy() const {
    SparsePoly g;
    for (const auto& [e, c] : terms_) g.add_term(e.b, e.a, c);
    return g;
}

bool SparsePoly::divisible_by_x() const {
    if (is_zero()) return false;
    for (const auto& [e, c] : terms_)
        if (e.a == 0) return false;
    return true;
}

bool SparsePoly::divisible_by_y() const {
    if (is_zero()) return false;
    for (const auto& [e, c] : terms_)
        if (e.b == 0) return false;
    return true;
}

std::string rational_to_string(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = e.a != 0 || e.b != 0;
        if (abs_c != 1 || !has_vars) os << rational_to_string(abs_c);
        if (e.a != 0) {
            os << "x";
            if (e.a != 1) os << "^" << e.a;
        }
        if (e.b != 0) {
            os << "y";
            if (e.b != 1) os << "^" << e.b;
        }
    }
    return os.str();
}

namespace {

// recursive-descent parser for the polynomial grammar
class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    SparsePoly run() {
        skip_ws();
        if (pos_ == s_.size()) throw input_error("empty input");
        SparsePoly f = parse_expr();
        skip_ws();
        if (pos_ != s_.size())
            throw input_error(std::string("unexpected character '") + s_[pos_] + "'");
        return f;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    SparsePoly parse_expr() {
        SparsePoly acc;
        bool negate = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negate = c == '-';
            ++pos_;
        }
        acc = parse_term();
        if (negate) acc = -acc;
        while (true) {
            c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                SparsePoly t = parse_term();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    SparsePoly parse_term() {
        SparsePoly acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else if (c == '(' || c == 'x' || c == 'y' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * parse_factor();  // implicit multiplication
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                throw input_error(std::string("unknown variable ") + c);
            } else {
                return acc;
            }
        }
    }

    SparsePoly parse_factor() {
        SparsePoly base = parse_base();
        if (peek() == '^') {
            ++pos_;
            long long e = parse_exponent();
            SparsePoly pow = SparsePoly::constant(1);
            for (long long i = 0; i < e; ++i) pow = pow * base;
            return pow;
        }
        return base;
    }

    long long parse_exponent() {
        char c = peek();
        if (c == '-') throw input_error("malformed exponent: negative exponents not allowed");
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw input_error("malformed exponent");
        long long e = parse_integer();
        if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/'))
            throw input_error("malformed exponent: must be a nonnegative integer");
        if (e > 4096) throw input_error("malformed exponent: too large");
        return e;
    }

    long long parse_integer() {
        skip_ws();
        long long v = 0;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > std::numeric_limits<long long>::max() / 16)
                throw input_error("integer literal too large");
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        if (pos_ == start) throw input_error("expected an integer");
        return v;
    }

    SparsePoly parse_base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            SparsePoly e = parse_expr();
            if (peek() != ')') throw input_error("expected ')'");
            ++pos_;
            return e;
        }
        if (c == 'x') {
            ++pos_;
            return SparsePoly::term(1, 0, 1);
        }
        if (c == 'y') {
            ++pos_;
            return SparsePoly::term(0, 1, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_integer();
            Integer den = 1;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                den = parse_integer();
                if (den == 0) throw input_error("zero denominator in coefficient");
            }
            return SparsePoly::constant(Rational(num, den));
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            throw input_error(std::string("unknown variable ") + c);
        if (c == '\0') throw input_error("unexpected end of input");
        throw input_error(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

SparsePoly parse_poly(const std::string& text) { return Parser(text).run(); }

long long nu(const SparsePoly& f, LatticePoint gamma) {
    if (f.is_zero()) throw input_error("nu of the zero polynomial is undefined");
    bool first = true;
    long long best = 0;
    for (const auto& [e, c] : f.terms()) {
        long long w = gamma.x * e.a + gamma.y * e.b;
        if (first || w < best) best = w;
        first = false;
    }
    return best;
}

SparsePoly initial_form(const SparsePoly& f, LatticePoint omega) {
    if (omega.x == 0 && omega.y == 0)
        throw input_error("initial form requires a nonzero weight vector");
    long long v = nu(f, omega);
    SparsePoly in;
    for (const auto& [e, c] : f.terms())
        if (omega.x * e.a + omega.y * e.b == v) in.add_term(e.a, e.b, c);
    return in;
}

}  // namespace newtonjet
