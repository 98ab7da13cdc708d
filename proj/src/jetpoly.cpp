#include "newtonjet/jetpoly.hpp"

#include <algorithm>
#include <sstream>

namespace newtonjet {

void JetPolynomial::add_term(const JetMonomial& mono, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

JetPolynomial operator+(const JetPolynomial& f, const JetPolynomial& g) {
    JetPolynomial h(std::max(f.level_, g.level_));
    h.terms_ = f.terms_;
    for (const auto& [m, c] : g.terms_) h.add_term(m, c);
    return h;
}

namespace {

JetMonomial merge_monomials(const JetMonomial& a, const JetMonomial& b) {
    JetMonomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            r.push_back(a[i++]);
        } else if (a[i].first > b[j].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) r.push_back(b[j++]);
    return r;
}

long long monomial_weight(const JetMonomial& m) {
    long long w = 0;
    for (auto [id, e] : m) w += static_cast<long long>(jet_var_order(id)) * e;
    return w;
}

// truncated power series in t with JetPolynomial coefficients
using JetSeries = std::vector<JetPolynomial>;

JetSeries series_mul(const JetSeries& a, const JetSeries& b, long long m) {
    JetSeries r(static_cast<std::size_t>(m + 1));
    for (long long k = 0; k <= m; ++k) r[static_cast<std::size_t>(k)] = JetPolynomial(k);
    for (long long i = 0; i <= m; ++i) {
        if (a[static_cast<std::size_t>(i)].is_zero()) continue;
        for (long long j = 0; i + j <= m; ++j) {
            const auto& fa = a[static_cast<std::size_t>(i)];
            const auto& fb = b[static_cast<std::size_t>(j)];
            if (fb.is_zero()) continue;
            auto& out = r[static_cast<std::size_t>(i + j)];
            for (const auto& [ma, ca] : fa.terms())
                for (const auto& [mb, cb] : fb.terms())
                    out.add_term(merge_monomials(ma, mb), ca * cb);
        }
    }
    return r;
}

JetSeries variable_series(bool is_x, long long m, long long floor) {
    JetSeries s(static_cast<std::size_t>(m + 1));
    for (long long k = 0; k <= m; ++k) {
        s[static_cast<std::size_t>(k)] = JetPolynomial(k);
        if (k >= floor) {
            int id = is_x ? jet_var_x(static_cast<int>(k)) : jet_var_y(static_cast<int>(k));
            s[static_cast<std::size_t>(k)].add_term({{id, 1}}, 1);
        }
    }
    return s;
}

JetSeries expand_with_floor(const SparsePoly& f, long long m, LatticePoint floor) {
    JetSeries xs = variable_series(true, m, floor.x);
    JetSeries ys = variable_series(false, m, floor.y);

    // power caches, built incrementally in exponent order
    std::vector<JetSeries> xpow{JetSeries()}, ypow{JetSeries()};
    {
        JetSeries one(static_cast<std::size_t>(m + 1));
        for (long long k = 0; k <= m; ++k) one[static_cast<std::size_t>(k)] = JetPolynomial(k);
        one[0].add_term({}, 1);
        xpow[0] = one;
        ypow[0] = one;
    }
    auto power = [&](std::vector<JetSeries>& cache, const JetSeries& base, long long e) {
        while (static_cast<long long>(cache.size()) <= e)
            cache.push_back(series_mul(cache.back(), base, m));
        return cache[static_cast<std::size_t>(e)];
    };

    JetSeries acc(static_cast<std::size_t>(m + 1));
    for (long long k = 0; k <= m; ++k) acc[static_cast<std::size_t>(k)] = JetPolynomial(k);
    for (const auto& [e, c] : f.terms()) {
        JetSeries t = series_mul(power(xpow, xs, e.a), power(ypow, ys, e.b), m);
        for (long long k = 0; k <= m; ++k)
            for (const auto& [mono, tc] : t[static_cast<std::size_t>(k)].terms())
                acc[static_cast<std::size_t>(k)].add_term(mono, c * tc);
    }
    return acc;
}

}  // namespace

JetPolynomial operator*(const JetPolynomial& f, const JetPolynomial& g) {
    JetPolynomial h(std::max(f.level_, g.level_));
    for (const auto& [ma, ca] : f.terms_)
        for (const auto& [mb, cb] : g.terms_) h.add_term(merge_monomials(ma, mb), ca * cb);
    return h;
}

bool JetPolynomial::weighted_homogeneous(long long k) const {
    for (const auto& [m, c] : terms_)
        if (monomial_weight(m) != k) return false;
    return true;
}

JetPolynomial JetPolynomial::substitute_zero_below(LatticePoint floor) const {
    JetPolynomial r(level_);
    for (const auto& [m, c] : terms_) {
        bool killed = false;
        for (auto [id, e] : m) {
            long long order = jet_var_order(id);
            if ((jet_var_is_x(id) && order < floor.x) || (!jet_var_is_x(id) && order < floor.y)) {
                killed = true;
                break;
            }
        }
        if (!killed) r.add_term(m, c);
    }
    return r;
}

std::string JetPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (abs_c != 1 || m.empty()) os << rational_to_string(abs_c);
        for (std::size_t i = 0; i < m.size(); ++i) {
            auto [id, e] = m[i];
            if (abs_c != 1 || i > 0) os << "*";
            os << (jet_var_is_x(id) ? "x" : "y") << jet_var_order(id);
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::vector<JetPolynomial> jet_expand(const SparsePoly& f, long long m) {
    if (m < 0) throw input_error("jet expansion level must be nonnegative");
    return expand_with_floor(f, m, {0, 0});
}

std::vector<JetPolynomial> jet_expand_floor(const SparsePoly& f, long long m,
                                            LatticePoint floor) {
    if (m < 0) throw input_error("jet expansion level must be nonnegative");
    return expand_with_floor(f, m, floor);
}

JetPolynomial jet_evaluate_at(const SparsePoly& g, LatticePoint alpha, long long level) {
    JetPolynomial r(level);
    for (const auto& [e, c] : g.terms()) {
        JetMonomial mono;
        int xid = jet_var_x(static_cast<int>(alpha.x));
        int yid = jet_var_y(static_cast<int>(alpha.y));
        if (xid > yid) {
            if (e.b != 0) mono.emplace_back(yid, static_cast<int>(e.b));
            if (e.a != 0) mono.emplace_back(xid, static_cast<int>(e.a));
        } else {
            if (e.a != 0) mono.emplace_back(xid, static_cast<int>(e.a));
            if (e.b != 0) mono.emplace_back(yid, static_cast<int>(e.b));
        }
        r.add_term(mono, c);
    }
    return r;
}

}  // namespace newtonjet
