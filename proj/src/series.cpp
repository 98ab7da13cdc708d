#include "newtonjet/series.hpp"

#include <algorithm>
#include <sstream>

namespace newtonjet {

BivarPoly BivarPoly::one() { return monomial(0, 0, 1); }

BivarPoly BivarPoly::monomial(long long u, long long v, const Integer& c) {
    BivarPoly f;
    f.add_term(u, v, c);
    return f;
}

BivarPoly BivarPoly::one_minus(long long a, long long b) {
    BivarPoly f = one();
    f.add_term(a, b, -1);
    return f;
}

BivarPoly BivarPoly::one_plus(long long a, long long b) {
    BivarPoly f = one();
    f.add_term(a, b, 1);
    return f;
}

Integer BivarPoly::coeff(long long u, long long v) const {
    auto it = terms_.find({u, v});
    return it == terms_.end() ? Integer(0) : it->second;
}

void BivarPoly::add_term(long long u, long long v, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(UVExp{u, v}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly g;
    for (const auto& [e, c] : terms_) g.terms_.emplace(e, -c);
    return g;
}

BivarPoly operator+(const BivarPoly& f, const BivarPoly& g) {
    BivarPoly h = f;
    for (const auto& [e, c] : g.terms_) h.add_term(e.u, e.v, c);
    return h;
}

BivarPoly operator-(const BivarPoly& f, const BivarPoly& g) {
    BivarPoly h = f;
    for (const auto& [e, c] : g.terms_) h.add_term(e.u, e.v, -c);
    return h;
}

BivarPoly operator*(const BivarPoly& f, const BivarPoly& g) {
    BivarPoly h;
    for (const auto& [ef, cf] : f.terms_)
        for (const auto& [eg, cg] : g.terms_) h.add_term(ef.u + eg.u, ef.v + eg.v, cf * cg);
    return h;
}

BivarPoly BivarPoly::mul_truncated(const BivarPoly& g, long long vmax) const {
    BivarPoly h;
    for (const auto& [ef, cf] : terms_) {
        if (ef.v > vmax) continue;
        for (const auto& [eg, cg] : g.terms_) {
            if (ef.v + eg.v > vmax) continue;
            h.add_term(ef.u + eg.u, ef.v + eg.v, cf * cg);
        }
    }
    return h;
}

BivarPoly BivarPoly::truncated(long long vmax) const {
    BivarPoly h;
    for (const auto& [e, c] : terms_)
        if (e.v <= vmax) h.add_term(e.u, e.v, c);
    return h;
}

std::optional<BivarPoly> BivarPoly::divide_exact(const BivarPoly& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    BivarPoly rem = *this, quot;
    const auto& [de, dc] = *divisor.terms_.rbegin();  // leading term, graded order
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        if (re.u < de.u || re.v < de.v) return std::nullopt;
        if (rc % dc != 0) return std::nullopt;
        Integer q = rc / dc;
        long long qu = re.u - de.u, qv = re.v - de.v;
        quot.add_term(qu, qv, q);
        for (const auto& [e, c] : divisor.terms_) rem.add_term(e.u + qu, e.v + qv, -q * c);
    }
    return quot;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Integer abs_c = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = e.u != 0 || e.v != 0;
        if (abs_c != 1 || !has_vars) os << abs_c;
        if (e.u != 0) {
            os << "u";
            if (e.u != 1) os << "^" << e.u;
        }
        if (e.v != 0) {
            os << "v";
            if (e.v != 1) os << "^" << e.v;
        }
    }
    return os.str();
}

void BivarRational::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();)
        it = it->second == 0 ? den_.erase(it) : std::next(it);
}

void BivarRational::reduce() {
    for (auto it = den_.begin(); it != den_.end();) {
        BivarPoly factor = BivarPoly::one_minus(it->first.first, it->first.second);
        bool erased = false;
        while (it->second > 0) {
            auto q = num_.divide_exact(factor);
            if (!q) break;
            num_ = *q;
            if (--it->second == 0) {
                it = den_.erase(it);
                erased = true;
                break;
            }
        }
        if (!erased) ++it;
    }
}

BivarPoly BivarRational::denominator_product() const {
    BivarPoly d = BivarPoly::one();
    for (const auto& [e, mult] : den_)
        for (long long k = 0; k < mult; ++k) d = d * BivarPoly::one_minus(e.first, e.second);
    return d;
}

BivarRational operator+(const BivarRational& a, const BivarRational& b) {
    // common denominator: max multiplicity per factor
    std::map<std::pair<long long, long long>, long long> den = a.den_;
    for (const auto& [e, mult] : b.den_) {
        auto [it, inserted] = den.emplace(e, mult);
        if (!inserted) it->second = std::max(it->second, mult);
    }
    auto complement = [&den](const BivarRational& r) {
        BivarPoly scale = BivarPoly::one();
        for (const auto& [e, mult] : den) {
            long long have = 0;
            auto it = r.den_.find(e);
            if (it != r.den_.end()) have = it->second;
            for (long long k = have; k < mult; ++k)
                scale = scale * BivarPoly::one_minus(e.first, e.second);
        }
        return scale;
    };
    BivarPoly num = a.num_ * complement(a) + b.num_ * complement(b);
    return BivarRational(std::move(num), std::move(den));
}

BivarRational operator*(const BivarRational& a, const BivarRational& b) {
    std::map<std::pair<long long, long long>, long long> den = a.den_;
    for (const auto& [e, mult] : b.den_) den[e] += mult;
    return BivarRational(a.num_ * b.num_, std::move(den));
}

bool BivarRational::equals(const BivarRational& other) const {
    return num_ * other.denominator_product() == other.num_ * denominator_product();
}

std::string BivarRational::to_string() const {
    std::ostringstream os;
    bool parens = num_.terms().size() > 1 && !den_.empty();
    if (parens) os << "(";
    os << num_.to_string();
    if (parens) os << ")";
    if (!den_.empty()) {
        os << " / ";
        for (const auto& [e, mult] : den_) {
            os << "(" << BivarPoly::one_minus(e.first, e.second).to_string() << ")";
            if (mult != 1) os << "^" << mult;
        }
    }
    return os.str();
}

namespace {

// staircase offsets strictly below the ray (p,q), one period
std::vector<LatticePoint> below_offsets(long long p, long long q) {
    std::vector<LatticePoint> out;
    if (p <= q) {
        StaircaseCF cf = sc_continued_fraction(p, q);
        for (long long k = 1; k <= p; ++k) {
            long long lo = cf.digit_prefix(static_cast<std::size_t>(k - 1)) + 1;
            long long hi = k < p ? cf.digit_prefix(static_cast<std::size_t>(k)) : q - 1;
            for (long long j = lo; j <= hi; ++j) out.push_back({k, j});
        }
    } else {
        // dual case: the above-offsets of the swapped ray, coordinates flipped
        StaircaseCF cf = sc_continued_fraction(q, p);
        for (long long k = 1; k <= q - 1; ++k)
            out.push_back({cf.digit_prefix(static_cast<std::size_t>(k)) + 1, k});
    }
    return out;
}

// staircase offsets strictly above the ray (p,q), one period
std::vector<LatticePoint> above_offsets(long long p, long long q) {
    std::vector<LatticePoint> out;
    if (p <= q) {
        StaircaseCF cf = sc_continued_fraction(p, q);
        for (long long k = 1; k <= p - 1; ++k)
            out.push_back({k, cf.digit_prefix(static_cast<std::size_t>(k)) + 1});
    } else {
        StaircaseCF cf = sc_continued_fraction(q, p);
        for (long long k = 1; k <= q; ++k) {
            long long lo = cf.digit_prefix(static_cast<std::size_t>(k - 1)) + 1;
            long long hi = k < q ? cf.digit_prefix(static_cast<std::size_t>(k)) : p - 1;
            for (long long j = lo; j <= hi; ++j) out.push_back({j, k});
        }
    }
    return out;
}

UVExp contribution(const CurveData& C, LatticePoint beta) {
    return {beta.weight(), nu_polygon(C, beta)};
}

}  // namespace

SeriesParts series_parts(const CurveData& C) {
    SeriesParts parts;
    for (const TropicalRay& ray : C.rays)
        parts.rays.push_back(
            {ray.index, ray.branch_count, {ray.primitive.weight(), ray.nu_on_ray}});

    // interior cones: all lattice points strictly between adjacent rays,
    // generated by the half-open fundamental cell of the two primitives
    for (int i = 2; i <= C.ray_count(); ++i) {
        LatticePoint left = C.rays[static_cast<std::size_t>(i - 2)].primitive;
        LatticePoint right = C.rays[static_cast<std::size_t>(i - 1)].primitive;
        SeriesParts::InteriorCone cone;
        cone.left_ray = i - 1;
        cone.right_ray = i;
        cone.det = det(left, right);
        for (long long x = 0; x <= left.x + right.x; ++x) {
            for (long long y = 0; y <= left.y + right.y; ++y) {
                long long lam_d = det({x, y}, right);
                long long mu_d = det(left, {x, y});
                if (lam_d > 0 && lam_d <= cone.det && mu_d > 0 && mu_d <= cone.det)
                    cone.cell_terms.push_back(contribution(C, {x, y}));
            }
        }
        std::sort(cone.cell_terms.begin(), cone.cell_terms.end());
        cone.product_form_valid = cone.det == 1;
        parts.interior.push_back(std::move(cone));
    }

    const TropicalRay& lowest = C.rays.front();
    parts.below.ray = lowest.index;
    parts.below.vertex = 1;
    for (LatticePoint beta : below_offsets(lowest.primitive.x, lowest.primitive.y))
        parts.below.offsets.push_back(contribution(C, beta));
    std::sort(parts.below.offsets.begin(), parts.below.offsets.end());

    const TropicalRay& highest = C.rays.back();
    parts.above.ray = highest.index;
    parts.above.vertex = static_cast<int>(C.polygon.vertices.size());
    for (LatticePoint beta : above_offsets(highest.primitive.x, highest.primitive.y))
        parts.above.offsets.push_back(contribution(C, beta));
    std::sort(parts.above.offsets.begin(), parts.above.offsets.end());

    return parts;
}

BivarRational series_R(const CurveData& C) {
    BivarRational r{BivarPoly()};
    for (const TropicalRay& ray : C.rays) {
        long long a = ray.primitive.weight(), b = ray.nu_on_ray;
        BivarRational term(BivarPoly::monomial(a + 1, b, ray.branch_count),
                           {{{1, 1}, 1}, {{a, b}, 1}});
        r = r + term;
    }
    return r;
}

BivarRational series_H(const CurveData& C) {
    SeriesParts parts = series_parts(C);
    BivarRational h{BivarPoly()};
    auto ray_exps = [&](int index) {
        return parts.rays[static_cast<std::size_t>(index - 1)].exps;
    };
    for (const auto& rt : parts.rays) {
        h = h + BivarRational(BivarPoly::monomial(rt.exps.u, rt.exps.v),
                              {{{rt.exps.u, rt.exps.v}, 1}});
    }
    for (const auto& cone : parts.interior) {
        BivarPoly num;
        for (UVExp e : cone.cell_terms) num.add_term(e.u, e.v, 1);
        UVExp l = ray_exps(cone.left_ray), r = ray_exps(cone.right_ray);
        std::map<std::pair<long long, long long>, long long> den;
        den[{l.u, l.v}] += 1;
        den[{r.u, r.v}] += 1;
        h = h + BivarRational(std::move(num), std::move(den));
    }
    for (const auto* side : {&parts.below, &parts.above}) {
        if (side->offsets.empty()) continue;
        BivarPoly num;
        for (UVExp e : side->offsets) num.add_term(e.u, e.v, 1);
        UVExp d = ray_exps(side->ray);
        h = h + BivarRational(std::move(num), {{{d.u, d.v}, 1}});
    }
    return h;
}

BivarRational series_G(const CurveData& C) { return series_H(C) + series_R(C); }

BivarPoly truncate(const BivarRational& r, long long M) {
    if (M < 0) throw input_error("truncation order must be nonnegative");
    BivarPoly out = r.numerator().truncated(M);
    for (const auto& [e, mult] : r.denominator()) {
        auto [a, b] = e;
        if (a == 0 && b == 0) throw input_error("factor not expandable");
        if (b == 0)
            throw input_error("denominator factor (1-u^" + std::to_string(a) +
                              ") has no v-grading and cannot be truncated along v");
        BivarPoly geo;
        for (long long s = 0; s * b <= M; ++s) geo.add_term(s * a, s * b, 1);
        for (long long k = 0; k < mult; ++k) out = out.mul_truncated(geo, M);
    }
    return out;
}

BivarPoly enumerate_series(const CurveData& C, long long M) {
    if (M < 1) throw input_error("enumeration bound must be positive");
    BivarPoly g;
    // one hyperplane component per contributor, counted at level nu - 1
    for (long long bx = 1; bx <= M + 2; ++bx) {
        for (long long by = 1; by <= M + 2; ++by) {
            long long v = nu_polygon(C, {bx, by});
            if (v > M) break;
            if (bx > 1 && nu_polygon(C, {bx - 1, by}) >= v) continue;
            if (by > 1 && nu_polygon(C, {bx, by - 1}) >= v) continue;
            g.add_term(bx + by, v, 1);
        }
    }
    // infinite components of every level in range
    for (const TropicalRay& ray : C.rays) {
        for (long long s = 1; s * ray.nu_on_ray <= M; ++s) {
            long long nu_a = s * ray.nu_on_ray;
            long long wa = s * ray.primitive.weight();
            for (long long m = nu_a; m <= M; ++m)
                g.add_term(1 + wa + m - nu_a, m, ray.branch_count);
        }
    }
    return g;
}

namespace {

// multiplicity of `factor` in r, with an exact certificate
PoleFamily family_of(const BivarRational& r, const BivarPoly& factor) {
    PoleFamily fam;
    long long in_den = 0;
    for (const auto& [e, mult] : r.denominator()) {
        BivarPoly f = BivarPoly::one_minus(e.first, e.second);
        if (f.divide_exact(factor)) in_den += mult;
    }
    long long in_num = 0;
    BivarPoly residue = r.numerator();
    while (true) {
        auto q = residue.divide_exact(factor);
        if (!q) break;
        residue = *q;
        ++in_num;
    }
    fam.den_power = in_den;
    fam.num_power = in_num;
    fam.multiplicity = std::max(0LL, in_den - in_num);
    fam.certified = fam.multiplicity >= 1 && !residue.divide_exact(factor).has_value();
    return fam;
}

}  // namespace

PoleReport poles(const CurveData& C) {
    PoleReport report;
    report.g = series_G(C);

    PoleFamily diag = family_of(report.g, BivarPoly::one_minus(1, 1));
    diag.kind = PoleFamily::Kind::Diagonal;
    diag.exp_u = diag.exp_v = 1;
    diag.delta = 1;
    report.families.push_back(diag);

    PoleFamily anti = family_of(report.g, BivarPoly::one_plus(1, 1));
    if (anti.multiplicity > 0) {
        anti.kind = PoleFamily::Kind::AntiDiagonal;
        anti.exp_u = anti.exp_v = 1;
        anti.delta = 1;
        report.families.push_back(anti);
    }

    for (const TropicalRay& ray : C.rays) {
        long long a = ray.primitive.weight(), b = ray.nu_on_ray;
        PoleFamily fam = family_of(report.g, BivarPoly::one_minus(a, b));
        fam.kind = PoleFamily::Kind::Ray;
        fam.ray = ray.index;
        fam.alpha = ray.primitive;
        fam.vertex = C.polygon.vertices[static_cast<std::size_t>(ray.index - 1)];
        fam.exp_u = a;
        fam.exp_v = b;
        fam.delta = gcd_ll(a, b);
        report.families.push_back(fam);
    }
    return report;
}

}  // namespace newtonjet
