#include "newtonjet/lattice.hpp"

#include <numeric>
#include <stdexcept>

#include "newtonjet/errors.hpp"

namespace newtonjet {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string to_string(LatticePoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

PrimitiveDirection gcd_primitive(LatticePoint v) {
    if (v.x == 0 && v.y == 0)
        throw input_error("zero vector has no primitive direction");
    long long g = gcd_ll(v.x, v.y);
    return {g, {v.x / g, v.y / g}};
}

long long StaircaseCF::digit_prefix(std::size_t k) const {
    long long s = 0;
    for (std::size_t i = 0; i < k && i < digits.size(); ++i) s += digits[i];
    return s;
}

StaircaseCF sc_continued_fraction(long long p, long long q) {
    if (p <= 0 || q <= 0 || p > q || gcd_ll(p, q) != 1)
        throw input_error("sc_continued_fraction requires coprime positive p <= q");
    StaircaseCF cf;
    cf.p = p;
    cf.q = q;
    long long r = 0;
    do {
        long long n = q + r;
        cf.digits.push_back(n / p);
        r = n % p;
        cf.remainders.push_back(r);
    } while (r != 0);
    // the first zero remainder arrives at step p exactly
    if (static_cast<long long>(cf.digits.size()) != p)
        throw std::logic_error("staircase division did not terminate at step p");
    return cf;
}

Walk staircase_walk(long long p, long long q, LatticePoint base) {
    StaircaseCF cf = sc_continued_fraction(p, q);  // validates p, q
    bool on_ray = base.x % p == 0 && base.x / p >= 0 && base.x / p * q == base.y &&
                  base.x % p == 0 && base.x >= 0;
    if (!on_ray)
        throw input_error("walk base " + to_string(base) + " is not on the ray through " +
                          to_string({p, q}));

    Walk w;
    w.start = base + LatticePoint{1, 1};
    w.points.push_back(w.start);
    auto move = [&w](Step s) {
        w.steps.push_back(s);
        LatticePoint last = w.points.back();
        w.points.push_back(s == Step::Vertical ? last + LatticePoint{0, 1}
                                               : last + LatticePoint{1, 0});
    };
    for (long long i = 1; i <= p - 1; ++i) {
        for (long long k = 0; k < cf.digits[static_cast<std::size_t>(i - 1)]; ++k)
            move(Step::Vertical);
        move(Step::Horizontal);
    }
    for (long long k = 0; k + 1 < cf.digits.back(); ++k) move(Step::Vertical);
    return w;
}

}  // namespace newtonjet
