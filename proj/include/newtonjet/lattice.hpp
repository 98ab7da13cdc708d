#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "newtonjet/errors.hpp"

namespace newtonjet {

// Point of the integer lattice. Also used for dual-space weight vectors and
// for edge directions, whose entries may be negative in intermediate steps.
struct LatticePoint {
    long long x = 0;
    long long y = 0;

    long long weight() const { return x + y; }  // |alpha| = x + y

    friend bool operator==(LatticePoint a, LatticePoint b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(LatticePoint a, LatticePoint b) { return !(a == b); }
    // lexicographic; used for ordered containers
    friend bool operator<(LatticePoint a, LatticePoint b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
    friend LatticePoint operator+(LatticePoint a, LatticePoint b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend LatticePoint operator-(LatticePoint a, LatticePoint b) {
        return {a.x - b.x, a.y - b.y};
    }
    friend LatticePoint operator*(long long s, LatticePoint a) {
        return {s * a.x, s * a.y};
    }
};

// componentwise partial order <= x <=
inline bool dominates(LatticePoint lo, LatticePoint hi) {
    return lo.x <= hi.x && lo.y <= hi.y;
}

inline long long det(LatticePoint a, LatticePoint b) {
    return a.x * b.y - a.y * b.x;
}

long long gcd_ll(long long a, long long b);

std::string to_string(LatticePoint p);

struct PrimitiveDirection {
    long long factor = 0;      // gcd of the components
    LatticePoint primitive;    // v = factor * primitive
};

// Factors a nonzero lattice vector as g * primitive with coprime components.
PrimitiveDirection gcd_primitive(LatticePoint v);

// Staircase continued fraction SC(q/p) produced by the iterated divisions
//   q = d_1 p + r_1,  q + r_{k-1} = d_k p + r_k,
// stopping at the first zero remainder. For coprime 0 < p <= q that happens
// at step p exactly, with d_1 + ... + d_p = q.
struct StaircaseCF {
    long long p = 0;
    long long q = 0;
    std::vector<long long> digits;      // d_1..d_p
    std::vector<long long> remainders;  // r_1..r_p, r_p == 0

    // D_k = d_1 + ... + d_k, D_0 = 0
    long long digit_prefix(std::size_t k) const;
};

StaircaseCF sc_continued_fraction(long long p, long long q);

enum class Step { Horizontal, Vertical };

// Broken line of elementary unit steps.
struct Walk {
    LatticePoint start;
    std::vector<Step> steps;
    std::vector<LatticePoint> points;  // points[0] == start, one per step after
};

// The walk attracted by the ray through (p,q), started one diagonal step off
// an on-ray base point (base = s*(p,q), s >= 0): d_i vertical steps then one
// horizontal step for i = 1..p-1, then d_p - 1 vertical steps. It ends at
// base + (p,q), the only visited point on the ray; the step pattern does not
// depend on base. Callers wanting a ray below the diagonal (q < p) swap
// coordinates, mirroring the walk.
Walk staircase_walk(long long p, long long q, LatticePoint base);

}  // namespace newtonjet
