#pragma once

#include <map>
#include <string>
#include <vector>

#include "newtonjet/polygon.hpp"

namespace newtonjet {

// Irreducible component of the jet scheme over the origin at one level.
// Hyperplane components H^gamma are indexed by gamma in B*_m; infinite
// components are indexed by (ray, branch, on-ray point alpha) and persist for
// every level >= nu_alpha(f).
struct JetComponent {
    enum class Kind { Hyperplane, Infinite };

    Kind kind = Kind::Hyperplane;
    long long level = 0;
    LatticePoint point;  // gamma for Hyperplane, alpha for Infinite
    int ray = 0;         // Infinite only, 1-based
    int branch = 0;      // Infinite only, 1-based within the ray

    std::string label() const;  // level-independent, e.g. "H(2,3)" or "F1.1(2,3)"

    friend bool operator==(const JetComponent& a, const JetComponent& b) {
        return a.kind == b.kind && a.level == b.level && a.point == b.point && a.ray == b.ray &&
               a.branch == b.branch;
    }
    friend bool operator<(const JetComponent& a, const JetComponent& b);
};

struct ComponentWeight {
    long long dim = 0;     // Krull dimension d = 2(m+1) - codim
    long long embdim = 0;  // embedding dimension e; e == d iff hyperplane kind

    friend bool operator==(ComponentWeight a, ComponentWeight b) {
        return a.dim == b.dim && a.embdim == b.embdim;
    }
};

using LevelComponents = std::vector<std::pair<JetComponent, ComponentWeight>>;

// B_m: minimal points of {gamma >= (1,1) : nu_gamma(f) > m} under the
// componentwise order; an antichain.
std::vector<LatticePoint> frontier(const CurveData& C, long long m);

// B*_m: B_m minus the points alpha+(1,1) for alpha in B_{m-1} on an extreme
// tropical ray with nu_alpha(f) = m.
std::vector<LatticePoint> reduced_frontier(const CurveData& C, long long m);

// All irreducible components at level m with their weights, sorted.
LevelComponents components(const CurveData& C, long long m);

// Truncation edges (child at level m+1, parent at level m).
std::vector<std::pair<JetComponent, JetComponent>> edges(const CurveData& C, long long m);
std::vector<std::pair<JetComponent, JetComponent>> edges_between(const LevelComponents& parents,
                                                                 const LevelComponents& children);

// Points beta contributing one hyperplane component stream each: every
// gamma < beta satisfies nu_gamma(f) < nu_beta(f). Restricted to
// nu_beta(f) <= bound.
std::vector<LatticePoint> hyperplane_contributors(const CurveData& C, long long bound);

struct JetGraph {
    long long max_level = 0;
    std::map<long long, LevelComponents> levels;
    std::vector<std::pair<JetComponent, JetComponent>> graph_edges;  // (child, parent)

    std::string canonical_serialization() const;
};

// Graph assembled from the frontier/A-set definitions, levels 1..max_level.
JetGraph build_graph(const CurveData& C, long long max_level);

// One drawn point of the staircase representation J_SC.
struct WalkPoint {
    LatticePoint alpha;
    long long weight = 0;  // nu_alpha(f) - 1
    long long birth = 0;   // first level at which H^alpha is a component
};

struct WalkEdge {
    LatticePoint from, to;
    bool jump = false;  // the (1,1) restart jump of the single-ray walk
};

struct WalkArrow {
    LatticePoint alpha;
    int ray = 0;
    long long multiplicity = 0;  // r_i arrows drawn above alpha
};

// Staircase representation of the jet component graph: walk points weighted
// nu - 1, red arrows on the tropical rays.
struct StaircaseRepr {
    long long level_bound = 0;  // covers all components of levels <= level_bound
    std::vector<WalkPoint> points;
    std::vector<WalkEdge> walk_edges;
    std::vector<WalkArrow> arrows;
};

// Walk rules, geometric orientation: inside the cone spanned by the
// extreme rays branch both ways; on an extreme ray step into the cone (for a
// single ray, restart one diagonal step up); on an interior ray take both
// steps; below the lowest ray step vertically, above the highest step
// horizontally. Arrows (one per branch) sit on every on-ray point.
StaircaseRepr jsc_walk(const CurveData& C, long long period_bound);

// Rebuilds the leveled graph from the staircase representation alone,
// interpolating the vanishing hyperplane components along walk edges and one
// infinite chain per arrow.
JetGraph expand_jsc(const StaircaseRepr& repr, long long bound);

}  // namespace newtonjet
