#pragma once

#include <map>
#include <string>
#include <vector>

#include "newtonjet/polygon.hpp"

namespace newtonjet {

// Branch label (ray index, branch index within the ray), both 1-based.
using BranchId = std::pair<int, int>;

// Combinatorial data of the embedded topological type: the tropical rays with
// their branch counts, plus all pairwise intersection multiplicities.
struct TopoInvariant {
    struct RayRecord {
        LatticePoint primitive;
        long long branches = 0;

        friend bool operator==(const RayRecord& a, const RayRecord& b) {
            return a.primitive == b.primitive && a.branches == b.branches;
        }
    };

    std::vector<RayRecord> rays;  // ordered by slope, as in the dual fan
    std::map<std::pair<BranchId, BranchId>, long long> intersections;

    long long total_branches() const;

    friend bool operator==(const TopoInvariant& a, const TopoInvariant& b) {
        return a.rays == b.rays && a.intersections == b.intersections;
    }

    std::string to_string() const;
};

// Intersection numbers are computed combinatorially: p*q for two branches on
// the same ray (p,q), min(p_i q_j, p_j q_i) across distinct rays.
TopoInvariant invariant(const CurveData& C);

bool same_topological_type(const CurveData& a, const CurveData& b);

}  // namespace newtonjet
