#include "newtonjet/topo.hpp"

#include <algorithm>
#include <sstream>

namespace newtonjet {

long long TopoInvariant::total_branches() const {
    long long n = 0;
    for (const RayRecord& r : rays) n += r.branches;
    return n;
}

std::string TopoInvariant::to_string() const {
    std::ostringstream os;
    os << "rays:";
    for (const RayRecord& r : rays)
        os << " " << newtonjet::to_string(r.primitive) << "x" << r.branches;
    for (const auto& [pair, n] : intersections) {
        os << "; (" << pair.first.first << "." << pair.first.second << ","
           << pair.second.first << "." << pair.second.second << ")=" << n;
    }
    return os.str();
}

TopoInvariant invariant(const CurveData& C) {
    TopoInvariant inv;
    std::vector<BranchId> branches;
    for (const TropicalRay& ray : C.rays) {
        inv.rays.push_back({ray.primitive, ray.branch_count});
        for (int j = 1; j <= ray.branch_count; ++j) branches.emplace_back(ray.index, j);
    }
    for (std::size_t i = 0; i < branches.size(); ++i) {
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            const LatticePoint a = C.rays[static_cast<std::size_t>(branches[i].first - 1)].primitive;
            const LatticePoint b = C.rays[static_cast<std::size_t>(branches[j].first - 1)].primitive;
            long long n = branches[i].first == branches[j].first
                              ? a.x * a.y
                              : std::min(a.x * b.y, b.x * a.y);
            inv.intersections[{branches[i], branches[j]}] = n;
        }
    }
    return inv;
}

bool same_topological_type(const CurveData& a, const CurveData& b) {
    return invariant(a) == invariant(b);
}

}  // namespace newtonjet
