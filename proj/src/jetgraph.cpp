#include "newtonjet/jetgraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace newtonjet {

std::string JetComponent::label() const {
    if (kind == Kind::Hyperplane) return "H" + to_string(point);
    return "F" + std::to_string(ray) + "." + std::to_string(branch) + to_string(point);
}

bool operator<(const JetComponent& a, const JetComponent& b) {
    if (a.level != b.level) return a.level < b.level;
    if (a.kind != b.kind) return a.kind < b.kind;  // Hyperplane before Infinite
    if (!(a.point == b.point)) return a.point < b.point;
    if (a.ray != b.ray) return a.ray < b.ray;
    return a.branch < b.branch;
}

std::vector<LatticePoint> frontier(const CurveData& C, long long m) {
    if (m < 0) throw input_error("frontier level must be nonnegative");
    std::vector<LatticePoint> result;
    long long prev_gy = -1;
    for (long long gx = 1; gx <= m + 1; ++gx) {
        // nu(gx, gy) tends to gx * s_right as gy grows; empty column otherwise
        if (gx * C.s_right() <= m) continue;
        long long lo = 1, hi = m + 1;  // nu(gx, m+1) > m always holds here
        while (lo < hi) {
            long long mid = lo + (hi - lo) / 2;
            if (nu_polygon(C, {gx, mid}) > m)
                hi = mid;
            else
                lo = mid + 1;
        }
        // minimal iff the left neighbour already fell below the threshold
        bool minimal = gx == 1 || nu_polygon(C, {gx - 1, lo}) <= m;
        // columns are visited in increasing gx, so the found gy never grows
        if (minimal && lo != prev_gy) result.push_back({gx, lo});
        prev_gy = lo;
        if (lo == 1) break;  // everything further right is dominated
    }
    return result;
}

std::vector<LatticePoint> reduced_frontier(const CurveData& C, long long m) {
    if (m < 1) throw input_error("reduced frontier level must be positive");
    std::vector<LatticePoint> b = frontier(C, m);
    std::vector<LatticePoint> removed;
    for (const LatticePoint& alpha : frontier(C, m - 1)) {
        if (nu_polygon(C, alpha) != m) continue;
        int ray = C.ray_through(alpha);
        if (ray == 0) continue;
        if (ray == 1 || ray == C.ray_count()) removed.push_back(alpha + LatticePoint{1, 1});
    }
    std::vector<LatticePoint> result;
    for (const LatticePoint& g : b)
        if (std::find(removed.begin(), removed.end(), g) == removed.end()) result.push_back(g);
    return result;
}

LevelComponents components(const CurveData& C, long long m) {
    if (m < 1) throw input_error("component level must be positive");
    LevelComponents out;
    for (const LatticePoint& g : reduced_frontier(C, m)) {
        JetComponent c;
        c.kind = JetComponent::Kind::Hyperplane;
        c.level = m;
        c.point = g;
        long long d = 2 * (m + 1) - g.weight();
        out.emplace_back(c, ComponentWeight{d, d});
    }
    for (const TropicalRay& ray : C.rays) {
        for (long long s = 1; s * ray.nu_on_ray <= m; ++s) {
            LatticePoint alpha = s * ray.primitive;
            long long nu_a = s * ray.nu_on_ray;
            long long codim = alpha.weight() + 1 + m - nu_a;
            ComponentWeight w{2 * (m + 1) - codim, 2 * (m + 1) - alpha.weight()};
            for (long long j = 1; j <= ray.branch_count; ++j) {
                JetComponent c;
                c.kind = JetComponent::Kind::Infinite;
                c.level = m;
                c.point = alpha;
                c.ray = ray.index;
                c.branch = static_cast<int>(j);
                out.emplace_back(c, w);
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<std::pair<JetComponent, JetComponent>> edges_between(const LevelComponents& parents,
                                                                 const LevelComponents& children) {
    std::vector<std::pair<JetComponent, JetComponent>> out;
    for (const auto& [child, cw] : children) {
        for (const auto& [parent, pw] : parents) {
            bool connected = false;
            if (child.kind == JetComponent::Kind::Hyperplane) {
                if (parent.kind == JetComponent::Kind::Hyperplane) {
                    connected = dominates(parent.point, child.point);
                } else {
                    // H^gamma due to a just-born infinite component:
                    // gamma = alpha + (1,1) at m = nu_alpha(f); the parent has
                    // e - d = m - nu_alpha + 1
                    connected = child.point == parent.point + LatticePoint{1, 1} &&
                                pw.embdim - pw.dim == 1;
                }
            } else {
                if (parent.kind == JetComponent::Kind::Infinite) {
                    connected = child.point == parent.point && child.ray == parent.ray &&
                                child.branch == parent.branch;
                } else {
                    // birth level nu_alpha(f): truncates into H^alpha
                    connected = cw.embdim - cw.dim == 1 && child.point == parent.point;
                }
            }
            if (connected) out.emplace_back(child, parent);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<JetComponent, JetComponent>> edges(const CurveData& C, long long m) {
    return edges_between(components(C, m), components(C, m + 1));
}

std::vector<LatticePoint> hyperplane_contributors(const CurveData& C, long long bound) {
    if (bound < 1) throw input_error("contributor bound must be positive");
    // Strict dominance at the immediate predecessors is equivalent to the
    // full condition (nu is componentwise monotone), and to membership in
    // B*_{nu_beta - 1}: nu_{alpha+(1,1)} >= nu_alpha + 2 for curves singular
    // at the origin, so the B*-removal at m = nu_alpha never cancels a
    // contribution. Regression-tested against reduced_frontier sweeps.
    std::vector<LatticePoint> out;
    for (long long bx = 1; bx <= bound + 2; ++bx) {
        for (long long by = 1; by <= bound + 2; ++by) {
            long long v = nu_polygon(C, {bx, by});
            if (v > bound) break;  // nu grows with by
            if (bx > 1 && nu_polygon(C, {bx - 1, by}) >= v) continue;
            if (by > 1 && nu_polygon(C, {bx, by - 1}) >= v) continue;
            out.push_back({bx, by});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

JetGraph build_graph(const CurveData& C, long long max_level) {
    if (max_level < 1) throw input_error("graph level bound must be positive");
    JetGraph g;
    g.max_level = max_level;
    for (long long m = 1; m <= max_level; ++m) g.levels[m] = components(C, m);
    for (long long m = 1; m < max_level; ++m) {
        auto e = edges_between(g.levels[m], g.levels[m + 1]);
        g.graph_edges.insert(g.graph_edges.end(), e.begin(), e.end());
    }
    return g;
}

std::string JetGraph::canonical_serialization() const {
    std::ostringstream os;
    for (const auto& [m, comps] : levels) {
        os << "level " << m << ":";
        for (const auto& [c, w] : comps)
            os << " " << c.label() << "(" << w.dim << "," << w.embdim << ")";
        os << "\n";
    }
    for (const auto& [child, parent] : graph_edges)
        os << child.level << ":" << child.label() << " -> " << parent.level << ":"
           << parent.label() << "\n";
    return os.str();
}

namespace {

enum class Region { OnRay, BelowLowest, AboveHighest, Interior };

struct Position {
    Region region;
    int ray = 0;  // OnRay only
};

Position classify(const CurveData& C, LatticePoint alpha) {
    int ray = C.ray_through(alpha);
    if (ray != 0) return {Region::OnRay, ray};
    if (det(alpha, C.rays.front().primitive) > 0) return {Region::BelowLowest, 0};
    if (det(alpha, C.rays.back().primitive) < 0) return {Region::AboveHighest, 0};
    return {Region::Interior, 0};
}

// First level at which H^beta is a component: the last dominating neighbour
// dies at max(nu over the unit predecessors), and when beta is the diagonal
// shift of a point on an extreme ray the removal delays it one more level.
long long birth_level(const CurveData& C, LatticePoint beta) {
    if (beta == LatticePoint{1, 1}) return 1;
    long long b = 0;
    if (beta.x >= 2) b = std::max(b, nu_polygon(C, beta - LatticePoint{1, 0}));
    if (beta.y >= 2) b = std::max(b, nu_polygon(C, beta - LatticePoint{0, 1}));
    LatticePoint delta = beta - LatticePoint{1, 1};
    if (delta.x >= 1 && delta.y >= 1 && b == nu_polygon(C, delta)) {
        int ray = C.ray_through(delta);
        if (ray == 1 || (ray != 0 && ray == C.ray_count())) ++b;
    }
    return b;
}

}  // namespace

StaircaseRepr jsc_walk(const CurveData& C, long long period_bound) {
    if (period_bound < 1) throw input_error("walk bound must be positive");
    StaircaseRepr repr;
    repr.level_bound = period_bound;

    std::set<LatticePoint> visited;
    std::set<std::pair<LatticePoint, LatticePoint>> seen_edges;
    std::vector<LatticePoint> queue{{1, 1}};
    std::set<LatticePoint> expanded;

    while (!queue.empty()) {
        LatticePoint alpha = queue.back();
        queue.pop_back();
        visited.insert(alpha);
        if (!expanded.insert(alpha).second) continue;
        long long nu_a = nu_polygon(C, alpha);
        if (nu_a > period_bound) continue;  // successors are born past the bound

        Position pos = classify(C, alpha);
        std::vector<std::pair<LatticePoint, bool>> next;  // (successor, jump?)
        if (pos.region == Region::OnRay) {
            const TropicalRay& ray = C.rays[static_cast<std::size_t>(pos.ray - 1)];
            repr.arrows.push_back({alpha, ray.index, ray.branch_count});
            if (C.ray_count() == 1) {
                next.emplace_back(alpha + LatticePoint{1, 1}, true);
            } else if (pos.ray == 1) {
                next.emplace_back(alpha + LatticePoint{0, 1}, false);
            } else if (pos.ray == C.ray_count()) {
                next.emplace_back(alpha + LatticePoint{1, 0}, false);
            } else {
                next.emplace_back(alpha + LatticePoint{0, 1}, false);
                next.emplace_back(alpha + LatticePoint{1, 0}, false);
            }
        } else if (pos.region == Region::BelowLowest) {
            next.emplace_back(alpha + LatticePoint{0, 1}, false);
        } else if (pos.region == Region::AboveHighest) {
            next.emplace_back(alpha + LatticePoint{1, 0}, false);
        } else {
            next.emplace_back(alpha + LatticePoint{0, 1}, false);
            next.emplace_back(alpha + LatticePoint{1, 0}, false);
        }

        for (auto [succ, jump] : next) {
            if (seen_edges.emplace(alpha, succ).second)
                repr.walk_edges.push_back({alpha, succ, jump});
            queue.push_back(succ);
        }
    }

    for (const LatticePoint& alpha : visited)
        repr.points.push_back({alpha, nu_polygon(C, alpha) - 1, birth_level(C, alpha)});
    std::sort(repr.points.begin(), repr.points.end(),
              [](const WalkPoint& a, const WalkPoint& b) { return a.alpha < b.alpha; });
    std::sort(repr.arrows.begin(), repr.arrows.end(),
              [](const WalkArrow& a, const WalkArrow& b) { return a.alpha < b.alpha; });
    std::sort(repr.walk_edges.begin(), repr.walk_edges.end(),
              [](const WalkEdge& a, const WalkEdge& b) {
                  return a.from != b.from ? a.from < b.from : a.to < b.to;
              });
    return repr;
}

JetGraph expand_jsc(const StaircaseRepr& repr, long long bound) {
    if (bound < 1 || bound > repr.level_bound)
        throw input_error("expansion bound must lie within the walk bound");
    JetGraph g;
    g.max_level = bound;
    for (long long m = 1; m <= bound; ++m) g.levels[m] = {};

    for (const WalkPoint& p : repr.points) {
        // H^alpha is a component from its birth level until level nu - 1
        for (long long m = p.birth; m <= std::min(p.weight, bound); ++m) {
            JetComponent c;
            c.kind = JetComponent::Kind::Hyperplane;
            c.level = m;
            c.point = p.alpha;
            long long d = 2 * (m + 1) - p.alpha.weight();
            g.levels[m].emplace_back(c, ComponentWeight{d, d});
        }
    }
    std::map<LatticePoint, long long> weight_of;
    for (const WalkPoint& p : repr.points) weight_of[p.alpha] = p.weight;
    for (const WalkArrow& a : repr.arrows) {
        long long nu_a = weight_of.at(a.alpha) + 1;
        for (long long m = nu_a; m <= bound; ++m) {
            long long codim = a.alpha.weight() + 1 + m - nu_a;
            ComponentWeight w{2 * (m + 1) - codim, 2 * (m + 1) - a.alpha.weight()};
            for (long long j = 1; j <= a.multiplicity; ++j) {
                JetComponent c;
                c.kind = JetComponent::Kind::Infinite;
                c.level = m;
                c.point = a.alpha;
                c.ray = a.ray;
                c.branch = static_cast<int>(j);
                g.levels[m].emplace_back(c, w);
            }
        }
    }
    for (auto& [m, comps] : g.levels)
        std::sort(comps.begin(), comps.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    for (long long m = 1; m < bound; ++m) {
        auto e = edges_between(g.levels[m], g.levels[m + 1]);
        g.graph_edges.insert(g.graph_edges.end(), e.begin(), e.end());
    }
    return g;
}

}  // namespace newtonjet
