#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "newtonjet/jetgraph.hpp"
#include "newtonjet/jetpoly.hpp"

using namespace newtonjet;
using newtonjet::testing::corpus;
using newtonjet::testing::curve;

namespace {

// independent frontier oracle: full box scan plus explicit minimality filter
std::vector<LatticePoint> frontier_bruteforce(const CurveData& C, long long m) {
    long long box = m + std::max(C.s_left(), C.s_right()) + 1;
    std::vector<LatticePoint> all;
    for (long long x = 1; x <= box; ++x)
        for (long long y = 1; y <= box; ++y)
            if (nu_polygon(C, {x, y}) > m) all.push_back({x, y});
    std::vector<LatticePoint> minimal;
    for (const LatticePoint& g : all) {
        bool is_min = true;
        for (const LatticePoint& h : all)
            if (!(h == g) && dominates(h, g)) is_min = false;
        if (is_min) minimal.push_back(g);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

std::vector<LatticePoint> hyperplane_points(const LevelComponents& comps) {
    std::vector<LatticePoint> pts;
    for (const auto& [c, w] : comps)
        if (c.kind == JetComponent::Kind::Hyperplane) pts.push_back(c.point);
    return pts;
}

}  // namespace

TEST_CASE("frontier worked values") {
    CurveData cusp = validate_expr("y^2 - x^3");
    CHECK(frontier(cusp, 5) == std::vector<LatticePoint>{{2, 3}});
    CHECK(frontier(cusp, 6) == std::vector<LatticePoint>{{3, 4}});
    CHECK(frontier(cusp, 1) == std::vector<LatticePoint>{{1, 1}});
}

TEST_CASE("frontier equals the box-scan oracle") {
    for (const auto& cc : corpus()) {
        CurveData C = curve(cc);
        for (long long m = 0; m <= 25; ++m) CHECK(frontier(C, m) == frontier_bruteforce(C, m));
    }
}

TEST_CASE("reduced frontier removes the diagonal shift at on-ray levels") {
    CurveData cusp = validate_expr("y^2 - x^3");
    CHECK(reduced_frontier(cusp, 6).empty());
    CHECK(reduced_frontier(cusp, 7) == std::vector<LatticePoint>{{3, 4}});
    CHECK(reduced_frontier(cusp, 5) == std::vector<LatticePoint>{{2, 3}});
}

TEST_CASE("frontiers are antichains inside the proven box") {
    std::mt19937 rng(71);
    const auto& all = corpus();
    for (int i = 0; i < 400; ++i) {
        CurveData C = curve(all[rng() % all.size()]);
        long long m = 1 + static_cast<long long>(rng() % 30);
        const std::vector<LatticePoint> sets[2] = {frontier(C, m), reduced_frontier(C, m)};
        for (const auto& set : sets) {
            for (const LatticePoint& a : set) {
                CHECK(a.x >= 1);
                CHECK(a.x <= m + std::max(C.s_left(), C.s_right()) + 1);
                CHECK(a.y <= m + std::max(C.s_left(), C.s_right()) + 1);
                for (const LatticePoint& b : set)
                    if (!(a == b)) CHECK_FALSE(dominates(a, b));
            }
        }
    }
}

TEST_CASE("components of the cusp match the known weight table") {
    CurveData cusp = validate_expr("y^2 - x^3");

    LevelComponents l6 = components(cusp, 6);
    REQUIRE(l6.size() == 1);
    CHECK(l6[0].first.kind == JetComponent::Kind::Infinite);
    CHECK(l6[0].first.point == LatticePoint{2, 3});
    CHECK(l6[0].second == ComponentWeight{8, 9});

    LevelComponents l8 = components(cusp, 8);
    REQUIRE(l8.size() == 2);
    CHECK(l8[0].first.label() == "H(3,5)");
    CHECK(l8[0].second == ComponentWeight{10, 10});
    CHECK(l8[1].first.label() == "F1.1(2,3)");
    CHECK(l8[1].second == ComponentWeight{10, 13});
}

TEST_CASE("branch splitting of infinite components") {
    CurveData C = validate_expr("(y^2-x^3)*(y^2-2x^3)");
    LevelComponents l12 = components(C, 12);
    REQUIRE(l12.size() == 2);  // B*_12 is empty: (3,4) = (2,3)+(1,1) is removed
    for (const auto& [c, w] : l12) {
        CHECK(c.kind == JetComponent::Kind::Infinite);
        CHECK(c.point == LatticePoint{2, 3});
        CHECK(2 * (12 + 1) - w.dim == 6);  // codim
    }
    CHECK(l12[0].first.branch == 1);
    CHECK(l12[1].first.branch == 2);
}

TEST_CASE("edges of the cusp graph") {
    CurveData cusp = validate_expr("y^2 - x^3");
    auto fmt = [](const std::vector<std::pair<JetComponent, JetComponent>>& es) {
        std::vector<std::string> out;
        for (const auto& [c, p] : es) out.push_back(c.label() + "->" + p.label());
        return out;
    };
    CHECK(fmt(edges(cusp, 1)) == std::vector<std::string>{"H(1,2)->H(1,1)"});
    CHECK(fmt(edges(cusp, 5)) == std::vector<std::string>{"F1.1(2,3)->H(2,3)"});
    CHECK(fmt(edges(cusp, 6)) ==
          std::vector<std::string>{"H(3,4)->F1.1(2,3)", "F1.1(2,3)->F1.1(2,3)"});
    CHECK(fmt(edges(cusp, 7)) ==
          std::vector<std::string>{"H(3,5)->H(3,4)", "F1.1(2,3)->F1.1(2,3)"});
}

TEST_CASE("weight arithmetic and parent existence") {
    for (const auto& cc : corpus()) {
        CurveData C = curve(cc);
        JetGraph g = build_graph(C, 20);
        for (const auto& [m, comps] : g.levels) {
            for (const auto& [c, w] : comps) {
                long long codim = 2 * (m + 1) - w.dim;
                if (c.kind == JetComponent::Kind::Hyperplane) {
                    CHECK(codim == c.point.weight());
                    CHECK(w.embdim == w.dim);
                } else {
                    CHECK(w.embdim == 2 * (m + 1) - c.point.weight());
                    CHECK(w.embdim - w.dim >= 1);
                    long long nu_a = m + 1 - (w.embdim - w.dim);
                    CHECK(codim == c.point.weight() + 1 + m - nu_a);
                }
            }
        }
        // every component above level 1 truncates into some component
        std::set<std::pair<long long, std::string>> with_parent;
        for (const auto& [child, parent] : g.graph_edges)
            with_parent.emplace(child.level, child.label());
        for (const auto& [m, comps] : g.levels) {
            if (m == 1) continue;
            for (const auto& [c, w] : comps)
                CHECK(with_parent.count({m, c.label()}) == 1);
        }
    }
}

TEST_CASE("infinite components at birth have exactly the H parent") {
    for (const auto& cc : corpus()) {
        CurveData C = curve(cc);
        JetGraph g = build_graph(C, 20);
        for (const auto& [m, comps] : g.levels) {
            for (const auto& [c, w] : comps) {
                if (c.kind != JetComponent::Kind::Infinite || w.embdim - w.dim != 1) continue;
                std::vector<std::string> parents;
                for (const auto& [child, parent] : g.graph_edges)
                    if (child == c) parents.push_back(parent.label());
                CHECK(parents == std::vector<std::string>{"H" + to_string(c.point)});
            }
        }
    }
}

TEST_CASE("hyperplane contributors") {
    CurveData cusp = validate_expr("y^2 - x^3");
    CHECK(hyperplane_contributors(cusp, 8) ==
          std::vector<LatticePoint>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 4}});
    CurveData ex81 = validate_expr("(y^2-x^3)*(y^2-2x^3)");
    CHECK(hyperplane_contributors(ex81, 12) ==
          std::vector<LatticePoint>{{1, 1}, {1, 2}, {2, 2}, {2, 3}});
    for (const auto& cc : corpus()) {
        auto pts = hyperplane_contributors(curve(cc), 10);
        CHECK(std::find(pts.begin(), pts.end(), LatticePoint{1, 1}) != pts.end());
    }
}

TEST_CASE("contributors equal the reduced-frontier sweep") {
    // beta contributes iff beta is in B*_{nu_beta - 1}
    for (const auto& cc : corpus()) {
        CurveData C = curve(cc);
        const long long bound = 30;
        std::set<LatticePoint> swept;
        for (long long m = 1; m <= bound; ++m)
            for (const LatticePoint& b : reduced_frontier(C, m))
                if (nu_polygon(C, b) == m + 1) swept.insert(b);
        std::set<LatticePoint> direct;
        for (const LatticePoint& b : hyperplane_contributors(C, bound + 1)) direct.insert(b);
        CHECK(swept == direct);
    }
}

TEST_CASE("staircase walk of the cusp") {
    CurveData cusp = validate_expr("y^2 - x^3");
    StaircaseRepr repr = jsc_walk(cusp, 12);
    std::vector<std::pair<LatticePoint, long long>> expected{
        {{1, 1}, 1}, {{1, 2}, 2}, {{2, 2}, 3}, {{2, 3}, 5},
        {{3, 4}, 7}, {{3, 5}, 8}, {{4, 5}, 9}, {{4, 6}, 11}};
    REQUIRE(repr.points.size() >= expected.size());
    for (const auto& [alpha, w] : expected) {
        bool found = false;
        for (const WalkPoint& p : repr.points)
            if (p.alpha == alpha && p.weight == w) found = true;
        CHECK(found);
    }
    REQUIRE(repr.arrows.size() == 2);  // (2,3) and (4,6) within the bound
    CHECK(repr.arrows[0].alpha == LatticePoint{2, 3});
    CHECK(repr.arrows[0].multiplicity == 1);
    CHECK(repr.arrows[1].alpha == LatticePoint{4, 6});
}

TEST_CASE("staircase walk of the two-ray curve hits both rays") {
    CurveData C = validate_expr("(y^2-x^3)*(y^3-x^2)");
    StaircaseRepr repr = jsc_walk(C, 10);
    std::set<LatticePoint> pts;
    for (const WalkPoint& p : repr.points) pts.insert(p.alpha);
    for (LatticePoint e :
         {LatticePoint{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}, {3, 3}})
        CHECK(pts.count(e) == 1);
    REQUIRE(repr.arrows.size() == 2);
    CHECK(repr.arrows[0].alpha == LatticePoint{2, 3});
    CHECK(repr.arrows[1].alpha == LatticePoint{3, 2});
}

TEST_CASE("diagonal two-branch walk stays on the diagonal") {
    CurveData C = validate_expr("(y-x)*(y-2x)");
    StaircaseRepr repr = jsc_walk(C, 12);
    for (const WalkPoint& p : repr.points) CHECK(p.alpha.x == p.alpha.y);
    for (const WalkArrow& a : repr.arrows) {
        CHECK(a.alpha.x == a.alpha.y);
        CHECK(a.multiplicity == 2);
    }
    CHECK(repr.arrows.size() == 6);  // (1,1)..(6,6): nu = 2s <= 12
}

TEST_CASE("walk representation reproduces the frontier graph") {
    for (const auto& cc : corpus()) {
        CurveData C = curve(cc);
        const long long bound = 30;
        StaircaseRepr repr = jsc_walk(C, bound);
        JetGraph walk_graph = expand_jsc(repr, bound);
        JetGraph frontier_graph = build_graph(C, bound);
        CHECK(walk_graph.canonical_serialization() == frontier_graph.canonical_serialization());
        // per-level point sets: walk levels equal the reduced frontiers
        for (long long m = 1; m <= bound; ++m) {
            auto walk_pts = hyperplane_points(walk_graph.levels[m]);
            auto front_pts = reduced_frontier(C, m);
            CHECK(walk_pts == front_pts);
        }
    }
}

TEST_CASE("at on-ray levels the diagonal shift lands inside the closure") {
    // alpha + (1,1) indexes no component at m = nu_alpha(f), and the branch
    // jets vanish identically once the variables below alpha + (1,1) are
    // killed, so H^{alpha+(1,1)} sits inside each infinite component
    for (const auto& cc : corpus()) {
        CurveData C = curve(cc);
        if (C.swapped) continue;  // branch list is written in input coordinates
        for (const TropicalRay& ray : C.rays) {
            for (long long s = 1; s * ray.nu_on_ray <= 12; ++s) {
                LatticePoint alpha = s * ray.primitive;
                long long m = s * ray.nu_on_ray;
                LatticePoint gamma = alpha + LatticePoint{1, 1};
                for (const auto& [c, w] : components(C, m)) {
                    CHECK_FALSE((c.kind == JetComponent::Kind::Hyperplane && c.point == gamma));
                }
                for (const std::string& bexpr : cc.branches) {
                    SparsePoly g = parse_poly(bexpr);
                    auto brays = tropical_rays(g, newton_polygon(g));
                    REQUIRE(brays.size() == 1);
                    if (!(brays[0].primitive == ray.primitive)) continue;  // other ray
                    long long k = nu(g, alpha);
                    auto jets = jet_expand_floor(g, k, gamma);
                    for (long long l = 0; l <= k; ++l)
                        CHECK(jets[static_cast<std::size_t>(l)].is_zero());
                }
                // strictness: codimensions differ by one
                CHECK(gamma.weight() == alpha.weight() + 2);
            }
        }
    }
}
