// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits with the number of failed criteria.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "corpus.hpp"
#include "newtonjet/cli.hpp"
#include "newtonjet/jetgraph.hpp"
#include "newtonjet/jetpoly.hpp"
#include "newtonjet/series.hpp"
#include "newtonjet/topo.hpp"

using namespace newtonjet;
using newtonjet::testing::corpus;
using newtonjet::testing::curve;

namespace {

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    bool (*run)(std::ostream& log);
};

bool expect(std::ostream& log, bool ok, const std::string& what) {
    if (!ok) log << "    failed: " << what << "\n";
    return ok;
}

// ---- criterion 1: staircase walk ------------------------------------------

bool run_walk(std::ostream& log) {
    bool ok = true;
    CmdResult r = cmd_walk(2, 3, Format::Text);
    ok &= expect(log, r.status == 0 && r.out == "(1,1),(1,2),(2,2),(2,3)\n",
                 "walk 2 3 output");
    std::mt19937 rng(402653189);
    int done = 0;
    while (done < 200) {
        long long q = 2 + static_cast<long long>(rng() % 499);
        long long p = 1 + static_cast<long long>(rng() % (q - 1));
        if (gcd_ll(p, q) != 1) continue;
        ++done;
        StaircaseCF cf = sc_continued_fraction(p, q);
        long long sum = 0;
        for (long long d : cf.digits) sum += d;
        ok &= expect(log, static_cast<long long>(cf.digits.size()) == p, "digit count");
        ok &= expect(log, sum == q, "digit sum");
        ok &= expect(log, cf.remainders.back() == 0, "final remainder");
        for (long long k = 1; k < p; ++k) {
            long long dk = cf.digit_prefix(static_cast<std::size_t>(k));
            long long rk = cf.remainders[static_cast<std::size_t>(k - 1)];
            ok &= expect(log, rk > 0, "positive remainder");
            ok &= expect(log, det({k, dk}, {p, q}) == rk, "below determinant");
            ok &= expect(log, det({p, q}, {k, dk + 1}) == p - rk, "above determinant");
            ok &= expect(log, det({k + 1, dk + 1}, {p, q}) == q - p + rk, "step determinant");
        }
        ok &= expect(log, det(staircase_walk(p, q, {0, 0}).points.back(), {p, q}) == 0,
                     "endpoint on ray");
        if (!ok) return false;
    }
    return ok;
}

// ---- criterion 2: cusp jet graph ------------------------------------------

bool run_cusp_graph(std::ostream& log) {
    CurveData cusp = validate_expr("y^2-x^3");
    JetGraph g = build_graph(cusp, 8);
    std::vector<std::vector<std::string>> want_levels{
        {"H(1,1)(2,2)"},  {"H(1,2)(3,3)"},  {"H(2,2)(4,4)"},
        {"H(2,3)(5,5)"},  {"H(2,3)(7,7)"},  {"F1.1(2,3)(8,9)"},
        {"H(3,4)(9,9)", "F1.1(2,3)(9,11)"}, {"H(3,5)(10,10)", "F1.1(2,3)(10,13)"}};
    bool ok = true;
    for (long long m = 1; m <= 8; ++m) {
        std::vector<std::string> got;
        for (const auto& [c, w] : g.levels[m])
            got.push_back(c.label() + "(" + std::to_string(w.dim) + "," +
                          std::to_string(w.embdim) + ")");
        ok &= expect(log, got == want_levels[static_cast<std::size_t>(m - 1)],
                     "level " + std::to_string(m) + " components");
    }
    std::set<std::string> want_edges{
        "2:H(1,2)->1:H(1,1)",    "3:H(2,2)->2:H(1,2)",       "4:H(2,3)->3:H(2,2)",
        "5:H(2,3)->4:H(2,3)",    "6:F1.1(2,3)->5:H(2,3)",    "7:H(3,4)->6:F1.1(2,3)",
        "7:F1.1(2,3)->6:F1.1(2,3)", "8:H(3,5)->7:H(3,4)",    "8:F1.1(2,3)->7:F1.1(2,3)"};
    std::set<std::string> got_edges;
    for (const auto& [c, pnt] : g.graph_edges)
        got_edges.insert(std::to_string(c.level) + ":" + c.label() + "->" +
                         std::to_string(pnt.level) + ":" + pnt.label());
    ok &= expect(log, got_edges == want_edges, "edge set");

    // the shipped golden file agrees byte for byte
    CmdResult r = cmd_graph("y^2-x^3", 8, Format::Text);
    std::ifstream golden(std::string(GOLDEN_DIR) + "/cusp_graph_8.txt");
    std::ostringstream buf;
    buf << golden.rdbuf();
    ok &= expect(log, r.status == 0 && r.out == buf.str(), "golden file match");
    return ok;
}

// ---- criterion 3: walk vs frontier decomposition ---------------------------

bool run_decomposition(std::ostream& log) {
    bool ok = true;
    for (const auto& cc : corpus()) {
        CurveData C = curve(cc);
        StaircaseRepr repr = jsc_walk(C, 40);
        JetGraph walk_graph = expand_jsc(repr, 40);
        for (long long m = 1; m <= 40; ++m) {
            ok &= expect(log, walk_graph.levels[m] == components(C, m),
                         cc.name + " level " + std::to_string(m));
            if (!ok) return false;
        }
    }
    return ok;
}

// ---- criterion 4: jet-equation grounding ------------------------------------

bool run_jets(std::ostream& log) {
    bool ok = true;
    for (const auto& cc : corpus()) {
        CurveData C = curve(cc);
        for (const TropicalRay& ray : C.rays) {
            for (long long s = 1; s * ray.nu_on_ray <= 14; ++s) {
                LatticePoint alpha = s * ray.primitive;
                long long v = s * ray.nu_on_ray;
                auto jets = jet_expand_floor(C.poly, v, alpha);
                for (long long k = 0; k < v; ++k)
                    ok &= expect(log, jets[static_cast<std::size_t>(k)].is_zero(),
                                 cc.name + " vanishing below nu at " + to_string(alpha));
                JetPolynomial expected =
                    jet_evaluate_at(initial_form(C.poly, alpha), alpha, v);
                ok &= expect(log, jets[static_cast<std::size_t>(v)] == expected,
                             cc.name + " initial form at " + to_string(alpha));
                if (!ok) return false;
            }
        }
    }
    return ok;
}

// ---- criterion 5: generating series ----------------------------------------

BivarRational frac(BivarPoly num, std::vector<std::pair<long long, long long>> den) {
    std::map<std::pair<long long, long long>, long long> d;
    for (auto f : den) d[f] += 1;
    return BivarRational(std::move(num), std::move(d));
}

bool run_series(std::ostream& log) {
    bool ok = true;
    auto mono = [](long long u, long long v, long long c = 1) {
        return BivarPoly::monomial(u, v, c);
    };

    CurveData ex81 = validate_expr("(y^2-x^3)*(y^2-2x^3)");
    BivarRational displayed81 = frac(mono(6, 12, 2), {{1, 1}, {5, 12}}) +
                                frac(mono(5, 12), {{5, 12}}) +
                                frac(mono(2, 4) + mono(4, 8) + mono(3, 6), {{5, 12}});
    ok &= expect(log, series_G(ex81).equals(displayed81), "ex81 closed form");

    CurveData ex82 = validate_expr("(y^2-x^3)*(y^3-x^5)");
    BivarRational displayed82 = frac(mono(6, 15), {{1, 1}, {5, 15}}) +
                                frac(mono(9, 24), {{1, 1}, {8, 24}}) +
                                frac(mono(5, 15), {{5, 15}}) + frac(mono(8, 24), {{8, 24}}) +
                                frac(mono(13, 39), {{5, 15}, {8, 24}}) +
                                frac(mono(2, 5) + mono(4, 10), {{5, 15}}) +
                                frac(mono(3, 8) + mono(6, 16), {{8, 24}});
    ok &= expect(log, series_G(ex82).equals(displayed82), "ex82 closed form");

    for (const CurveData* C : {&ex81, &ex82}) {
        ok &= expect(log, truncate(series_G(*C), 60) == enumerate_series(*C, 60),
                     "truncation to v^60 equals enumeration");
    }
    return ok;
}

// ---- criterion 6: poles ------------------------------------------------------

bool run_poles(std::ostream& log) {
    bool ok = true;
    PoleReport r81 = poles(validate_expr("(y^2-x^3)*(y^2-2x^3)"));
    ok &= expect(log, r81.families.size() == 2, "ex81 family count");
    ok &= expect(log,
                 r81.families[0].kind == PoleFamily::Kind::Diagonal &&
                     r81.families[0].multiplicity == 1 && r81.families[0].certified,
                 "ex81 diagonal");
    ok &= expect(log,
                 r81.families[1].kind == PoleFamily::Kind::Ray &&
                     r81.families[1].exp_u == 5 && r81.families[1].exp_v == 12 &&
                     r81.families[1].delta == 1 && r81.families[1].multiplicity == 1 &&
                     r81.families[1].certified,
                 "ex81 ray family 1-u^5v^12, Delta=1");

    PoleReport r82 = poles(validate_expr("(y^2-x^3)*(y^3-x^5)"));
    ok &= expect(log, r82.families.size() == 3, "ex82 family count");
    ok &= expect(log,
                 r82.families[1].kind == PoleFamily::Kind::Ray && r82.families[1].delta == 5 &&
                     r82.families[1].certified,
                 "ex82 Delta_1 = gcd(5,15) = 5");
    ok &= expect(log,
                 r82.families[2].kind == PoleFamily::Kind::Ray && r82.families[2].delta == 8 &&
                     r82.families[2].certified,
                 "ex82 Delta_2 = gcd(8,24) = 8");

    PoleReport node = poles(validate_expr("(y-x)*(y-2x)"));
    ok &= expect(log,
                 node.families[0].kind == PoleFamily::Kind::Diagonal &&
                     node.families[0].multiplicity == 2 && node.families[0].certified,
                 "node: 1-uv with multiplicity 2");
    ok &= expect(log,
                 node.families.size() >= 2 &&
                     node.families[1].kind == PoleFamily::Kind::AntiDiagonal &&
                     node.families[1].multiplicity == 1 && node.families[1].certified,
                 "node: 1+uv with multiplicity 1");
    // the partial-fraction display: G = u^2v^2/(1-u^2v^2) + 2u^3v^2/((1-uv)(1-u^2v^2))
    BivarRational display = frac(BivarPoly::monomial(2, 2), {{2, 2}}) +
                            frac(BivarPoly::monomial(3, 2, 2), {{1, 1}, {2, 2}});
    ok &= expect(log, series_G(validate_expr("(y-x)*(y-2x)")).equals(display),
                 "node: closed form matches the display");
    return ok;
}

// ---- criterion 7: topological type ------------------------------------------

bool run_topo(std::ostream& log) {
    bool ok = true;
    CmdResult r =
        cmd_compare("(y^2-x^3)(y^3-x^5)", "(y^2-7x^3+x^5*y)(y^3-2x^5+x^6)", Format::Text);
    ok &= expect(log,
                 r.status == 0 &&
                     r.out.substr(0, r.out.find('\n')) == "same embedded topological type",
                 "ex82 equivalent to its deformation");
    r = cmd_compare("y^2-x^3", "y^2-x^4", Format::Text);
    ok &= expect(log,
                 r.status == 0 &&
                     r.out.substr(0, r.out.find('\n')) == "different embedded topological type",
                 "cusp differs from the tangent pair");

    // the positive direction on a pair of genuinely different polynomials
    {
        CurveData a = validate_expr("(y^2-x^3)*(y^3-x^5)");
        CurveData b = validate_expr("(y^2-7x^3+x^5*y)*(y^3-2x^5+x^6)");
        long long bound = 0;
        for (const TropicalRay& ray : a.rays) bound = std::max(bound, 3 * ray.nu_on_ray);
        ok &= expect(log,
                     invariant(a) == invariant(b) &&
                         build_graph(a, bound).canonical_serialization() ==
                             build_graph(b, bound).canonical_serialization(),
                     "equal invariants give equal canonical graphs");
    }

    const auto& all = corpus();
    std::vector<CurveData> curves;
    std::vector<TopoInvariant> invs;
    for (const auto& cc : all) {
        curves.push_back(curve(cc));
        invs.push_back(invariant(curves.back()));
    }
    for (std::size_t i = 0; i < curves.size() && ok; ++i) {
        for (std::size_t j = i; j < curves.size() && ok; ++j) {
            long long bound = 0;
            for (const TropicalRay& ray : curves[i].rays)
                bound = std::max(bound, ray.nu_on_ray);
            for (const TropicalRay& ray : curves[j].rays)
                bound = std::max(bound, ray.nu_on_ray);
            bound *= 3;
            bool inv_eq = invs[i] == invs[j];
            bool graph_eq = build_graph(curves[i], bound).canonical_serialization() ==
                            build_graph(curves[j], bound).canonical_serialization();
            ok &= expect(log, inv_eq == graph_eq,
                         all[i].name + " vs " + all[j].name + ": invariant/graph agreement");
        }
    }
    return ok;
}

// ---- criterion 8: randomized property suite ----------------------------------

bool run_properties(std::ostream& log) {
    bool ok = true;
    const auto& all = corpus();
    std::vector<CurveData> curves;
    for (const auto& cc : all) curves.push_back(curve(cc));

    // swap invariance of the series and the invariant (branch data reflected)
    for (const CurveData& C : curves) {
        CurveData S = validate(C.input_poly.swap_xy());
        ok &= expect(log, series_G(C).equals(series_G(S)), "swap invariance of G");
        TopoInvariant a = invariant(C), b = invariant(S);
        std::multiset<std::pair<std::pair<long long, long long>, long long>> ra, rb;
        for (const auto& rec : a.rays)
            ra.insert({{rec.primitive.x, rec.primitive.y}, rec.branches});
        for (const auto& rec : b.rays) {
            // compare up to reflection: normalize both to slope >= 1 form
            rb.insert({{rec.primitive.x, rec.primitive.y}, rec.branches});
        }
        auto canon = [](std::multiset<std::pair<std::pair<long long, long long>, long long>> s) {
            std::multiset<std::pair<std::pair<long long, long long>, long long>> c;
            for (auto [pq, r] : s) {
                auto [p, q] = pq;
                if (p > q) std::swap(p, q);
                c.insert({{p, q}, r});
            }
            return c;
        };
        ok &= expect(log, canon(ra) == canon(rb), "swap reflects the invariant rays");
    }

    std::mt19937 rng(1299709);
    int cases = 0;
    while (cases < 10000 && ok) {
        const CurveData& C = curves[rng() % curves.size()];
        int which = static_cast<int>(rng() % 3);
        if (which == 0) {
            // antichain property of both frontiers
            long long m = 1 + static_cast<long long>(rng() % 40);
            const std::vector<LatticePoint> sets[2] = {frontier(C, m), reduced_frontier(C, m)};
            for (const auto& set : sets)
                for (const LatticePoint& a : set)
                    for (const LatticePoint& b : set)
                        if (!(a == b))
                            ok &= expect(log, !dominates(a, b), "frontier antichain");
        } else if (which == 1) {
            // weight arithmetic d + codim = 2(m+1)
            long long m = 1 + static_cast<long long>(rng() % 40);
            for (const auto& [c, w] : components(C, m)) {
                long long codim = c.kind == JetComponent::Kind::Hyperplane
                                      ? c.point.weight()
                                      : c.point.weight() + 1 + m -
                                            (m + 1 - (w.embdim - w.dim));
                ok &= expect(log, w.dim + codim == 2 * (m + 1), "weight arithmetic");
                if (c.kind == JetComponent::Kind::Hyperplane)
                    ok &= expect(log, w.embdim == w.dim, "hyperplane e = d");
                else
                    ok &= expect(log, w.embdim > w.dim, "infinite e > d");
            }
        } else {
            // strict nu inequality off the diagonal ray when (1,1) is absent
            if (C.poly.has_term(1, 1)) continue;
            const TropicalRay& ray = C.rays[rng() % C.rays.size()];
            if (ray.primitive == LatticePoint{1, 1}) continue;
            long long s = 1 + static_cast<long long>(rng() % 20);
            LatticePoint alpha = s * ray.primitive;
            ok &= expect(log, nu_polygon(C, alpha) > alpha.weight(),
                         "nu above taxicab weight off the diagonal");
        }
        ++cases;
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "staircase walk and division lemma (200 random pairs)", 1.0, run_walk},
        {2, "cusp jet graph, levels 1-8, weights and edges", 10.0, run_cusp_graph},
        {3, "walk vs frontier component decomposition, 12 curves, m <= 40", 60.0,
         run_decomposition},
        {4, "jet-equation grounding along rays, nu <= 14", 30.0, run_jets},
        {5, "generating series closed forms and v^60 truncations", 10.0, run_series},
        {6, "pole families with exact certificates", 10.0, run_poles},
        {7, "embedded topological type vs canonical graphs", 120.0, run_topo},
        {8, "randomized property suite (10^4 cases)", 60.0, run_properties},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        std::ostringstream log;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = c.run(log);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.budget_seconds) {
            ok = false;
            log << "    exceeded time budget of " << c.budget_seconds << "s\n";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title
             << " (" << secs << "s)";
        std::cout << line.str() << "\n" << log.str();
        if (!ok) ++failures;
    }
    return failures;
}
