#include "newtonjet/render.hpp"

#include <algorithm>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

namespace newtonjet {

const char* const kSchemaTag = "newtonjet/1";

namespace {

const char* const kEmbdimNote =
    "infinite-component embedding dimension reported as 2(m+1)-|alpha|; "
    "proven as a lower bound and attained in every cross-checked case";

std::string weight_str(ComponentWeight w) {
    return "(" + std::to_string(w.dim) + "," + std::to_string(w.embdim) + ")";
}

}  // namespace

Json json_lattice_point(LatticePoint p) { return Json::array({p.x, p.y}); }

Json json_walk(const Walk& w) {
    Json j;
    j["schema"] = kSchemaTag;
    j["start"] = json_lattice_point(w.start);
    Json pts = Json::array();
    for (const LatticePoint& p : w.points) pts.push_back(json_lattice_point(p));
    j["points"] = pts;
    std::string steps;
    for (Step s : w.steps) steps += s == Step::Vertical ? 'V' : 'H';
    j["steps"] = steps;
    return j;
}

Json json_polygon(const CurveData& C) {
    Json j;
    Json verts = Json::array();
    for (const LatticePoint& v : C.polygon.vertices) verts.push_back(json_lattice_point(v));
    j["vertices"] = verts;
    Json rays = Json::array();
    for (const TropicalRay& r : C.rays) {
        Json jr;
        jr["index"] = r.index;
        jr["primitive"] = json_lattice_point(r.primitive);
        jr["lattice_length"] = r.branch_count;
        jr["nu_on_ray"] = r.nu_on_ray;
        jr["face_poly"] = r.face_poly.to_string();
        rays.push_back(jr);
    }
    j["rays"] = rays;
    return j;
}

Json json_curve_header(const CurveData& C) {
    Json j;
    j["schema"] = kSchemaTag;
    j["input"] = C.input_poly.to_string();
    j["swapped"] = C.swapped;
    j["polynomial"] = C.poly.to_string();
    j["polygon"] = json_polygon(C);
    return j;
}

Json json_graph(const JetGraph& g) {
    Json j;
    j["max_level"] = g.max_level;
    Json levels = Json::array();
    for (const auto& [m, comps] : g.levels) {
        Json jl;
        jl["level"] = m;
        Json list = Json::array();
        for (const auto& [c, w] : comps) {
            Json jc;
            jc["kind"] = c.kind == JetComponent::Kind::Hyperplane ? "hyperplane" : "infinite";
            jc["point"] = json_lattice_point(c.point);
            if (c.kind == JetComponent::Kind::Infinite) {
                jc["ray"] = c.ray;
                jc["branch"] = c.branch;
            }
            jc["dim"] = w.dim;
            jc["embdim"] = w.embdim;
            list.push_back(jc);
        }
        jl["components"] = list;
        levels.push_back(jl);
    }
    j["levels"] = levels;
    Json edges = Json::array();
    for (const auto& [child, parent] : g.graph_edges) {
        Json je;
        je["child_level"] = child.level;
        je["child"] = child.label();
        je["parent_level"] = parent.level;
        je["parent"] = parent.label();
        edges.push_back(je);
    }
    j["edges"] = edges;
    j["notes"] = kEmbdimNote;
    return j;
}

Json json_staircase(const StaircaseRepr& repr) {
    Json j;
    j["level_bound"] = repr.level_bound;
    Json pts = Json::array();
    for (const WalkPoint& p : repr.points) {
        Json jp;
        jp["point"] = json_lattice_point(p.alpha);
        jp["weight"] = p.weight;
        jp["birth"] = p.birth;
        pts.push_back(jp);
    }
    j["points"] = pts;
    Json arrows = Json::array();
    for (const WalkArrow& a : repr.arrows) {
        Json ja;
        ja["point"] = json_lattice_point(a.alpha);
        ja["ray"] = a.ray;
        ja["multiplicity"] = a.multiplicity;
        arrows.push_back(ja);
    }
    j["arrows"] = arrows;
    return j;
}

Json json_invariant(const TopoInvariant& inv) {
    Json j;
    Json rays = Json::array();
    for (const auto& r : inv.rays) {
        Json jr;
        jr["primitive"] = json_lattice_point(r.primitive);
        jr["branches"] = r.branches;
        rays.push_back(jr);
    }
    j["rays"] = rays;
    j["total_branches"] = inv.total_branches();
    Json inters = Json::array();
    for (const auto& [pair, n] : inv.intersections) {
        Json ji;
        ji["first"] = Json::array({pair.first.first, pair.first.second});
        ji["second"] = Json::array({pair.second.first, pair.second.second});
        ji["intersection"] = n;
        inters.push_back(ji);
    }
    j["intersections"] = inters;
    return j;
}

Json json_bivar_poly(const BivarPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json jt;
        jt["u"] = e.u;
        jt["v"] = e.v;
        jt["coeff"] = c.str();
        terms.push_back(jt);
    }
    return terms;
}

Json json_rational(const BivarRational& r) {
    Json j;
    j["numerator"] = json_bivar_poly(r.numerator());
    Json den = Json::array();
    for (const auto& [e, mult] : r.denominator()) {
        Json jf;
        jf["u"] = e.first;
        jf["v"] = e.second;
        jf["multiplicity"] = mult;
        den.push_back(jf);
    }
    j["denominator_factors"] = den;
    j["display"] = r.to_string();
    return j;
}

Json json_series(const CurveData& C, const BivarRational& g, const SeriesParts& parts) {
    Json j;
    j["generating_series"] = json_rational(g);
    Json jr = Json::array();
    for (const auto& rt : parts.rays) {
        Json t;
        t["ray"] = rt.ray;
        t["branch_count"] = rt.branch_count;
        t["u"] = rt.exps.u;
        t["v"] = rt.exps.v;
        jr.push_back(t);
    }
    j["ray_terms"] = jr;
    Json cones = Json::array();
    for (const auto& cone : parts.interior) {
        Json t;
        t["left_ray"] = cone.left_ray;
        t["right_ray"] = cone.right_ray;
        t["det"] = cone.det;
        Json cell = Json::array();
        for (UVExp e : cone.cell_terms) cell.push_back(Json::array({e.u, e.v}));
        t["cell_terms"] = cell;
        // the two-generator product form enumerates only nonnegative integer
        // combinations of the ray generators; it is complete exactly when the
        // adjacent primitives span the whole lattice
        UVExp l = parts.rays[static_cast<std::size_t>(cone.left_ray - 1)].exps;
        UVExp r = parts.rays[static_cast<std::size_t>(cone.right_ray - 1)].exps;
        std::ostringstream pf;
        pf << "u^" << l.u + r.u << "v^" << l.v + r.v << " / ((1-u^" << l.u << "v^" << l.v
           << ")(1-u^" << r.u << "v^" << r.v << "))";
        t["product_form"] = pf.str();
        t["product_form_valid"] = cone.product_form_valid;
        t["product_form_scope"] = "unimodular-only";
        cones.push_back(t);
    }
    j["interior_cones"] = cones;
    auto side_json = [](const SeriesParts::BoundaryCone& side) {
        Json t;
        t["ray"] = side.ray;
        t["axis_vertex"] = side.vertex;
        Json offs = Json::array();
        for (UVExp e : side.offsets) offs.push_back(Json::array({e.u, e.v}));
        t["offsets"] = offs;
        return t;
    };
    j["below_cone"] = side_json(parts.below);
    j["above_cone"] = side_json(parts.above);
    (void)C;
    return j;
}

Json json_poles(const PoleReport& report) {
    Json j;
    j["generating_series"] = json_rational(report.g);
    Json fams = Json::array();
    for (const PoleFamily& f : report.families) {
        Json jf;
        switch (f.kind) {
            case PoleFamily::Kind::Diagonal: jf["kind"] = "diagonal"; break;
            case PoleFamily::Kind::AntiDiagonal: jf["kind"] = "antidiagonal"; break;
            case PoleFamily::Kind::Ray: jf["kind"] = "ray"; break;
        }
        if (f.kind == PoleFamily::Kind::Ray) {
            jf["ray"] = f.ray;
            jf["alpha"] = json_lattice_point(f.alpha);
            jf["vertex"] = json_lattice_point(f.vertex);
            jf["delta"] = f.delta;
        }
        std::string sign = f.kind == PoleFamily::Kind::AntiDiagonal ? "1+" : "1-";
        jf["factor"] = sign + std::string("u^") + std::to_string(f.exp_u) + "v^" +
                       std::to_string(f.exp_v);
        jf["multiplicity"] = f.multiplicity;
        jf["denominator_power"] = f.den_power;
        jf["numerator_power"] = f.num_power;
        jf["certified"] = f.certified;
        fams.push_back(jf);
    }
    j["families"] = fams;
    return j;
}

std::string dot_graph(const JetGraph& g, const std::string& title) {
    std::ostringstream os;
    os << "digraph \"" << title << "\" {\n";
    os << "  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
    auto id = [](const JetComponent& c) {
        return std::to_string(c.level) + ":" + c.label();
    };
    for (const auto& [m, comps] : g.levels) {
        os << "  { rank=same;";
        for (const auto& [c, w] : comps)
            os << " \"" << id(c) << "\" [label=\"" << c.label() << "\\n" << weight_str(w)
               << "\"];";
        os << " }\n";
    }
    for (const auto& [child, parent] : g.graph_edges)
        os << "  \"" << id(child) << "\" -> \"" << id(parent) << "\";\n";
    os << "}\n";
    return os.str();
}

std::string tikz_walk(const Walk& w, long long p, long long q) {
    long long xmax = w.points.back().x + 1, ymax = w.points.back().y + 1;
    std::ostringstream os;
    os << "\\begin{tikzpicture}\n";
    os << "\\draw[->] (0, 0) -- (" << xmax + 1 << ", 0) node[right] {$x$};\n";
    os << "\\draw[->] (0, 0) -- (0, " << ymax + 1 << ") node[above] {$y$};\n";
    {
        double top = static_cast<double>(xmax * q) / static_cast<double>(p);
        os << "\\draw[blue] (0,0) -- (" << xmax << "," << std::fixed << std::setprecision(3)
           << top << std::defaultfloat << ") node[above] {$L_{(" << p << "," << q << ")}$};\n";
    }
    for (std::size_t i = 0; i + 1 < w.points.size(); ++i)
        os << "\\draw[-] (" << w.points[i].x << "," << w.points[i].y << ") -- ("
           << w.points[i + 1].x << "," << w.points[i + 1].y << ");\n";
    for (std::size_t i = 0; i < w.points.size(); ++i) {
        const LatticePoint& pt = w.points[i];
        bool last = i + 1 == w.points.size();
        if (last) os << "\\draw[blue] ";
        else os << "\\draw ";
        os << "(" << pt.x << "," << pt.y << ") node[right] {$(" << pt.x << "," << pt.y
           << ")$};\n";
        os << "\\fill" << (last ? "[blue]" : "") << " (" << pt.x << "," << pt.y
           << ") circle[radius=2pt];\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

std::string tikz_staircase(const CurveData& C, const StaircaseRepr& repr) {
    long long xmax = 1, ymax = 1;
    for (const WalkPoint& p : repr.points) {
        xmax = std::max(xmax, p.alpha.x);
        ymax = std::max(ymax, p.alpha.y);
    }
    std::ostringstream os;
    os << "\\begin{tikzpicture}\n";
    os << "\\draw[->] (0, 0) -- (" << xmax + 2 << ", 0) node[right] {$x$};\n";
    os << "\\draw[->] (0, 0) -- (0, " << ymax + 2 << ") node[above] {$y$};\n";
    for (const TropicalRay& r : C.rays) {
        double top = static_cast<double>((xmax + 1) * r.primitive.y) /
                     static_cast<double>(r.primitive.x);
        os << "\\draw[blue] (0,0) -- (" << (xmax + 1) << "," << std::fixed
           << std::setprecision(3) << top << std::defaultfloat << ") node[above] {$L_{("
           << r.primitive.x << "," << r.primitive.y << ")}$};\n";
    }
    for (const WalkEdge& e : repr.walk_edges) {
        if (e.jump) continue;  // periods stay disconnected in the drawing
        os << "\\draw[-] (" << e.from.x << "," << e.from.y << ") -- (" << e.to.x << ","
           << e.to.y << ");\n";
    }
    std::set<LatticePoint> on_ray;
    for (const WalkArrow& a : repr.arrows) on_ray.insert(a.alpha);
    for (const WalkPoint& p : repr.points) {
        bool blue = on_ray.count(p.alpha) != 0;
        os << "\\fill" << (blue ? "[blue]" : "") << " (" << p.alpha.x << "," << p.alpha.y
           << ") circle[radius=2pt];\n";
        os << "\\draw" << (blue ? "[blue]" : "") << " (" << p.alpha.x << "," << p.alpha.y
           << ") node[right] {$[(" << p.alpha.x << "," << p.alpha.y << ")," << p.weight
           << "]$};\n";
    }
    for (const WalkArrow& a : repr.arrows) {
        const TropicalRay& ray = C.rays[static_cast<std::size_t>(a.ray - 1)];
        bool below_diagonal = ray.primitive.y < ray.primitive.x;
        for (long long k = 0; k < a.multiplicity; ++k) {
            double dx = 0.3 + 0.15 * static_cast<double>(k);
            // outward from the cone spanned by the rays
            double ox = below_diagonal ? dx : -dx;
            double oy = below_diagonal ? -dx : dx;
            os << "\\draw[red, ->] (" << a.alpha.x << "," << a.alpha.y << ") -- ("
               << static_cast<double>(a.alpha.x) + ox << ","
               << static_cast<double>(a.alpha.y) + oy << ");\n";
        }
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

std::string text_graph(const CurveData& C, const JetGraph& g, const std::string& header) {
    std::ostringstream os;
    os << header << "\n";
    if (C.swapped) os << "analyzed in swapped coordinates (x<->y)\n";
    // parents of each component, already sorted
    std::map<std::pair<long long, std::string>, std::vector<std::string>> parents;
    for (const auto& [child, parent] : g.graph_edges)
        parents[{child.level, child.label()}].push_back(parent.label());
    bool has_infinite = false;
    for (const auto& [m, comps] : g.levels) {
        for (const auto& [c, w] : comps) {
            os << "level " << m << ": " << c.label() << " (d,e)=" << weight_str(w);
            auto it = parents.find({m, c.label()});
            if (it != parents.end()) {
                os << " <-";
                for (std::size_t i = 0; i < it->second.size(); ++i)
                    os << (i ? ", " : " ") << it->second[i];
            }
            os << "\n";
            if (c.kind == JetComponent::Kind::Infinite) has_infinite = true;
        }
    }
    if (has_infinite) os << "# " << kEmbdimNote << "\n";
    return os.str();
}

std::string text_poles(const PoleReport& report) {
    std::ostringstream os;
    os << "G = " << report.g.to_string() << "\n";
    for (const PoleFamily& f : report.families) {
        std::string sign = f.kind == PoleFamily::Kind::AntiDiagonal ? "1 + " : "1 - ";
        std::string factor = sign + "u^" + std::to_string(f.exp_u) + "v^" +
                             std::to_string(f.exp_v);
        if (f.exp_u == 1 && f.exp_v == 1)
            factor = f.kind == PoleFamily::Kind::AntiDiagonal ? "1 + uv" : "1 - uv";
        switch (f.kind) {
            case PoleFamily::Kind::Diagonal: os << "diagonal pole "; break;
            case PoleFamily::Kind::AntiDiagonal: os << "antidiagonal pole "; break;
            case PoleFamily::Kind::Ray:
                os << "ray " << f.ray << " pole family (alpha=" << to_string(f.alpha)
                   << ", S=" << to_string(f.vertex) << ", Delta=" << f.delta << ") ";
                break;
        }
        os << "(" << factor << "): multiplicity " << f.multiplicity << " [denominator power "
           << f.den_power << ", numerator power " << f.num_power << ", "
           << (f.certified ? "certified by exact division" : "NOT certified") << "]\n";
    }
    return os.str();
}

}  // namespace newtonjet
