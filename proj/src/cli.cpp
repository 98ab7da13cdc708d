#include "newtonjet/cli.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "newtonjet/render.hpp"

namespace newtonjet {

namespace {

constexpr long long kMaxOrder = 10000;

CmdResult rejected(const input_error& e) { return {1, "", std::string(e.what()) + "\n"}; }

CmdResult usage(const std::string& msg) { return {2, "", msg + "\n"}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool order_ok(long long m) { return m >= 1 && m <= kMaxOrder; }

std::string text_header(const std::string& what, const CurveData& C) {
    std::ostringstream os;
    os << what << ": " << C.input_poly.to_string();
    return os.str();
}

}  // namespace

Format parse_format(const std::string& name) {
    if (name.empty() || name == "text") return Format::Text;
    if (name == "json") return Format::Json;
    if (name == "dot") return Format::Dot;
    if (name == "tikz") return Format::Tikz;
    throw input_error("unknown format '" + name + "' (expected text|json|dot|tikz)");
}

CmdResult cmd_check(const std::string& expr, Format fmt) {
    try {
        CurveData C = validate_expr(expr);
        if (fmt == Format::Json) {
            // the full analysis report
            Json j = json_curve_header(C);
            j["verdict"] = "accepted";
            const long long levels = 10, order = 20;
            JetGraph g = build_graph(C, levels);
            j["graph"] = json_graph(g);
            j["invariant"] = json_invariant(invariant(C));
            BivarRational G = series_G(C);
            j["series"] = json_series(C, G, series_parts(C));
            j["poles"] = json_poles(poles(C));
            Json oracle;
            oracle["order"] = order;
            oracle["match"] = truncate(G, order) == enumerate_series(C, order);
            j["oracle"] = oracle;
            return {0, dump(j), ""};
        }
        if (fmt != Format::Text) return usage("check supports text or json output");
        std::ostringstream os;
        os << "accepted: " << C.input_poly.to_string() << "\n";
        if (C.swapped) os << "analyzed in swapped coordinates (x<->y)\n";
        os << "newton polygon:";
        for (const LatticePoint& v : C.polygon.vertices) os << " " << to_string(v);
        os << "\n";
        for (const TropicalRay& r : C.rays)
            os << "ray " << r.index << ": " << to_string(r.primitive)
               << " branches=" << r.branch_count << " nu=" << r.nu_on_ray << " face poly "
               << r.face_poly.to_string() << "\n";
        return {0, os.str(), ""};
    } catch (const input_error& e) {
        return rejected(e);
    }
}

CmdResult cmd_polygon(const std::string& expr, Format fmt) {
    try {
        CurveData C = validate_expr(expr);
        if (fmt == Format::Json) {
            Json j = json_curve_header(C);
            return {0, dump(j), ""};
        }
        if (fmt != Format::Text) return usage("polygon supports text or json output");
        std::ostringstream os;
        os << text_header("newton polygon", C) << "\n";
        if (C.swapped) os << "analyzed in swapped coordinates (x<->y)\n";
        os << "vertices:";
        for (const LatticePoint& v : C.polygon.vertices) os << " " << to_string(v);
        os << "\n";
        for (const TropicalRay& r : C.rays) {
            os << "face " << r.index << ": " << to_string(C.polygon.vertices[r.index - 1])
               << " -> " << to_string(C.polygon.vertices[r.index]) << ", normal "
               << to_string(r.primitive) << ", lattice length " << r.branch_count
               << ", nu " << r.nu_on_ray << ", face poly " << r.face_poly.to_string() << "\n";
        }
        return {0, os.str(), ""};
    } catch (const input_error& e) {
        return rejected(e);
    }
}

CmdResult cmd_walk(long long p, long long q, Format fmt) {
    try {
        // dual case: the walk toward a ray below the diagonal is the mirror
        // image of the walk toward the reflected ray
        Walk w;
        if (p > q) {
            Walk m = staircase_walk(q, p, {0, 0});
            w.start = {m.start.y, m.start.x};
            for (Step s : m.steps)
                w.steps.push_back(s == Step::Vertical ? Step::Horizontal : Step::Vertical);
            for (LatticePoint pt : m.points) w.points.push_back({pt.y, pt.x});
        } else {
            w = staircase_walk(p, q, {0, 0});
        }
        if (fmt == Format::Json) return {0, dump(json_walk(w)), ""};
        if (fmt == Format::Tikz) return {0, tikz_walk(w, p, q), ""};
        if (fmt != Format::Text) return usage("walk supports text, json or tikz output");
        std::ostringstream os;
        for (std::size_t i = 0; i < w.points.size(); ++i)
            os << (i ? "," : "") << to_string(w.points[i]);
        os << "\n";
        return {0, os.str(), ""};
    } catch (const input_error& e) {
        return rejected(e);
    }
}

CmdResult cmd_graph(const std::string& expr, long long max_level, Format fmt) {
    if (!order_ok(max_level)) return usage("--max-level must lie in 1..10000");
    try {
        CurveData C = validate_expr(expr);
        JetGraph g = build_graph(C, max_level);
        std::ostringstream header;
        header << "jet component graph: " << C.input_poly.to_string() << " (levels 1.."
               << max_level << ")";
        switch (fmt) {
            case Format::Text:
                return {0, text_graph(C, g, header.str()), ""};
            case Format::Json: {
                Json j = json_curve_header(C);
                j["graph"] = json_graph(g);
                j["staircase"] = json_staircase(jsc_walk(C, max_level));
                return {0, dump(j), ""};
            }
            case Format::Dot:
                return {0, dot_graph(g, C.input_poly.to_string()), ""};
            case Format::Tikz:
                return {0, tikz_staircase(C, jsc_walk(C, max_level)), ""};
        }
        return usage("unreachable");
    } catch (const input_error& e) {
        return rejected(e);
    }
}

CmdResult cmd_series(const std::string& expr, long long truncate_to, Format fmt) {
    if (truncate_to != -1 && !order_ok(truncate_to))
        return usage("--truncate must lie in 1..10000");
    try {
        CurveData C = validate_expr(expr);
        BivarRational G = series_G(C);
        if (fmt == Format::Json) {
            Json j = json_curve_header(C);
            j["series"] = json_series(C, G, series_parts(C));
            if (truncate_to != -1)
                j["truncation"] = {{"order", truncate_to},
                                   {"terms", json_bivar_poly(truncate(G, truncate_to))}};
            return {0, dump(j), ""};
        }
        if (fmt != Format::Text) return usage("series supports text or json output");
        std::ostringstream os;
        os << text_header("generating series", C) << "\n";
        if (C.swapped) os << "analyzed in swapped coordinates (x<->y)\n";
        os << "G = " << G.to_string() << "\n";
        if (truncate_to != -1)
            os << "G mod v^" << truncate_to + 1 << " = "
               << truncate(G, truncate_to).to_string() << "\n";
        return {0, os.str(), ""};
    } catch (const input_error& e) {
        return rejected(e);
    }
}

CmdResult cmd_poles(const std::string& expr, Format fmt) {
    try {
        CurveData C = validate_expr(expr);
        PoleReport report = poles(C);
        if (fmt == Format::Json) {
            Json j = json_curve_header(C);
            j["poles"] = json_poles(report);
            return {0, dump(j), ""};
        }
        if (fmt != Format::Text) return usage("poles supports text or json output");
        std::ostringstream os;
        os << text_header("pole report", C) << "\n" << text_poles(report);
        return {0, os.str(), ""};
    } catch (const input_error& e) {
        return rejected(e);
    }
}

CmdResult cmd_compare(const std::string& expr1, const std::string& expr2, Format fmt) {
    try {
        CurveData a = validate_expr(expr1);
        CurveData b = validate_expr(expr2);
        TopoInvariant ia = invariant(a), ib = invariant(b);
        bool same = ia == ib;
        if (fmt == Format::Json) {
            Json j;
            j["schema"] = kSchemaTag;
            j["same_embedded_topological_type"] = same;
            j["first"] = {{"input", a.input_poly.to_string()},
                          {"invariant", json_invariant(ia)}};
            j["second"] = {{"input", b.input_poly.to_string()},
                          {"invariant", json_invariant(ib)}};
            return {0, dump(j), ""};
        }
        if (fmt != Format::Text) return usage("compare supports text or json output");
        std::ostringstream os;
        os << (same ? "same embedded topological type" : "different embedded topological type")
           << "\n";
        os << "first:  " << ia.to_string() << "\n";
        os << "second: " << ib.to_string() << "\n";
        return {0, os.str(), ""};
    } catch (const input_error& e) {
        return rejected(e);
    }
}

CmdResult cmd_oracle(const std::string& expr, long long truncate_to, Format fmt) {
    if (!order_ok(truncate_to)) return usage("--truncate must lie in 1..10000");
    try {
        CurveData C = validate_expr(expr);
        BivarPoly closed = truncate(series_G(C), truncate_to);
        BivarPoly enumerated = enumerate_series(C, truncate_to);
        bool match = closed == enumerated;
        std::string first_diff;
        if (!match) {
            BivarPoly diff = closed - enumerated;
            const auto& [e, c] = *diff.terms().begin();
            std::ostringstream os;
            os << "u^" << e.u << "v^" << e.v << ": closed form " << closed.coeff(e.u, e.v)
               << ", enumeration " << enumerated.coeff(e.u, e.v);
            first_diff = os.str();
        }
        if (fmt == Format::Json) {
            Json j = json_curve_header(C);
            j["order"] = truncate_to;
            j["match"] = match;
            j["terms"] = json_bivar_poly(closed);
            if (!match) j["first_mismatch"] = first_diff;
            return {match ? 0 : 1, dump(j), ""};
        }
        if (fmt != Format::Text) return usage("oracle supports text or json output");
        std::ostringstream os;
        os << text_header("series oracle", C) << "\n";
        if (match) {
            os << "closed form and enumeration agree to v^" << truncate_to << " ("
               << closed.terms().size() << " terms)\n";
            return {0, os.str(), ""};
        }
        os << "MISMATCH at " << first_diff << "\n";
        return {1, os.str(), ""};
    } catch (const input_error& e) {
        return rejected(e);
    }
}

}  // namespace newtonjet
