#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "newtonjet/jetgraph.hpp"
#include "newtonjet/series.hpp"
#include "newtonjet/topo.hpp"

// JSON / DOT / TikZ writers. All output is deterministic: containers are
// ordered and json objects preserve insertion order.

namespace newtonjet {

using Json = nlohmann::ordered_json;

extern const char* const kSchemaTag;  // "newtonjet/1"

Json json_lattice_point(LatticePoint p);
Json json_walk(const Walk& w);
Json json_polygon(const CurveData& C);
Json json_curve_header(const CurveData& C);  // input echo, swap flag, polygon, rays
Json json_graph(const JetGraph& g);
Json json_staircase(const StaircaseRepr& repr);
Json json_invariant(const TopoInvariant& inv);
Json json_rational(const BivarRational& r);
Json json_series(const CurveData& C, const BivarRational& g, const SeriesParts& parts);
Json json_poles(const PoleReport& report);
Json json_bivar_poly(const BivarPoly& p);

std::string dot_graph(const JetGraph& g, const std::string& title);

std::string tikz_walk(const Walk& w, long long p, long long q);
std::string tikz_staircase(const CurveData& C, const StaircaseRepr& repr);

std::string text_graph(const CurveData& C, const JetGraph& g, const std::string& header);
std::string text_poles(const PoleReport& report);

}  // namespace newtonjet
