// newtonjet: exact invariants of Newton non-degenerate plane curve
// singularities: Newton polygon and tropical rays, jet component graphs and
// their staircase representation, embedded-topological-type comparison, and
// the bivariate generating series with certified poles.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "newtonjet/cli.hpp"
#include "newtonjet/errors.hpp"

namespace {

std::string read_expr(const std::string& inline_expr, const std::string& path) {
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw newtonjet::input_error("cannot open input file " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    return inline_expr;
}

int emit(const newtonjet::CmdResult& r) {
    if (!r.out.empty()) std::cout << r.out;
    if (!r.err.empty()) std::cerr << r.err;
    return r.status;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace newtonjet;

    CLI::App app{"exact jet-scheme and generating-series invariants of plane curve "
                 "singularities"};
    app.require_subcommand(1);

    std::string format_name;
    const char* env_format = std::getenv("NEWTONJET_FORMAT");
    if (env_format != nullptr) format_name = env_format;
    app.add_option("--format", format_name, "output format: text|json|dot|tikz")
        ->capture_default_str();

    std::string expr, expr2, file;
    long long p = 0, q = 0, max_level = 8, truncate_to = -1, oracle_to = 40;

    auto add_expr = [&](CLI::App* cmd) {
        cmd->add_option("expr", expr, "curve polynomial in x,y");
        cmd->add_option("-f,--file", file, "read the polynomial from a file");
    };
    app.fallthrough();  // let --format appear after the subcommand

    CLI::App* c_check = app.add_subcommand("check", "validate a curve and report its data");
    add_expr(c_check);
    CLI::App* c_polygon = app.add_subcommand("polygon", "newton polygon and tropical rays");
    add_expr(c_polygon);
    CLI::App* c_walk = app.add_subcommand("walk", "staircase walk attracted by the ray (p,q)");
    c_walk->add_option("p", p, "ray x-component")->required();
    c_walk->add_option("q", q, "ray y-component")->required();
    CLI::App* c_graph = app.add_subcommand("graph", "jet component graph by level");
    add_expr(c_graph);
    c_graph->add_option("--max-level", max_level, "highest level to compute")
        ->capture_default_str();
    CLI::App* c_series = app.add_subcommand("series", "generating series G(u,v)");
    add_expr(c_series);
    c_series->add_option("--truncate", truncate_to, "also print G modulo v^(M+1)");
    CLI::App* c_poles = app.add_subcommand("poles", "pole families of G with certificates");
    add_expr(c_poles);
    CLI::App* c_compare =
        app.add_subcommand("compare", "decide embedded-topological-type equality");
    c_compare->add_option("expr1", expr2, "first curve")->required();
    std::string expr3;
    c_compare->add_option("expr2", expr3, "second curve")->required();
    CLI::App* c_oracle =
        app.add_subcommand("oracle", "cross-check the closed form against enumeration");
    add_expr(c_oracle);
    c_oracle->add_option("--truncate", oracle_to, "comparison order")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Format fmt = parse_format(format_name);
        if (c_check->parsed()) return emit(cmd_check(read_expr(expr, file), fmt));
        if (c_polygon->parsed()) return emit(cmd_polygon(read_expr(expr, file), fmt));
        if (c_walk->parsed()) return emit(cmd_walk(p, q, fmt));
        if (c_graph->parsed()) return emit(cmd_graph(read_expr(expr, file), max_level, fmt));
        if (c_series->parsed())
            return emit(cmd_series(read_expr(expr, file), truncate_to, fmt));
        if (c_poles->parsed()) return emit(cmd_poles(read_expr(expr, file), fmt));
        if (c_compare->parsed()) return emit(cmd_compare(expr2, expr3, fmt));
        if (c_oracle->parsed()) return emit(cmd_oracle(read_expr(expr, file), oracle_to, fmt));
    } catch (const input_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
