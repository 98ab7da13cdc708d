#pragma once

#include <string>

namespace newtonjet {

enum class Format { Text, Json, Dot, Tikz };

// returns Text when the name is empty, throws input_error otherwise
Format parse_format(const std::string& name);

// exit status 0: success, 1: rejected input or failed oracle, 2: usage error
struct CmdResult {
    int status = 0;
    std::string out;
    std::string err;
};

CmdResult cmd_check(const std::string& expr, Format fmt);
CmdResult cmd_polygon(const std::string& expr, Format fmt);
CmdResult cmd_walk(long long p, long long q, Format fmt);
CmdResult cmd_graph(const std::string& expr, long long max_level, Format fmt);
CmdResult cmd_series(const std::string& expr, long long truncate_to, Format fmt);  // -1: no truncation
CmdResult cmd_poles(const std::string& expr, Format fmt);
CmdResult cmd_compare(const std::string& expr1, const std::string& expr2, Format fmt);
CmdResult cmd_oracle(const std::string& expr, long long truncate_to, Format fmt);

}  // namespace newtonjet
