#pragma once

#include <cstdio>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superdom/graph.hpp"
#include "superdom/theorems.hpp"

namespace superdom {

struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline int parse_nonneg(std::string_view tok, int line, const char* what) {
    if (tok.empty() || tok.size() > 9) throw ParseError(line, std::string(what) + ": bad integer '" + std::string(tok) + "'");
    int v = 0;
    for (char c : tok) {
        if (c < '0' || c > '9')
            throw ParseError(line, std::string(what) + ": bad integer '" + std::string(tok) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

template <typename LineFn>
inline void for_each_line(std::string_view text, LineFn&& fn) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                              : nl - pos);
        ++line_no;
        fn(line, line_no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

}  // namespace detail

// Native edge-list format: '#' starts a comment anywhere; the first
// non-comment line is the vertex count; every further line is "u v" with
// 0-based endpoints. Loops, duplicates and out-of-range endpoints are
// rejected with their line number.
inline Graph parse_edge_list(std::string_view text) {
    std::optional<int> n;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    detail::for_each_line(text, [&](std::string_view raw, int line_no) {
        std::string_view line = raw.substr(0, raw.find('#'));
        auto toks = detail::split_ws(line);
        if (toks.empty()) return;
        if (!n) {
            if (toks.size() != 1) throw ParseError(line_no, "expected a single vertex count");
            n = detail::parse_nonneg(toks[0], line_no, "vertex count");
            return;
        }
        if (toks.size() != 2)
            throw ParseError(line_no, "expected 'u v', got " + std::to_string(toks.size()) +
                                          " tokens");
        int u = detail::parse_nonneg(toks[0], line_no, "endpoint");
        int v = detail::parse_nonneg(toks[1], line_no, "endpoint");
        if (u == v) throw ParseError(line_no, "loop edge " + std::to_string(u) + " " + std::to_string(v));
        if (u >= *n || v >= *n)
            throw ParseError(line_no, "endpoint " + std::to_string(std::max(u, v)) +
                                          " >= vertex count " + std::to_string(*n));
        Edge e(u, v);
        if (!seen.insert(e).second)
            throw ParseError(line_no, "duplicate edge " + std::to_string(e.u) + " " +
                                          std::to_string(e.v));
        edges.push_back(e);
    });

    if (!n) throw ParseError(1, "missing vertex count");
    return Graph(*n, edges);
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << '\n';
    for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

struct DimacsResult {
    Graph graph{0};
    std::vector<std::string> warnings;
};

// DIMACS undirected format: 'c' comments, one 'p edge <n> <m>' line, then
// 'e <u> <v>' lines with 1-based endpoints. Duplicate edges are dropped
// with a warning; structural problems are errors.
inline DimacsResult parse_dimacs(std::string_view text) {
    std::optional<int> n;
    int declared_edges = 0;
    int edge_lines = 0;  // raw 'e' lines; duplicates count toward the declared total
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::vector<std::string> warnings;

    detail::for_each_line(text, [&](std::string_view raw, int line_no) {
        auto toks = detail::split_ws(raw);
        if (toks.empty() || toks[0] == "c") return;
        if (toks[0] == "p") {
            if (n) throw ParseError(line_no, "duplicate 'p' line");
            if (toks.size() != 4 || toks[1] != "edge")
                throw ParseError(line_no, "expected 'p edge <n> <m>'");
            n = detail::parse_nonneg(toks[2], line_no, "vertex count");
            declared_edges = detail::parse_nonneg(toks[3], line_no, "edge count");
            return;
        }
        if (toks[0] == "e") {
            if (!n) throw ParseError(line_no, "'e' line before 'p' line");
            if (toks.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
            int u = detail::parse_nonneg(toks[1], line_no, "endpoint");
            int v = detail::parse_nonneg(toks[2], line_no, "endpoint");
            if (u < 1 || u > *n || v < 1 || v > *n)
                throw ParseError(line_no, "endpoint outside 1.." + std::to_string(*n));
            if (u == v) throw ParseError(line_no, "loop edge " + std::to_string(u));
            ++edge_lines;
            Edge e(u - 1, v - 1);
            if (!seen.insert(e).second) {
                warnings.push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                                   std::to_string(u) + " " + std::to_string(v) + " ignored");
                return;
            }
            edges.push_back(e);
            return;
        }
        throw ParseError(line_no, "unrecognized line type '" + std::string(toks[0]) + "'");
    });

    if (!n) throw ParseError(1, "missing 'p' line");
    if (declared_edges != edge_lines)
        warnings.push_back("declared " + std::to_string(declared_edges) + " edges, found " +
                           std::to_string(edge_lines));
    return {Graph(*n, edges), std::move(warnings)};
}

namespace detail {

// Report values are integers or exact halves; print "7" or "6.5".
inline std::string fmt_value(double v) {
    long long i = static_cast<long long>(v);
    if (v == static_cast<double>(i)) return std::to_string(i);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

}  // namespace detail

// One self-describing record per line, stable key order.
inline std::string write_report(std::span<const BoundReport> reports) {
    std::ostringstream os;
    os << "# superdom bound report: " << reports.size() << " record(s)\n";
    for (const BoundReport& r : reports) {
        os << "theorem_id=" << to_string(r.theorem_id)
           << " operand=" << r.operand.to_string()
           << " lhs=" << detail::fmt_value(r.lhs)
           << " middle=" << detail::fmt_value(r.middle)
           << " rhs=" << detail::fmt_value(r.rhs)
           << " holds=" << (r.holds ? "true" : "false")
           << " sharp_low=" << (r.sharp_low ? "true" : "false")
           << " sharp_high=" << (r.sharp_high ? "true" : "false");
        if (r.isolated_fallback) os << " note=isolated-vertex-fallback";
        os << '\n';
    }
    return os.str();
}

// Aligned table plus per-theorem tallies.
inline std::string write_report_table(std::span<const BoundReport> reports) {
    std::ostringstream os;
    char buf[160];
    os << "theorem                        operand      lhs    middle rhs    holds sharp\n";
    int held = 0, low = 0, high = 0;
    for (const BoundReport& r : reports) {
        std::string sharp;
        if (r.sharp_low) sharp += "low";
        if (r.sharp_high) sharp += sharp.empty() ? "high" : ",high";
        if (sharp.empty()) sharp = "-";
        if (r.isolated_fallback) sharp += " (isolated-vertex-fallback)";
        std::snprintf(buf, sizeof(buf), "%-30s %-12s %-6s %-6s %-6s %-5s %s\n",
                      std::string(to_string(r.theorem_id)).c_str(),
                      r.operand.to_string().c_str(), detail::fmt_value(r.lhs).c_str(),
                      detail::fmt_value(r.middle).c_str(), detail::fmt_value(r.rhs).c_str(),
                      r.holds ? "yes" : "NO", sharp.c_str());
        os << buf;
        held += r.holds;
        low += r.sharp_low;
        high += r.sharp_high;
    }
    os << "-- " << reports.size() << " report(s): " << held << " hold, " << low << " sharp_low, "
       << high << " sharp_high\n";
    return os.str();
}

}  // namespace superdom
