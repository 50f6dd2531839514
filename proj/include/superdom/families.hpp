#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "superdom/graph.hpp"

namespace superdom {

enum class FamilyKind {
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    friendship,
    dutch_windmill,
};

// Tagged description of a generated family instance. Text form is what the
// CLI accepts: path:7, cycle:14, complete:5, kbip:2,3, star:6, friendship:4,
// dutch:2,8.
struct FamilySpec {
    FamilyKind kind;
    int a = 0;  // n for every family
    int b = 0;  // m for kbip / dutch

    void validate() const {
        switch (kind) {
            case FamilyKind::path:
            case FamilyKind::complete:
            case FamilyKind::star:
            case FamilyKind::friendship:
                if (a < 1) throw std::invalid_argument(to_string() + ": n must be >= 1");
                break;
            case FamilyKind::cycle:
                if (a < 3) throw std::invalid_argument(to_string() + ": cycle needs n >= 3");
                break;
            case FamilyKind::complete_bipartite:
                if (a < 1 || b < 1)
                    throw std::invalid_argument(to_string() + ": parts must be >= 1");
                break;
            case FamilyKind::dutch_windmill:
                if (a < 1) throw std::invalid_argument(to_string() + ": n must be >= 1");
                if (b < 3) throw std::invalid_argument(to_string() + ": cycle length m must be >= 3");
                break;
        }
    }

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const FamilySpec&) const = default;
};

inline std::string_view family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::complete: return "complete";
        case FamilyKind::complete_bipartite: return "kbip";
        case FamilyKind::star: return "star";
        case FamilyKind::friendship: return "friendship";
        case FamilyKind::dutch_windmill: return "dutch";
    }
    return "?";
}

inline std::string FamilySpec::to_string() const {
    std::string s{family_name(kind)};
    s += ':';
    s += std::to_string(a);
    if (kind == FamilyKind::complete_bipartite || kind == FamilyKind::dutch_windmill) {
        s += ',';
        s += std::to_string(b);
    }
    return s;
}

inline FamilySpec FamilySpec::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("family spec '" + std::string(text) + "': expected kind:params");
    std::string_view name = text.substr(0, colon);
    std::string_view params = text.substr(colon + 1);

    FamilySpec spec{};
    bool two_params = false;
    if (name == "path") spec.kind = FamilyKind::path;
    else if (name == "cycle") spec.kind = FamilyKind::cycle;
    else if (name == "complete") spec.kind = FamilyKind::complete;
    else if (name == "star") spec.kind = FamilyKind::star;
    else if (name == "friendship") spec.kind = FamilyKind::friendship;
    else if (name == "kbip") { spec.kind = FamilyKind::complete_bipartite; two_params = true; }
    else if (name == "dutch") { spec.kind = FamilyKind::dutch_windmill; two_params = true; }
    else throw std::invalid_argument("family spec: unknown kind '" + std::string(name) + "'");

    auto parse_int = [&](std::string_view tok) {
        if (tok.empty()) throw std::invalid_argument("family spec: empty parameter");
        int value = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("family spec: bad integer '" + std::string(tok) + "'");
            if (value > 100000000) throw std::invalid_argument("family spec: parameter too large");
            value = value * 10 + (c - '0');
        }
        return value;
    };

    auto comma = params.find(',');
    if (two_params) {
        if (comma == std::string_view::npos)
            throw std::invalid_argument("family spec '" + std::string(text) + "': expected two parameters");
        spec.a = parse_int(params.substr(0, comma));
        spec.b = parse_int(params.substr(comma + 1));
    } else {
        if (comma != std::string_view::npos)
            throw std::invalid_argument("family spec '" + std::string(text) + "': expected one parameter");
        spec.a = parse_int(params);
    }
    spec.validate();
    return spec;
}

// Canonical labelings: paths/cycles are consecutive; kbip parts are
// {0..n-1} and {n..n+m-1}; star center is 0; friendship/dutch hub is 0
// with copies laid out in order.
inline Graph generate(const FamilySpec& spec) {
    spec.validate();
    std::vector<Edge> edges;
    switch (spec.kind) {
        case FamilyKind::path: {
            for (int i = 0; i + 1 < spec.a; ++i) edges.emplace_back(i, i + 1);
            return Graph(spec.a, edges);
        }
        case FamilyKind::cycle: {
            for (int i = 0; i < spec.a; ++i) edges.emplace_back(i, (i + 1) % spec.a);
            return Graph(spec.a, edges);
        }
        case FamilyKind::complete: {
            for (int i = 0; i < spec.a; ++i)
                for (int j = i + 1; j < spec.a; ++j) edges.emplace_back(i, j);
            return Graph(spec.a, edges);
        }
        case FamilyKind::complete_bipartite: {
            for (int i = 0; i < spec.a; ++i)
                for (int j = 0; j < spec.b; ++j) edges.emplace_back(i, spec.a + j);
            return Graph(spec.a + spec.b, edges);
        }
        case FamilyKind::star:
            return generate({FamilyKind::complete_bipartite, 1, spec.a});
        case FamilyKind::friendship:
            return generate({FamilyKind::dutch_windmill, spec.a, 3});
        case FamilyKind::dutch_windmill: {
            const int m = spec.b;
            for (int i = 0; i < spec.a; ++i) {
                int base = 1 + (m - 1) * i;
                edges.emplace_back(0, base);
                for (int j = 0; j + 1 < m - 1; ++j) edges.emplace_back(base + j, base + j + 1);
                edges.emplace_back(base + m - 2, 0);
            }
            return Graph(spec.a * (m - 1) + 1, edges);
        }
    }
    throw std::logic_error("generate: unreachable");
}

enum class FormulaSource {
    published,  // value given by a published closed form
    extension,  // value established by exact solve outside the published formulas
};

struct ClosedForm {
    int value;
    FormulaSource source;

    bool operator==(const ClosedForm&) const = default;
};

inline int ceil_div(int num, int den) { return (num + den - 1) / den; }

// Exact gamma_sp where a closed form (or a solver-established extension for
// the small/star cases the formulas do not cover) exists. Even-m Dutch
// windmills have only an upper bound, so this returns nullopt for them.
// Note the complete-bipartite formula n+m-2 requires both parts >= 2; stars
// K_{1,m} have gamma_sp = m (K_{1,2} = P_3 already shows n+m-2 fails there).
inline std::optional<ClosedForm> closed_form_gamma_sp(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::path:
            if (spec.a >= 3) return ClosedForm{ceil_div(spec.a, 2), FormulaSource::published};
            return ClosedForm{1, FormulaSource::extension};  // P_1, P_2
        case FamilyKind::cycle: {
            int r = spec.a % 4;
            int value = (r == 0 || r == 3) ? ceil_div(spec.a, 2) : ceil_div(spec.a + 1, 2);
            return ClosedForm{value, FormulaSource::published};
        }
        case FamilyKind::complete:
            if (spec.a >= 2) return ClosedForm{spec.a - 1, FormulaSource::published};
            return ClosedForm{1, FormulaSource::extension};  // K_1 is edgeless
        case FamilyKind::complete_bipartite: {
            if (spec.a >= 2 && spec.b >= 2)
                return ClosedForm{spec.a + spec.b - 2, FormulaSource::published};
            return ClosedForm{std::max(spec.a, spec.b), FormulaSource::extension};
        }
        case FamilyKind::star:
            return ClosedForm{spec.a, FormulaSource::extension};
        case FamilyKind::friendship:
            return ClosedForm{spec.a + 1, FormulaSource::published};
        case FamilyKind::dutch_windmill: {
            if (spec.b % 2 == 1)  // odd m: bound attained; m=3 is the friendship value
                return ClosedForm{spec.a * (spec.b - 1) / 2 + 1, FormulaSource::published};
            return std::nullopt;
        }
    }
    throw std::logic_error("closed_form_gamma_sp: unreachable");
}

// Upper bound n*ceil((m-1)/2)+1 for D_n^(m). Hypothesis m >= 4.
inline int dutch_upper_bound(int n, int m) {
    if (n < 1) throw std::invalid_argument("dutch_upper_bound: n must be >= 1");
    if (m < 4) throw std::invalid_argument("dutch_upper_bound: bound requires m >= 4");
    return n * ceil_div(m - 1, 2) + 1;
}

struct Theorem1Bounds {
    int lower;  // ceil(n/2)
    int upper;  // n-1

    bool operator==(const Theorem1Bounds&) const = default;
};

// ceil(n/2) <= gamma_sp(G) <= n-1 for graphs with at least one edge.
inline Theorem1Bounds theorem1_bounds(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("theorem1_bounds: graph has no edges");
    return {ceil_div(g.order(), 2), g.order() - 1};
}

}  // namespace superdom
