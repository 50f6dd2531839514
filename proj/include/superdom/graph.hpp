#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superdom/vertex_set.hpp"

namespace superdom {

// Undirected edge in canonical order (u < v). Loops are rejected here so
// they cannot reach Graph construction.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b) throw std::invalid_argument("Edge: loop at vertex " + std::to_string(a));
        if (u < 0) throw std::invalid_argument("Edge: negative vertex id");
    }

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

// Immutable simple undirected graph on vertices 0..n-1. Construction
// validates simplicity (no loops, no duplicate edges, endpoints in range);
// all modification operators return new graphs built through the same
// checked path.
class Graph {
public:
    explicit Graph(int n, std::span<const Edge> edge_list = {}) : n_(n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
        std::set<Edge> seen;
        for (const Edge& e : edge_list) {
            if (e.v >= n_)
                throw std::invalid_argument("Graph: edge endpoint " + std::to_string(e.v) +
                                            " out of range for n=" + std::to_string(n_));
            if (!seen.insert(e).second)
                throw std::invalid_argument("Graph: duplicate edge " + std::to_string(e.u) + "-" +
                                            std::to_string(e.v));
            adj_[e.u].insert(e.v);
            adj_[e.v].insert(e.u);
        }
        edge_count_ = static_cast<int>(seen.size());
    }

    Graph(int n, std::initializer_list<Edge> edge_list)
        : Graph(n, std::span<const Edge>(edge_list.begin(), edge_list.end())) {}

    int order() const { return n_; }
    int edge_count() const { return edge_count_; }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    VertexSet closed_neighborhood(int v) const {
        VertexSet s = neighbors(v);
        s.insert(v);
        return s;
    }

    int degree(int v) const { return neighbors(v).size(); }
    bool is_pendant(int v) const { return degree(v) == 1; }
    bool is_isolated(int v) const { return degree(v) == 0; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].contains(v);
    }

    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    // Edges in canonical sorted order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    // G - e
    Graph remove_edge(const Edge& e) const {
        require_edge(e);
        std::vector<Edge> kept;
        kept.reserve(edge_count_ - 1);
        for (const Edge& f : edges())
            if (!(f == e)) kept.push_back(f);
        return Graph(n_, kept);
    }

    // G + e (inverse of remove_edge, used by round-trip checks)
    Graph add_edge(const Edge& e) const {
        if (e.v >= n_) throw std::invalid_argument("add_edge: endpoint out of range");
        if (has_edge(e)) throw std::invalid_argument("add_edge: edge already present");
        std::vector<Edge> all = edges();
        all.push_back(e);
        return Graph(n_, all);
    }

    // G / e: endpoints merge into index min(u,v); vertices above max(u,v)
    // shift down by one. Parallel edges collapse because adjacency is a set.
    Graph contract_edge(const Edge& e) const {
        require_edge(e);
        const int keep = e.u, gone = e.v;
        auto relabel = [&](int w) { return w > gone ? w - 1 : w; };
        std::set<Edge> out;
        for (const Edge& f : edges()) {
            if (f == e) continue;
            int a = f.u == gone ? keep : f.u;
            int b = f.v == gone ? keep : f.v;
            if (a == b) continue;  // second copy of the contracted edge cannot occur; guard anyway
            out.emplace(relabel(a), relabel(b));
        }
        return Graph(n_ - 1, std::vector<Edge>(out.begin(), out.end()));
    }

    // G - v: drop v and its incident edges; vertices above v shift down.
    Graph remove_vertex(int v) const {
        check_vertex(v);
        auto relabel = [&](int w) { return w > v ? w - 1 : w; };
        std::vector<Edge> out;
        for (const Edge& f : edges())
            if (f.u != v && f.v != v) out.emplace_back(relabel(f.u), relabel(f.v));
        return Graph(n_ - 1, out);
    }

    // G / v: delete v and put a clique on N(v). Already-adjacent neighbours
    // stay simply adjacent; a degree-0 vertex behaves as remove_vertex.
    Graph contract_vertex(int v) const {
        check_vertex(v);
        auto relabel = [&](int w) { return w > v ? w - 1 : w; };
        std::set<Edge> out;
        for (const Edge& f : edges())
            if (f.u != v && f.v != v) out.emplace(relabel(f.u), relabel(f.v));
        std::vector<int> nb = adj_[v].to_vector();
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                out.emplace(relabel(nb[i]), relabel(nb[j]));
        return Graph(n_ - 1, std::vector<Edge>(out.begin(), out.end()));
    }

    // Connected components as sorted vertex sets, ordered by smallest member.
    std::vector<VertexSet> components() const {
        std::vector<VertexSet> out;
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        std::vector<int> stack;
        for (int s = 0; s < n_; ++s) {
            if (seen[s]) continue;
            VertexSet comp(n_);
            stack.push_back(s);
            seen[s] = true;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                comp.insert(u);
                adj_[u].for_each([&](int w) {
                    if (!seen[w]) {
                        seen[w] = true;
                        stack.push_back(w);
                    }
                });
            }
            out.push_back(std::move(comp));
        }
        return out;
    }

    bool connected() const { return n_ <= 1 || components().size() == 1; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(n_));
    }

    void require_edge(const Edge& e) const {
        if (!has_edge(e))
            throw std::invalid_argument("Graph: edge " + std::to_string(e.u) + "-" +
                                        std::to_string(e.v) + " not in graph");
    }

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

}  // namespace superdom
