#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "superdom/families.hpp"
#include "superdom/gnp.hpp"
#include "superdom/graph.hpp"
#include "superdom/vertex_set.hpp"

using namespace superdom;

namespace {

Graph fam(FamilyKind k, int a, int b = 0) { return generate({k, a, b}); }

// Path iso-invariant: n-1 edges, connected, exactly two degree-1 ends and
// the rest degree 2 (complete characterization for n >= 2).
bool is_path_shaped(const Graph& g) {
    int n = g.order();
    if (n == 1) return g.edge_count() == 0;
    if (g.edge_count() != n - 1 || !g.connected()) return false;
    int ones = 0;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 1) ++ones;
        else if (d != 2) return false;
    }
    return ones == 2;
}

void check_invariants(const Graph& g) {
    for (int v = 0; v < g.order(); ++v) {
        REQUIRE_FALSE(g.neighbors(v).contains(v));
        g.neighbors(v).for_each([&](int u) { REQUIRE(g.neighbors(u).contains(v)); });
    }
}

}  // namespace

TEST_CASE("vertex set basics") {
    VertexSet s(6, {0, 2, 5});
    REQUIRE(s.size() == 3);
    REQUIRE(s.contains(2));
    REQUIRE_FALSE(s.contains(1));
    REQUIRE(s.complement() == VertexSet(6, {1, 3, 4}));
    REQUIRE((s & VertexSet(6, {2, 3})) == VertexSet(6, {2}));
    REQUIRE((s | VertexSet(6, {1})) == VertexSet(6, {0, 1, 2, 5}));
    REQUIRE(s.minus(VertexSet(6, {0})) == VertexSet(6, {2, 5}));
    REQUIRE(s.to_vector() == std::vector<int>{0, 2, 5});
    REQUIRE(s.to_string() == "{0,2,5}");
    REQUIRE(s.first() == 0);
    REQUIRE(VertexSet(4).first() == -1);
    REQUIRE_THROWS_AS(s.contains(6), std::out_of_range);
    REQUIRE_THROWS_AS(s.insert(-1), std::out_of_range);
    REQUIRE_THROWS_AS(s & VertexSet(5), std::invalid_argument);
}

TEST_CASE("vertex set spans multiple words") {
    VertexSet s(130);
    s.insert(0);
    s.insert(64);
    s.insert(129);
    REQUIRE(s.size() == 3);
    REQUIRE(s.complement().size() == 127);
    REQUIRE(s.to_vector() == std::vector<int>{0, 64, 129});
    VertexSet t(130, {64});
    REQUIRE(t.is_subset_of(s));
    REQUIRE_FALSE(s.is_subset_of(t));
}

TEST_CASE("vertex set sorted-sequence order") {
    auto vs = [](std::initializer_list<int> m) { return VertexSet(8, m); };
    REQUIRE(vs({0, 3}).lex_less(vs({1, 2})));
    REQUIRE_FALSE(vs({1, 2}).lex_less(vs({0, 3})));
    REQUIRE(vs({0, 1}).lex_less(vs({0, 2})));
    REQUIRE(vs({0}).lex_less(vs({0, 1})));        // proper prefix sorts first
    REQUIRE_FALSE(vs({0, 1}).lex_less(vs({0})));
    REQUIRE(vs({0, 1}).lex_less(vs({0, 2, 3})));
    REQUIRE_FALSE(vs({0, 2, 3}).lex_less(vs({0, 1})));
    REQUIRE_FALSE(vs({1, 5}).lex_less(vs({1, 5})));
    REQUIRE(vs({}).lex_less(vs({7})));
}

TEST_CASE("construction rejects non-simple input") {
    REQUIRE_THROWS_AS(Edge(2, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {Edge(0, 1), Edge(1, 0)}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(3, {Edge(0, 3)}), std::invalid_argument);
    REQUIRE_THROWS_AS(Graph(-1), std::invalid_argument);
    REQUIRE_THROWS_AS(Edge(-1, 2), std::invalid_argument);
}

TEST_CASE("neighbors and degree") {
    Graph c4 = fam(FamilyKind::cycle, 4);
    REQUIRE(c4.neighbors(0) == VertexSet(4, {1, 3}));

    Graph k4 = fam(FamilyKind::complete, 4);
    REQUIRE(k4.neighbors(2) == VertexSet(4, {0, 1, 3}));
    REQUIRE(k4.degree(1) == 3);

    Graph p3 = fam(FamilyKind::path, 3);
    REQUIRE(p3.neighbors(1) == VertexSet(3, {0, 2}));

    Graph f3 = fam(FamilyKind::friendship, 3);
    REQUIRE(f3.degree(0) == 6);  // hub of F_n has degree 2n

    Graph iso(2);
    REQUIRE(iso.degree(0) == 0);
    REQUIRE(iso.is_isolated(0));
    REQUIRE(fam(FamilyKind::path, 2).is_pendant(0));

    REQUIRE_THROWS_AS(c4.neighbors(4), std::out_of_range);
    REQUIRE_THROWS_AS(c4.degree(-1), std::out_of_range);
}

TEST_CASE("remove_edge") {
    Graph c14 = fam(FamilyKind::cycle, 14);
    Graph p = c14.remove_edge(Edge(0, 13));
    REQUIRE(p.order() == 14);
    REQUIRE(p.edge_count() == 13);
    REQUIRE(is_path_shaped(p));

    Graph k3 = fam(FamilyKind::complete, 3);
    REQUIRE(k3.remove_edge(Edge(0, 1)) == Graph(3, {Edge(0, 2), Edge(1, 2)}));

    Graph p2 = fam(FamilyKind::path, 2);
    Graph empty2 = p2.remove_edge(Edge(0, 1));
    REQUIRE(empty2.edge_count() == 0);
    REQUIRE(empty2.order() == 2);

    REQUIRE_THROWS_AS(c14.remove_edge(Edge(0, 2)), std::invalid_argument);
}

TEST_CASE("contract_edge") {
    Graph p12 = fam(FamilyKind::path, 12);
    Graph p11 = p12.contract_edge(Edge(5, 6));
    REQUIRE(p11.order() == 11);
    REQUIRE(is_path_shaped(p11));
    REQUIRE(p11 == fam(FamilyKind::path, 11));  // interior contraction relabels to the canonical path

    REQUIRE(fam(FamilyKind::complete, 3).contract_edge(Edge(1, 2)) ==
            fam(FamilyKind::complete, 2));
    REQUIRE(fam(FamilyKind::cycle, 4).contract_edge(Edge(0, 1)) == fam(FamilyKind::cycle, 3));

    // merged vertex sits at min(u,v): contracting 2-3 in 0-1-2-3 keeps 0,1,2
    Graph p4 = fam(FamilyKind::path, 4);
    REQUIRE(p4.contract_edge(Edge(2, 3)) == fam(FamilyKind::path, 3));

    REQUIRE_THROWS_AS(p4.contract_edge(Edge(0, 2)), std::invalid_argument);
}

TEST_CASE("remove_vertex") {
    Graph p5 = fam(FamilyKind::path, 5);
    REQUIRE(p5.remove_vertex(4) == fam(FamilyKind::path, 4));
    REQUIRE(p5.remove_vertex(0) == fam(FamilyKind::path, 4));

    Graph k5 = fam(FamilyKind::complete, 5);
    REQUIRE(k5.remove_vertex(2) == fam(FamilyKind::complete, 4));

    Graph star = fam(FamilyKind::star, 3);
    Graph rest = star.remove_vertex(0);
    REQUIRE(rest.order() == 3);
    REQUIRE(rest.edge_count() == 0);

    REQUIRE_THROWS_AS(p5.remove_vertex(5), std::out_of_range);
}

TEST_CASE("contract_vertex") {
    // friendship hub contraction gives a complete graph on the former leaves
    for (int n = 1; n <= 4; ++n) {
        Graph f = fam(FamilyKind::friendship, n + 2);
        REQUIRE(f.contract_vertex(0) == fam(FamilyKind::complete, 2 * n + 4));
    }

    // star pendant contraction peels one leaf
    Graph star4 = fam(FamilyKind::star, 4);
    REQUIRE(star4.contract_vertex(4) == fam(FamilyKind::star, 3));

    // P_5 / v1 (non-pendant) is P_4
    Graph p5 = fam(FamilyKind::path, 5);
    REQUIRE(p5.contract_vertex(1) == fam(FamilyKind::path, 4));

    // degree-0 contraction behaves exactly as removal
    Graph g(3, {Edge(0, 1)});
    REQUIRE(g.contract_vertex(2) == g.remove_vertex(2));

    REQUIRE_THROWS_AS(p5.contract_vertex(9), std::out_of_range);
}

TEST_CASE("components") {
    REQUIRE(fam(FamilyKind::path, 3).components() ==
            std::vector<VertexSet>{VertexSet(3, {0, 1, 2})});

    Graph two(4, {Edge(0, 1), Edge(2, 3)});
    REQUIRE(two.components() == std::vector<VertexSet>{VertexSet(4, {0, 1}), VertexSet(4, {2, 3})});

    Graph empty3(3);
    REQUIRE(empty3.components() ==
            std::vector<VertexSet>{VertexSet(3, {0}), VertexSet(3, {1}), VertexSet(3, {2})});

    Graph interleaved(4, {Edge(0, 2), Edge(1, 3)});
    REQUIRE(interleaved.components() ==
            std::vector<VertexSet>{VertexSet(4, {0, 2}), VertexSet(4, {1, 3})});
}

TEST_CASE("operators preserve simplicity and decrement order deterministically") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = gnp(9, 0.4, seed);
        check_invariants(g);
        for (const Edge& e : g.edges()) {
            Graph r = g.remove_edge(e);
            check_invariants(r);
            REQUIRE(r.order() == g.order());
            REQUIRE(r.edge_count() == g.edge_count() - 1);
            REQUIRE(r.add_edge(e) == g);  // remove then re-add round-trips

            Graph c = g.contract_edge(e);
            check_invariants(c);
            REQUIRE(c.order() == g.order() - 1);
            REQUIRE(c == g.contract_edge(e));  // equal inputs, equal outputs
        }
        for (int v = 0; v < g.order(); ++v) {
            Graph r = g.remove_vertex(v);
            check_invariants(r);
            REQUIRE(r.order() == g.order() - 1);

            Graph c = g.contract_vertex(v);
            check_invariants(c);
            REQUIRE(c.order() == g.order() - 1);

            // images of N(v) form a clique
            std::vector<int> nb = g.neighbors(v).to_vector();
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    int a = nb[i] > v ? nb[i] - 1 : nb[i];
                    int b = nb[j] > v ? nb[j] - 1 : nb[j];
                    REQUIRE(c.has_edge(a, b));
                }
        }
    }
}
