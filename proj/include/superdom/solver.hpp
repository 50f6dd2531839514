#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "superdom/graph.hpp"
#include "superdom/vertex_set.hpp"

namespace superdom {

// S dominates G iff every vertex outside S has a neighbour in S. S = V is
// vacuously dominating.
inline bool is_dominating(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("is_dominating: set universe does not match graph");
    bool ok = true;
    s.complement().for_each([&](int u) {
        if (ok && (g.neighbors(u) & s).empty()) ok = false;
    });
    return ok;
}

// S is super dominating iff every u outside S has a private external
// dominator: some v in S with N(v) ∩ S̄ = {u}. One pass over S marks the
// vertices singled out this way; S qualifies iff all of S̄ is marked.
// Implies is_dominating.
inline bool is_super_dominating(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("is_super_dominating: set universe does not match graph");
    const VertexSet sbar = s.complement();
    VertexSet marked(g.order());
    s.for_each([&](int v) {
        VertexSet hit = g.neighbors(v) & sbar;
        if (hit.size() == 1) marked |= hit;
    });
    return marked == sbar;
}

struct SolverLimitExceeded : std::runtime_error {
    SolverLimitExceeded(int component_size_, int limit_)
        : std::runtime_error("solver limit exceeded: component of " +
                             std::to_string(component_size_) + " vertices, limit " +
                             std::to_string(limit_)),
          component_size(component_size_),
          limit(limit_) {}
    int component_size;
    int limit;
};

struct SolveOptions {
    int component_limit = 28;  // largest component the exact search accepts
    int workers = 1;           // threads for fixed-size subset enumeration
};

struct SolveResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t subsets_examined = 0;
    std::string strategy;
};

namespace detail {

// Components are solved on single-word bitmasks; 64 is the structural cap
// independent of the configurable limit.
inline constexpr int kMaxComponentVertices = 64;

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;  // C(63,31)*64 overflows 64 bits mid-product
    for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(r);
}

// Next k-subset mask in colexicographic order (Gosper).
inline std::uint64_t next_same_popcount(std::uint64_t x) {
    std::uint64_t c = x & (~x + 1);
    std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

// Subset of given size at a colex rank, via the combinatorial number system.
inline std::uint64_t unrank_colex(std::uint64_t rank, int size) {
    std::uint64_t mask = 0;
    for (int k = size; k >= 1; --k) {
        int c = k - 1;
        while (binomial(c + 1, k) <= rank) ++c;
        mask |= std::uint64_t{1} << c;
        rank -= binomial(c, k);
    }
    return mask;
}

// Strictly-less on equal-size subsets viewed as sorted vertex sequences:
// the owner of the lowest differing bit comes first.
inline bool lex_less_mask(std::uint64_t a, std::uint64_t b) {
    std::uint64_t d = a ^ b;
    if (!d) return false;
    return a & (d & (~d + 1));
}

struct ComponentGraph {
    int n = 0;
    std::uint64_t all = 0;
    std::vector<std::uint64_t> nbr;   // local adjacency masks
    std::vector<int> vertices;        // local index -> global vertex id

    ComponentGraph(const Graph& g, const VertexSet& comp) {
        vertices = comp.to_vector();
        n = static_cast<int>(vertices.size());
        all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        std::vector<int> local(g.order(), -1);
        for (int i = 0; i < n; ++i) local[vertices[i]] = i;
        nbr.assign(n, 0);
        for (int i = 0; i < n; ++i)
            g.neighbors(vertices[i]).for_each([&](int w) {
                nbr[i] |= std::uint64_t{1} << local[w];
            });
    }

    // Complement-side feasibility: sbar admits S = V_c - sbar iff every
    // member of sbar is the entire trace of some outside vertex's
    // neighbourhood on sbar.
    bool complement_feasible(std::uint64_t sbar) const {
        std::uint64_t marked = 0;
        std::uint64_t m = all & ~sbar;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            std::uint64_t hit = nbr[v] & sbar;
            if (hit && (hit & (hit - 1)) == 0) marked |= hit;
        }
        return marked == sbar;
    }

    bool dominating(std::uint64_t d) const {
        std::uint64_t covered = d;
        std::uint64_t m = d;
        while (m) {
            covered |= nbr[std::countr_zero(m)];
            m &= m - 1;
        }
        return covered == all;
    }
};

// Scan every size-k complement in colex order, keeping the feasible
// candidate whose S side is lexicographically smallest. Workers split the
// rank space into contiguous blocks; the reduction is order-independent, so
// the result does not depend on the worker count.
inline bool scan_complements(const ComponentGraph& cg, int k, int workers,
                             std::uint64_t& best_s) {
    const std::uint64_t total = binomial(cg.n, k);
    if (k == 0) {
        best_s = cg.all;
        return true;  // empty complement is vacuously feasible
    }
    struct Slot {
        bool found = false;
        std::uint64_t s = 0;
    };
    int nworkers = static_cast<int>(std::min<std::uint64_t>(
        std::max(workers, 1), std::max<std::uint64_t>(total / 1024, 1)));
    std::vector<Slot> slots(nworkers);

    auto run = [&](int w) {
        std::uint64_t begin = total * w / nworkers;
        std::uint64_t end = total * (w + 1) / nworkers;
        if (begin >= end) return;
        std::uint64_t sbar = unrank_colex(begin, k);
        Slot& slot = slots[w];
        for (std::uint64_t r = begin; r < end; ++r) {
            if (cg.complement_feasible(sbar)) {
                std::uint64_t s = cg.all & ~sbar;
                if (!slot.found || lex_less_mask(s, slot.s)) {
                    slot.found = true;
                    slot.s = s;
                }
            }
            if (r + 1 < end) sbar = next_same_popcount(sbar);
        }
    };

    if (nworkers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    bool found = false;
    for (const Slot& slot : slots) {
        if (!slot.found) continue;
        if (!found || lex_less_mask(slot.s, best_s)) {
            best_s = slot.s;
            found = true;
        }
    }
    return found;
}

}  // namespace detail

// Exact super domination number with the lexicographically smallest optimal
// witness. Decomposes into connected components (gamma_sp is additive over
// them); per component searches complements S̄ by decreasing size k from
// floor(n_c/2) — the only range a maximum complement can live in — and
// accepts the first feasible k, giving n_c - k. Edgeless components
// contribute every vertex.
inline SolveResult super_domination_number(const Graph& g, const SolveOptions& opt = {}) {
    const int limit = std::min(opt.component_limit, detail::kMaxComponentVertices);
    SolveResult result;
    result.witness = VertexSet(g.order());
    result.strategy = "complement-descent";

    for (const VertexSet& comp : g.components()) {
        if (comp.size() > limit) throw SolverLimitExceeded(comp.size(), limit);
        if (comp.size() == 1) {
            result.value += 1;
            result.witness.insert(comp.first());
            continue;
        }
        detail::ComponentGraph cg(g, comp);
        for (int k = cg.n / 2; k >= 0; --k) {
            result.subsets_examined += detail::binomial(cg.n, k);
            std::uint64_t best_s = 0;
            if (!detail::scan_complements(cg, k, opt.workers, best_s)) continue;
            result.value += cg.n - k;
            std::uint64_t m = best_s;
            while (m) {
                result.witness.insert(cg.vertices[std::countr_zero(m)]);
                m &= m - 1;
            }
            break;
        }
    }
    return result;
}

struct DominationResult {
    int value = 0;
    VertexSet witness;
};

// Exact domination number, same component decomposition and tie-breaking.
inline DominationResult domination_number(const Graph& g, const SolveOptions& opt = {}) {
    const int limit = std::min(opt.component_limit, detail::kMaxComponentVertices);
    DominationResult result;
    result.witness = VertexSet(g.order());

    for (const VertexSet& comp : g.components()) {
        if (comp.size() > limit) throw SolverLimitExceeded(comp.size(), limit);
        if (comp.size() == 1) {
            result.value += 1;
            result.witness.insert(comp.first());
            continue;
        }
        detail::ComponentGraph cg(g, comp);
        for (int k = 1; k <= cg.n; ++k) {
            bool found = false;
            std::uint64_t best = 0;
            std::uint64_t d = (std::uint64_t{1} << k) - 1;
            for (std::uint64_t r = detail::binomial(cg.n, k); r > 0; --r) {
                if (cg.dominating(d) && (!found || detail::lex_less_mask(d, best))) {
                    found = true;
                    best = d;
                }
                if (r > 1) d = detail::next_same_popcount(d);
            }
            if (!found) continue;
            result.value += k;
            std::uint64_t m = best;
            while (m) {
                result.witness.insert(cg.vertices[std::countr_zero(m)]);
                m &= m - 1;
            }
            break;
        }
    }
    return result;
}

inline constexpr int kNaiveLimit = 14;

// Independent oracle: minimum |S| over all 2^n subsets passing the public
// checker. No component decomposition, no pruning, no shared search code
// with the optimized path.
inline int super_domination_naive(const Graph& g) {
    const int n = g.order();
    if (n > kNaiveLimit)
        throw std::invalid_argument("super_domination_naive: n > " + std::to_string(kNaiveLimit));
    int best = n;  // S = V always qualifies
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.insert(v);
        if (is_super_dominating(g, s)) best = size;
    }
    return best;
}

}  // namespace superdom
