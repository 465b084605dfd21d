#pragma once

#include <random>

#include "fforge/generators.hpp"
#include "fforge/kt_matroid.hpp"

namespace fforge::testing {

inline Matroid matroid_from(const MatroidSpec& spec, std::size_t tokens)
{
    InstanceDocument doc;
    doc.tokens = token_names(tokens);
    doc.matroid = spec;
    return build_matroid(doc);
}

// A small rooted graph with a random matroid on its root tokens.
inline KtContext random_context(std::mt19937_64& rng, std::size_t max_vertices = 3, std::size_t max_edges = 3,
                                std::size_t max_tokens = 3)
{
    const std::size_t n = draw(rng, 2, max_vertices);
    const std::size_t m = draw(rng, 0, max_edges);
    const std::size_t s = draw(rng, 1, max_tokens);
    std::vector<VertexId> at;
    for (std::size_t t = 0; t < s; ++t) at.push_back(static_cast<VertexId>(draw(rng, 0, n - 1)));
    return KtContext(Hypergraph(n, random_hyperedges(rng, n, m, 2)), RootMultiset(n, at),
                     matroid_from(random_matroid(rng, s), s));
}

// Number of blocks of p that X meets, computed directly.
inline int blocks_met(VertexSet x, const Partition& p)
{
    int met = 0;
    for (VertexSet b : p.blocks()) met += (b & x) != 0 ? 1 : 0;
    return met;
}

inline bool meets_two(VertexSet x, const Partition& p) { return blocks_met(x, p) >= 2; }

// Hyperedges of `masks` selected by `subset` that meet two blocks of p.
inline Count crossing_direct(const std::vector<VertexSet>& masks, std::uint64_t subset, const Partition& p)
{
    Count c = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        if (((subset >> i) & 1U) != 0 && meets_two(masks[i], p)) ++c;
    }
    return c;
}

} // namespace fforge::testing
