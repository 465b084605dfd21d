#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fforge/common.hpp"

namespace fforge {

class Partition;

using VertexPair = std::pair<VertexId, VertexId>;

// Vertex set plus a multiset of hyperedges. Hyperedges keep their insertion
// index so packings and certificates can refer to them by id. A graph is a
// hypergraph whose hyperedges all have exactly two vertices.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::size_t n_vertices, std::vector<std::vector<VertexId>> hyperedges);

    static Hypergraph graph(std::size_t n_vertices, std::span<const VertexPair> edges);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    VertexSet vertices() const { return full_vertex_set(n_); }

    // Sorted vertex list of hyperedge `id`.
    const std::vector<VertexId>& edge(EdgeId id) const { return edges_.at(id); }
    VertexSet edge_mask(EdgeId id) const { return masks_.at(id); }
    std::span<const VertexSet> edge_masks() const { return masks_; }

    bool is_graph() const;

    // Endpoints of a graph edge.
    VertexPair ends(EdgeId id) const;

    Hypergraph with_added_edges(std::span<const VertexPair> extra) const;
    // Keeps only the hyperedges whose id is in `keep` (ascending ids).
    Hypergraph edge_subgraph(std::span<const EdgeId> keep) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::vector<VertexId>> edges_;
    std::vector<VertexSet> masks_;
};

// Multiset S of vertices. Each placement is a token (a matroid ground element);
// token t sits at vertex_of(t).
class RootMultiset {
public:
    RootMultiset() = default;
    RootMultiset(std::size_t n_vertices, std::vector<VertexId> token_vertex);

    std::size_t size() const { return vertex_.size(); }
    std::size_t num_vertices() const { return n_; }
    VertexId vertex_of(TokenId t) const { return vertex_.at(t); }
    ElementSet all() const { return full_element_set(vertex_.size()); }

    // S_X: tokens placed at vertices of X.
    ElementSet restrict_to(VertexSet x) const;
    ElementSet at(VertexId v) const { return restrict_to(VertexSet{1} << v); }

    friend bool operator==(const RootMultiset&, const RootMultiset&) = default;

private:
    std::size_t n_ = 0;
    std::vector<VertexId> vertex_;
};

// i_E(X): edges with both ends in X.
Count induced_count(const Hypergraph& g, VertexSet x);

// d_E(X, Y) for disjoint X, Y.
Count cross_degree(const Hypergraph& g, VertexSet x, VertexSet y);

// e(P): hyperedges not contained in a block of P.
Count crossing_count(const Hypergraph& h, const Partition& p);
// e restricted to the hyperedges whose bit is set in `subset`.
Count crossing_count(const Hypergraph& h, const Partition& p, std::uint64_t subset);

struct Contraction {
    Hypergraph graph;
    // Old vertex -> new vertex; all of X maps to the contracted vertex.
    std::vector<VertexId> vertex_map;
    VertexId contracted = 0;
    // New edge id -> old edge id.
    std::vector<EdgeId> edge_origin;
};

// G/X: edges inside X are dropped, edges leaving X are redirected to v_X.
// The contracted vertex takes the place of the smallest vertex of X.
Contraction contract(const Hypergraph& g, VertexSet x);

struct InducedSubgraph {
    Hypergraph graph;
    // New vertex -> old vertex.
    std::vector<VertexId> vertex_origin;
    std::vector<EdgeId> edge_origin;
};

// G[X]
InducedSubgraph induced_subgraph(const Hypergraph& g, VertexSet x);

VertexPair trim_hyperedge(std::span<const VertexId> hyperedge, VertexId u, VertexId v);

} // namespace fforge
