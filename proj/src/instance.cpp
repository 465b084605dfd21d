#include "fforge/instance.hpp"

#include <algorithm>
#include <string>

#include "fforge/partition.hpp"

namespace fforge {

Hypergraph::Hypergraph(std::size_t n_vertices, std::vector<std::vector<VertexId>> hyperedges)
    : n_(n_vertices), edges_(std::move(hyperedges))
{
    if (n_ > kMaxVertices) {
        throw CapExceeded("vertex count " + std::to_string(n_) + " exceeds the bitmask limit of "
                          + std::to_string(kMaxVertices));
    }
    masks_.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw InvalidArgument("hyperedge " + std::to_string(i) + " repeats a vertex");
        }
        if (e.size() < 2) {
            throw InvalidArgument("hyperedge " + std::to_string(i)
                                  + " has fewer than two vertices");
        }
        VertexSet mask = 0;
        for (VertexId v : e) {
            if (v >= n_) {
                throw InvalidArgument("hyperedge " + std::to_string(i) + " names vertex "
                                      + std::to_string(v) + " outside the vertex set");
            }
            mask |= VertexSet{1} << v;
        }
        masks_.push_back(mask);
    }
}

Hypergraph Hypergraph::graph(std::size_t n_vertices, std::span<const VertexPair> edges)
{
    std::vector<std::vector<VertexId>> lists;
    lists.reserve(edges.size());
    for (auto [u, v] : edges) lists.push_back({u, v});
    return Hypergraph(n_vertices, std::move(lists));
}

bool Hypergraph::is_graph() const
{
    return std::all_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.size() == 2; });
}

VertexPair Hypergraph::ends(EdgeId id) const
{
    const auto& e = edges_.at(id);
    if (e.size() != 2) throw InvalidArgument("hyperedge " + std::to_string(id) + " is not an edge");
    return {e[0], e[1]};
}

Hypergraph Hypergraph::with_added_edges(std::span<const VertexPair> extra) const
{
    auto lists = edges_;
    for (auto [u, v] : extra) lists.push_back({u, v});
    return Hypergraph(n_, std::move(lists));
}

Hypergraph Hypergraph::edge_subgraph(std::span<const EdgeId> keep) const
{
    std::vector<std::vector<VertexId>> lists;
    lists.reserve(keep.size());
    for (EdgeId id : keep) lists.push_back(edges_.at(id));
    return Hypergraph(n_, std::move(lists));
}

RootMultiset::RootMultiset(std::size_t n_vertices, std::vector<VertexId> token_vertex)
    : n_(n_vertices), vertex_(std::move(token_vertex))
{
    if (vertex_.size() > kMaxElements) {
        throw CapExceeded("root multiset has more than " + std::to_string(kMaxElements)
                          + " tokens");
    }
    for (std::size_t t = 0; t < vertex_.size(); ++t) {
        if (vertex_[t] >= n_) {
            throw InvalidArgument("root token " + std::to_string(t) + " placed outside the vertex set");
        }
    }
}

ElementSet RootMultiset::restrict_to(VertexSet x) const
{
    ElementSet out = 0;
    for (std::size_t t = 0; t < vertex_.size(); ++t) {
        if (contains(x, vertex_[t])) out |= ElementSet{1} << t;
    }
    return out;
}

namespace {

void require_graph(const Hypergraph& g)
{
    if (!g.is_graph()) throw InvalidArgument("operation requires a graph (all hyperedges of size 2)");
}

} // namespace

Count induced_count(const Hypergraph& g, VertexSet x)
{
    require_graph(g);
    Count n = 0;
    for (VertexSet m : g.edge_masks()) n += (m & ~x) == 0;
    return n;
}

Count cross_degree(const Hypergraph& g, VertexSet x, VertexSet y)
{
    require_graph(g);
    if ((x & y) != 0) throw InvalidArgument("cross_degree requires disjoint vertex sets");
    Count n = 0;
    for (VertexSet m : g.edge_masks()) n += (m & x) != 0 && (m & y) != 0;
    return n;
}

Count crossing_count(const Hypergraph& h, const Partition& p)
{
    Count n = 0;
    for (VertexSet m : h.edge_masks()) n += crosses(m, p);
    return n;
}

Count crossing_count(const Hypergraph& h, const Partition& p, std::uint64_t subset)
{
    Count n = 0;
    const auto masks = h.edge_masks();
    for (std::size_t i = 0; i < masks.size() && i < 64; ++i) {
        if (!contains(subset, i)) continue;
        n += crosses(masks[i], p);
    }
    return n;
}

Contraction contract(const Hypergraph& g, VertexSet x)
{
    require_graph(g);
    x &= g.vertices();
    if (x == 0) throw InvalidArgument("cannot contract an empty vertex set");

    Contraction out;
    out.vertex_map.resize(g.num_vertices());
    VertexId next = 0;
    bool placed = false;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (contains(x, v)) {
            if (!placed) {
                out.contracted = next++;
                placed = true;
            }
            out.vertex_map[v] = out.contracted;
        } else {
            out.vertex_map[v] = next++;
        }
    }
    std::vector<VertexPair> edges;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
        if ((g.edge_mask(id) & ~x) == 0) continue;
        auto [u, v] = g.ends(id);
        edges.emplace_back(out.vertex_map[u], out.vertex_map[v]);
        out.edge_origin.push_back(id);
    }
    out.graph = Hypergraph::graph(next, edges);
    return out;
}

InducedSubgraph induced_subgraph(const Hypergraph& g, VertexSet x)
{
    x &= g.vertices();
    InducedSubgraph out;
    std::vector<VertexId> to_new(g.num_vertices(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (!contains(x, v)) continue;
        to_new[v] = static_cast<VertexId>(out.vertex_origin.size());
        out.vertex_origin.push_back(v);
    }
    std::vector<std::vector<VertexId>> lists;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
        if ((g.edge_mask(id) & ~x) != 0) continue;
        std::vector<VertexId> e;
        for (VertexId v : g.edge(id)) e.push_back(to_new[v]);
        lists.push_back(std::move(e));
        out.edge_origin.push_back(id);
    }
    out.graph = Hypergraph(out.vertex_origin.size(), std::move(lists));
    return out;
}

VertexPair trim_hyperedge(std::span<const VertexId> hyperedge, VertexId u, VertexId v)
{
    if (u == v) throw InvalidArgument("trimmed edge needs two distinct end-vertices");
    const auto has = [&](VertexId w) {
        return std::find(hyperedge.begin(), hyperedge.end(), w) != hyperedge.end();
    };
    if (!has(u) || !has(v)) throw InvalidArgument("trimmed end-vertex lies outside the hyperedge");
    return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

} // namespace fforge
