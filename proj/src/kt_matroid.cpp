#include "fforge/kt_matroid.hpp"

#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace fforge {

struct KtContext::Cache {
    std::shared_mutex mutex;
    std::unordered_map<ElementSet, int> prime;
};

KtContext::KtContext(Hypergraph graph, RootMultiset roots, Matroid base, Limits limits)
    : graph_(std::move(graph)), roots_(std::move(roots)), base_(std::move(base)), limits_(limits),
      cache_(std::make_shared<Cache>())
{
    if (!graph_.is_graph()) throw InvalidArgument("the rooted-tree matroid needs a graph");
    if (roots_.num_vertices() != graph_.num_vertices()) {
        throw InvalidArgument("root multiset and graph disagree on the vertex count");
    }
    if (base_.ground() != roots_.all()) {
        throw InvalidArgument("the root matroid must have exactly the root tokens as ground set");
    }
    if (num_edges() + num_tokens() > kMaxElements) {
        throw CapExceeded("|E| + |S| exceeds " + std::to_string(kMaxElements) + " elements");
    }
    const std::size_t n = graph_.num_vertices();
    require_cap(n, limits_.max_partition_vertices, "|V| for partition minimization");
    base_rank_ = base_.full_rank();

    const std::size_t subsets = std::size_t{1} << n;
    inside_edges_.assign(subsets, 0);
    tokens_in_.assign(subsets, 0);
    for (std::size_t x = 0; x < subsets; ++x) {
        for (EdgeId e = 0; e < num_edges(); ++e) {
            if ((graph_.edge_mask(e) & ~static_cast<VertexSet>(x)) == 0) inside_edges_[x] |= ElementSet{1} << e;
        }
        tokens_in_[x] = roots_.restrict_to(static_cast<VertexSet>(x));
    }
}

ElementSet KtContext::mixed(ElementSet edges, ElementSet tokens) const
{
    return edges | (num_edges() >= 64 ? 0 : tokens << num_edges());
}

ElementSet KtContext::token_part(ElementSet mixed_set) const
{
    return num_edges() >= 64 ? 0 : (mixed_set >> num_edges()) & roots_.all();
}

int KtContext::r_prime(ElementSet edges, ElementSet tokens) const
{
    const ElementSet key = mixed(edges, tokens);
    {
        std::shared_lock lock(cache_->mutex);
        auto it = cache_->prime.find(key);
        if (it != cache_->prime.end()) return it->second;
    }
    const int value = evaluate_prime(edges, tokens);
    std::unique_lock lock(cache_->mutex);
    cache_->prime.emplace(key, value);
    return value;
}

int KtContext::evaluate_prime(ElementSet edges, ElementSet tokens) const
{
    // min over partitions of Σ_X cost(X), cost(X) = -i_F(X) - (r(S) - r(T_X));
    // e_F(P) = |F| - Σ_X i_F(X). Subset DP, each partition reached through
    // its block containing the lowest remaining vertex.
    const std::size_t n = graph_.num_vertices();
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<Count> cost(subsets, 0);
    for (std::size_t x = 1; x < subsets; ++x) {
        cost[x] = -popcount(edges & inside_edges_[x]) - (base_rank_ - base_.rank(tokens & tokens_in_[x]));
    }
    std::vector<Count> best(subsets, std::numeric_limits<Count>::max());
    best[0] = 0;
    for (std::size_t mask = 1; mask < subsets; ++mask) {
        const std::size_t low = mask & (~mask + 1);
        const std::size_t rest = mask ^ low;
        // Enumerate sub = low | s for every s ⊆ rest.
        for (std::size_t s = rest;; s = (s - 1) & rest) {
            const std::size_t sub = low | s;
            const Count value = cost[sub] + best[mask ^ sub];
            if (value < best[mask]) best[mask] = value;
            if (s == 0) break;
        }
    }
    const Count minimum = (n == 0 ? 0 : best[subsets - 1]) + popcount(edges);
    return static_cast<int>(basis_size() + minimum);
}

Count KtContext::objective(const Partition& p, ElementSet edges, ElementSet tokens) const
{
    Count value = basis_size();
    for (VertexSet x : p.blocks()) {
        value -= base_rank_ - base_.rank(tokens & tokens_in_[x]);
    }
    for (std::size_t e : members(edges)) value += crosses(graph_.edge_mask(static_cast<EdgeId>(e)), p);
    return value;
}

int KtContext::r_kt(ElementSet edges) const
{
    if (auto v = dependent_root_vertex()) {
        throw InvalidArgument("r_KT needs independent roots at every vertex; vertex "
                              + std::to_string(*v) + " has a dependent root set");
    }
    Count best = std::numeric_limits<Count>::max();
    for_each_partition(graph_.num_vertices(), limits_.max_partition_vertices, [&](const Partition& p) {
        Count value = 0;
        for (std::size_t e : members(edges)) value += crosses(graph_.edge_mask(static_cast<EdgeId>(e)), p);
        for (VertexSet x : p.blocks()) value -= base_rank_ - base_.rank(tokens_in_[x]);
        best = std::min(best, value);
    });
    return static_cast<int>(basis_size() - static_cast<Count>(num_tokens()) + best);
}

Partition KtContext::min_partition_certificate(ElementSet edges, ElementSet tokens) const
{
    const int target = r_prime(edges, tokens);
    PartitionStream stream(graph_.num_vertices(), limits_.max_partition_vertices);
    while (stream.next()) {
        if (objective(stream.current(), edges, tokens) == target) return stream.current();
    }
    throw InternalInconsistency("no partition attains the minimum of r'_KT");
}

std::optional<VertexId> KtContext::dependent_root_vertex() const
{
    for (VertexId v = 0; v < graph_.num_vertices(); ++v) {
        if (!base_.independent(roots_.at(v))) return v;
    }
    return std::nullopt;
}

Matroid KtContext::prime_matroid() const
{
    KtContext self = *this;
    return Matroid(
        mixed_ground(),
        [self](ElementSet x) { return self.r_prime(self.edge_part(x), self.token_part(x)); },
        "rooted-tree packing matroid", false);
}

} // namespace fforge
