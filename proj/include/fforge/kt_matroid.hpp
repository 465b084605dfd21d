#pragma once

#include <memory>
#include <optional>

#include "fforge/instance.hpp"
#include "fforge/matroid.hpp"
#include "fforge/partition.hpp"

namespace fforge {

// A graph G = (V, E), a root multiset S and a matroid M on the root tokens.
// The mixed ground set E ⊎ S numbers edges 0..|E|-1 and token t as |E| + t.
class KtContext {
public:
    KtContext(Hypergraph graph, RootMultiset roots, Matroid base, Limits limits = {});

    const Hypergraph& graph() const { return graph_; }
    const RootMultiset& roots() const { return roots_; }
    const Matroid& base() const { return base_; }
    const Limits& limits() const { return limits_; }

    std::size_t num_edges() const { return graph_.num_edges(); }
    std::size_t num_tokens() const { return roots_.size(); }
    // r_M(S)
    int base_rank() const { return base_rank_; }
    // r_M(S) |V|: the size of every basis of M'_KT.
    int basis_size() const { return base_rank_ * static_cast<int>(graph_.num_vertices()); }

    ElementSet all_edges() const { return full_element_set(num_edges()); }
    ElementSet mixed_ground() const { return mixed(all_edges(), roots_.all()); }
    ElementSet mixed(ElementSet edges, ElementSet tokens) const;
    ElementSet edge_part(ElementSet mixed_set) const { return mixed_set & all_edges(); }
    ElementSet token_part(ElementSet mixed_set) const;

    // r'_KT(F ∪ T), minimized exactly over all partitions of V.
    int r_prime(ElementSet edges, ElementSet tokens) const;
    // r_KT(F); requires every S_v independent in M.
    int r_kt(ElementSet edges) const;

    // r_M(S)|V| + e_F(P) - Σ_{X∈P} (r_M(S) - r_M(T_X)) at a fixed partition.
    Count objective(const Partition& p, ElementSet edges, ElementSet tokens) const;

    // First partition in enumeration order attaining r'_KT(F ∪ T).
    Partition min_partition_certificate(ElementSet edges, ElementSet tokens) const;

    // A vertex whose root tokens are dependent in M, if any.
    std::optional<VertexId> dependent_root_vertex() const;

    // M'_KT as a rank oracle over the mixed ground set.
    Matroid prime_matroid() const;

private:
    struct Cache;

    int evaluate_prime(ElementSet edges, ElementSet tokens) const;

    Hypergraph graph_;
    RootMultiset roots_;
    Matroid base_;
    Limits limits_;
    int base_rank_ = 0;
    // Indexed by vertex subset.
    std::vector<ElementSet> inside_edges_;
    std::vector<ElementSet> tokens_in_;
    std::shared_ptr<Cache> cache_;
};

} // namespace fforge
