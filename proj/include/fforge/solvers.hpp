#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "fforge/feasibility.hpp"
#include "fforge/kt_matroid.hpp"
#include "fforge/packing.hpp"

namespace fforge {

using PackResult = std::variant<Packing, Violation>;
using PartitionFunction = std::function<Count(const Partition&)>;

// k edge-disjoint spanning trees of a graph, or a partition with
// e(P) < k(|P| - 1). Trees are listed with root 0 and ascending edge ids.
PackResult pack_spanning_trees(const Hypergraph& g, Count k, const Limits& limits = {});

// The extension bound of the tree-growing step: m(X) = k(|X| - 1) - |X ∩ S| + 1.
Count extension_bound(Count k, VertexSet tree_vertices, VertexSet x);

// Complete M-based packing (root set exactly S).
PackResult mbased_pack(const KtContext& ctx);

// M-based (f, g)-bounded packing of exactly spec.k rooted trees.
PackResult pack_bounded_k(const ProblemSpec& spec);

// Splits a basis F ∪ T of M'_KT into an M-based packing with edge set F and
// root set T. Throws InvalidArgument when F ∪ T is not such a basis.
Packing decompose(const KtContext& ctx, ElementSet edges, ElementSet tokens);

// M-based (f, g)-bounded (alpha, beta)-limited packing using the smallest
// feasible root count.
PackResult pack_limited(const ProblemSpec& spec);

struct Trimming {
    // Same edge ids as the hypergraph it came from.
    Hypergraph graph;
    std::vector<VertexPair> ends;
};

using TrimResult = std::variant<Trimming, Violation>;

// Shrinks every hyperedge to two of its vertices while keeping
// e(P) >= max{p1(P), p2(P)} for every partition P. p1 and p2 must be
// supermodular on partitions.
TrimResult trim_hypergraph(const Hypergraph& h, const PartitionFunction& p1, const PartitionFunction& p2,
                           const Limits& limits = {});

using CoverResult = std::variant<std::vector<VertexPair>, Violation>;

// An edge set F of size gamma with e_F(P) >= max{p1(P), p2(P)} for every
// partition P of an n-set.
CoverResult cover_partition_functions(std::size_t n, const PartitionFunction& p1, const PartitionFunction& p2,
                                      Count gamma, const Limits& limits = {});

// Packing of rooted hypertrees for limited-hyper specs (graphs included).
PackResult pack_limited_hyper(const ProblemSpec& spec);

struct Augmentation {
    std::vector<VertexPair> added;
    // The instance with `added` appended after the original hyperedges.
    Hypergraph augmented;
    Packing packing;
};

using AugmentResult = std::variant<Augmentation, Violation>;

// Adds spec.gamma edges so that the limited-hyper packing exists.
AugmentResult augment_hypergraph(const ProblemSpec& spec);

// Smallest gamma for which augment_hypergraph succeeds, or nullopt when a
// condition that no added edge can repair fails. For spanning specs, the
// fewest added edges after which k edge-disjoint spanning trees exist.
std::optional<Count> min_augmentation(const ProblemSpec& spec);

} // namespace fforge
