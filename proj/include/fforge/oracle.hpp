#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fforge/feasibility.hpp"
#include "fforge/packing.hpp"

// Brute-force ground truth. Nothing here calls into the solvers; the only
// shared pieces are the instance types and the matroid rank oracle.
namespace fforge::oracle {

struct ValidationFailure {
    std::string rule;
    std::string witness;
};

struct ValidationReport {
    std::vector<ValidationFailure> failures;

    bool ok() const { return failures.empty(); }
    void fail(std::string rule, std::string witness) { failures.push_back({std::move(rule), std::move(witness)}); }
    // True when some failure carries this rule id.
    bool has(const std::string& rule) const;
};

// Rules, in checking order: trim, forest, component-root, edge-disjoint,
// root-subset, complete, spanning, basis, f-bound, g-bound, alpha, beta, k.
ValidationReport validate_packing(const Packing& packing, const ProblemSpec& spec);

struct BruteCaps {
    std::size_t vertices = 5;
    std::size_t hyperedges = 8;
    std::size_t roots = 4;
};

// Exhaustive search over root subsets and assignments of (trimmed)
// hyperedges to trees. Augment specs are searched as limited-hyper specs on
// the instance as given.
bool brute_exists_packing(const ProblemSpec& spec, const BruteCaps& caps = {});

// An M-based packing in a graph whose edge set is exactly `edges` and whose
// root set is exactly `tokens`.
bool brute_exists_basis_packing(const Hypergraph& g, const RootMultiset& roots, const Matroid& m, ElementSet edges,
                                ElementSet tokens, const BruteCaps& caps = {});

using RankFunction = std::function<int(ElementSet)>;

// Non-negativity, subcardinality, monotonicity and submodularity over all
// subsets of {0, ..., ground_size - 1}; ground_size <= 10.
ValidationReport verify_matroid_axioms(const RankFunction& rank, std::size_t ground_size);

// p(P1) + p(P2) <= p(P1 ⊓ P2) + p(P1 ⊔ P2) over all ordered pairs; n <= 5.
ValidationReport verify_partition_supermodular(const std::function<Count(const Partition&)>& p, std::size_t n);

// Fewest added edges (any multiset of vertex pairs) after which the packing
// exists, searched by increasing count; nullopt when no number up to the
// largest useful count works. |V| <= 4.
std::optional<Count> brute_min_augmentation(const ProblemSpec& spec);

// Every partition of an n-set, generated independently of the library's
// enumerator.
std::vector<Partition> enumerate_partitions(std::size_t n);

// P1 ⊓ P2 and P1 ⊔ P2 by uncrossing the first properly intersecting pair in list order.
std::pair<Partition, Partition> uncross_pair(const Partition& p1, const Partition& p2);

} // namespace fforge::oracle
