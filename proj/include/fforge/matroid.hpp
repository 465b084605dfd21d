#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fforge/common.hpp"

namespace fforge {

// A matroid presented by its rank function over a ground set of element ids
// (bits of an ElementSet). Copies share the rank function and its memo.
class Matroid {
public:
    using RankFn = std::function<int(ElementSet)>;

    Matroid();
    Matroid(ElementSet ground, RankFn rank, std::string description, bool memoize = true);

    ElementSet ground() const;
    std::size_t ground_size() const { return static_cast<std::size_t>(popcount(ground())); }
    const std::string& description() const;

    // Rank of X; X must lie in the ground set.
    int rank(ElementSet x) const;
    int full_rank() const { return rank(ground()); }
    bool independent(ElementSet x) const { return rank(x) == popcount(x); }

    // Greedy maximal independent subset of X, scanning elements in ascending id.
    ElementSet maximal_independent(ElementSet x) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

Matroid make_free(ElementSet ground);
Matroid make_uniform(ElementSet ground, int k);
// Explicit rank table over elements 0..n-1, indexed by subset bitmask.
Matroid make_from_table(std::size_t n, std::vector<int> table);

// M|T
Matroid restrict(const Matroid& m, ElementSet t);
// M/X, X independent
Matroid contract(const Matroid& m, ElementSet x);
Matroid direct_sum(const Matroid& m1, const Matroid& m2);

// Bases: the Z of size `size` with lower[i] <= |Z ∩ parts[i]| <= upper[i].
struct GenPartitionSpec {
    std::vector<ElementSet> parts;
    std::vector<Count> lower;
    std::vector<Count> upper;
    Count size = 0;
};

// Empty string when the spec satisfies the existence conditions, otherwise a
// description of the first failed one.
std::string gen_partition_defect(const GenPartitionSpec& spec);
Matroid make_gen_partition(const GenPartitionSpec& spec);

struct CommonIndependent {
    ElementSet set = 0;
};

// r1(Z) + r2(ground \ Z) < target.
struct DeficiencyCertificate {
    ElementSet z = 0;
    int bound = 0;
};

using IntersectionOutcome = std::variant<CommonIndependent, DeficiencyCertificate>;

// Grows a common independent set along shortest exchange-graph augmenting
// paths until it reaches `target` elements or no augmenting path remains.
IntersectionOutcome matroid_intersection(const Matroid& m1, const Matroid& m2, std::size_t target);

struct MaxCommonIndependent {
    ElementSet set = 0;
    // r1(z) + r2(ground \ z) == |set|
    ElementSet z = 0;
};

MaxCommonIndependent max_common_independent(const Matroid& m1, const Matroid& m2);

} // namespace fforge
