#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fforge/common.hpp"

namespace fforge {

// A partition of {0, ..., n-1} into nonempty blocks, kept in canonical form:
// blocks sorted by their minimum element.
class Partition {
public:
    Partition() = default;
    Partition(std::size_t n, std::vector<VertexSet> blocks);

    static Partition singletons(std::size_t n);
    static Partition whole(std::size_t n);
    // Restricted growth string: rgs[0] == 0, rgs[i] <= 1 + max(rgs[0..i)).
    static Partition from_rgs(const std::vector<std::uint8_t>& rgs);

    std::size_t ground_size() const { return n_; }
    std::size_t size() const { return blocks_.size(); }
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    std::size_t block_of(VertexId v) const;
    std::vector<std::uint8_t> rgs() const;

    bool is_whole() const { return blocks_.size() == 1; }
    bool is_singletons() const { return blocks_.size() == n_; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    friend class PartitionStream;
    std::size_t n_ = 0;
    std::vector<VertexSet> blocks_;
};

// X meets at least two blocks of P.
bool crosses(VertexSet x, const Partition& p);

// P1 ⊔ P2: the maximal sets after uncrossing, which are the connected
// components of the block-overlap relation.
Partition join(const Partition& p1, const Partition& p2);

// P1 ⊓ P2 under the canonical uncrossing rule: always uncross the
// lexicographically smallest properly intersecting pair.
Partition meet(const Partition& p1, const Partition& p2);

struct Uncrossing {
    Partition meet;
    Partition join;
    std::size_t steps = 0;
};

// Runs the uncrossing method on the family P1 ∪ P2. With rng == nullptr the
// canonical rule is used; otherwise each step picks a uniformly random
// properly intersecting pair.
Uncrossing uncross(const Partition& p1, const Partition& p2, std::mt19937_64* rng = nullptr);

bool properly_intersect(VertexSet a, VertexSet b);

std::uint64_t bell_number(std::size_t n);

// Lazy enumeration of all partitions of an n-set in restricted-growth-string
// order, optionally restricted to the strings starting with `prefix`. The
// first partition is {V}; the last is the singleton partition.
class PartitionStream {
public:
    explicit PartitionStream(std::size_t n, std::size_t cap = Limits{}.max_partition_vertices);
    PartitionStream(std::size_t n, std::vector<std::uint8_t> prefix,
                    std::size_t cap = Limits{}.max_partition_vertices);

    // Advances to the next partition; false once exhausted.
    bool next();
    const Partition& current() const { return current_; }
    const std::vector<std::uint8_t>& current_rgs() const { return rgs_; }

private:
    void rebuild();

    std::size_t n_;
    std::size_t fixed_;
    bool started_ = false;
    bool done_ = false;
    std::vector<std::uint8_t> rgs_;
    std::vector<std::uint8_t> prefix_max_;
    Partition current_;
};

// Visits every partition in enumeration order.
template <class Fn>
void for_each_partition(std::size_t n, std::size_t cap, Fn&& fn)
{
    PartitionStream stream(n, cap);
    while (stream.next()) fn(stream.current());
}

std::string to_string(const Partition& p, const std::vector<std::string>& names = {});
std::string to_string(VertexSet x, const std::vector<std::string>& names = {});

} // namespace fforge

#include <functional>
#include <optional>

namespace fforge {

struct PartitionArgmax {
    Partition partition;
    Count value = 0;
};

// The partition of maximum score, earliest in enumeration order among ties.
// With limits.threads > 1 the scan is split over restricted-growth prefixes;
// `score` must then be safe to call concurrently. The result is the same for
// every thread count.
PartitionArgmax argmax_partition(std::size_t n, const std::function<Count(const Partition&)>& score,
                                 const Limits& limits = {});

} // namespace fforge
