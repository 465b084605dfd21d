#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fforge {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using TokenId = std::uint32_t;
using Count = std::int64_t;

// Vertex subsets as bitmasks; bit i is vertex i.
using VertexSet = std::uint32_t;
// Matroid element subsets as bitmasks; bit i is element i.
using ElementSet = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 32;
inline constexpr std::size_t kMaxElements = 64;

struct Limits {
    // Partition-quantified scans enumerate Bell(n) partitions.
    std::size_t max_partition_vertices = 12;
    // Subset scans (inner maxima, subset conditions) enumerate 2^|X| subsets.
    std::size_t max_subset_vertices = 20;
    // Worker threads for partition scans; results never depend on this.
    unsigned threads = 1;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A configured size limit would be exceeded; the computation was refused.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// An existence guarantee failed to materialize. Always a bug.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

inline int popcount(std::uint64_t x) { return std::popcount(x); }

inline VertexSet full_vertex_set(std::size_t n)
{
    return n >= 32 ? ~VertexSet{0} : ((VertexSet{1} << n) - 1);
}

inline ElementSet full_element_set(std::size_t n)
{
    return n >= 64 ? ~ElementSet{0} : ((ElementSet{1} << n) - 1);
}

inline bool contains(std::uint64_t set, std::size_t i) { return (set >> i) & 1U; }

inline std::vector<std::size_t> members(std::uint64_t set)
{
    std::vector<std::size_t> out;
    while (set != 0) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(set)));
        set &= set - 1;
    }
    return out;
}

// Lexicographic order of the sorted member lists; {} sorts first, a proper
// prefix sorts before its extensions.
inline bool lex_less(std::uint64_t a, std::uint64_t b)
{
    while (a != 0 && b != 0) {
        const int ia = std::countr_zero(a);
        const int ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

void require_cap(std::size_t value, std::size_t cap, const std::string& what);

} // namespace fforge
