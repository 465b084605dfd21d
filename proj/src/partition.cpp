#include "fforge/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fforge {

namespace {

void canonicalize(std::vector<VertexSet>& blocks)
{
    std::sort(blocks.begin(), blocks.end(), [](VertexSet a, VertexSet b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });
}

std::vector<VertexSet> extremal_sets(const std::vector<VertexSet>& family, bool minimal)
{
    std::vector<VertexSet> out;
    for (VertexSet s : family) {
        const bool dominated = std::any_of(family.begin(), family.end(), [&](VertexSet t) {
            if (t == s) return false;
            return minimal ? (t & ~s) == 0 : (s & ~t) == 0;
        });
        if (!dominated && std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    return out;
}

void require_same_ground(const Partition& p1, const Partition& p2)
{
    if (p1.ground_size() != p2.ground_size()) {
        throw InvalidArgument("partitions of different ground sets (" + std::to_string(p1.ground_size())
                              + " vs " + std::to_string(p2.ground_size()) + " elements)");
    }
}

} // namespace

Partition::Partition(std::size_t n, std::vector<VertexSet> blocks) : n_(n), blocks_(std::move(blocks))
{
    if (n_ > kMaxVertices) throw CapExceeded("partition ground set exceeds the bitmask limit");
    VertexSet seen = 0;
    for (VertexSet b : blocks_) {
        if (b == 0) throw InvalidArgument("partition has an empty block");
        if ((seen & b) != 0) throw InvalidArgument("partition blocks overlap");
        seen |= b;
    }
    if (seen != full_vertex_set(n_)) throw InvalidArgument("partition blocks do not cover the ground set");
    canonicalize(blocks_);
}

Partition Partition::singletons(std::size_t n)
{
    std::vector<VertexSet> blocks;
    for (std::size_t v = 0; v < n; ++v) blocks.push_back(VertexSet{1} << v);
    return Partition(n, std::move(blocks));
}

Partition Partition::whole(std::size_t n)
{
    if (n == 0) return Partition(0, {});
    return Partition(n, {full_vertex_set(n)});
}

Partition Partition::from_rgs(const std::vector<std::uint8_t>& rgs)
{
    std::vector<VertexSet> blocks;
    std::size_t top = 0;
    for (std::size_t i = 0; i < rgs.size(); ++i) {
        const std::size_t b = rgs[i];
        if (b > top || (i == 0 && b != 0)) throw InvalidArgument("not a restricted growth string");
        if (b == blocks.size()) {
            blocks.push_back(0);
            top = b + 1;
        }
        blocks[b] |= VertexSet{1} << i;
    }
    return Partition(rgs.size(), std::move(blocks));
}

std::size_t Partition::block_of(VertexId v) const
{
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (contains(blocks_[i], v)) return i;
    }
    throw InvalidArgument("vertex " + std::to_string(v) + " outside the partition ground set");
}

std::vector<std::uint8_t> Partition::rgs() const
{
    std::vector<std::uint8_t> out(n_, 0);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (std::size_t v : members(blocks_[b])) out[v] = static_cast<std::uint8_t>(b);
    }
    return out;
}

bool crosses(VertexSet x, const Partition& p)
{
    int hit = 0;
    for (VertexSet b : p.blocks()) {
        if ((b & x) != 0 && ++hit >= 2) return true;
    }
    return false;
}

bool properly_intersect(VertexSet a, VertexSet b)
{
    return (a & b) != 0 && (a & ~b) != 0 && (b & ~a) != 0;
}

Partition join(const Partition& p1, const Partition& p2)
{
    require_same_ground(p1, p2);
    // Merge overlapping blocks until the family is pairwise disjoint.
    std::vector<VertexSet> comps(p1.blocks());
    for (VertexSet b : p2.blocks()) {
        VertexSet merged = b;
        std::vector<VertexSet> rest;
        for (VertexSet c : comps) {
            if ((c & merged) != 0) {
                merged |= c;
            } else {
                rest.push_back(c);
            }
        }
        rest.push_back(merged);
        comps = std::move(rest);
    }
    return Partition(p1.ground_size(), std::move(comps));
}

Uncrossing uncross(const Partition& p1, const Partition& p2, std::mt19937_64* rng)
{
    require_same_ground(p1, p2);
    std::vector<VertexSet> family(p1.blocks());
    family.insert(family.end(), p2.blocks().begin(), p2.blocks().end());

    Uncrossing out;
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (;;) {
        std::sort(family.begin(), family.end(), lex_less);
        candidates.clear();
        for (std::size_t i = 0; i < family.size() && (rng || candidates.empty()); ++i) {
            for (std::size_t j = i + 1; j < family.size(); ++j) {
                if (properly_intersect(family[i], family[j])) {
                    candidates.emplace_back(i, j);
                    if (!rng) break;
                }
            }
        }
        if (candidates.empty()) break;
        std::size_t pick = 0;
        if (rng) pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(*rng);
        auto [i, j] = candidates[pick];
        const VertexSet a = family[i];
        const VertexSet b = family[j];
        family[i] = a & b;
        family[j] = a | b;
        ++out.steps;
    }
    out.meet = Partition(p1.ground_size(), extremal_sets(family, true));
    out.join = Partition(p1.ground_size(), extremal_sets(family, false));
    return out;
}

Partition meet(const Partition& p1, const Partition& p2)
{
    return uncross(p1, p2).meet;
}

std::uint64_t bell_number(std::size_t n)
{
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

PartitionStream::PartitionStream(std::size_t n, std::size_t cap) : PartitionStream(n, {}, cap) {}

PartitionStream::PartitionStream(std::size_t n, std::vector<std::uint8_t> prefix, std::size_t cap)
    : n_(n), fixed_(prefix.size()), rgs_(std::move(prefix))
{
    require_cap(n, cap, "partition enumeration over |V|");
    if (fixed_ > n_) throw InvalidArgument("partition prefix longer than the ground set");
    std::size_t top = 0;
    for (std::size_t i = 0; i < fixed_; ++i) {
        if (rgs_[i] > top || (i == 0 && rgs_[i] != 0)) {
            throw InvalidArgument("partition prefix is not a restricted growth string");
        }
        if (rgs_[i] == top) ++top;
    }
    rgs_.resize(n_, 0);
    prefix_max_.resize(n_, 0);
    current_.n_ = n_;
}

bool PartitionStream::next()
{
    if (done_) return false;
    if (!started_) {
        started_ = true;
        rebuild();
        return true;
    }
    for (std::size_t i = n_; i-- > std::max<std::size_t>(fixed_, 1);) {
        if (rgs_[i] <= prefix_max_[i - 1]) {
            ++rgs_[i];
            std::fill(rgs_.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs_.end(), 0);
            rebuild();
            return true;
        }
    }
    done_ = true;
    return false;
}

void PartitionStream::rebuild()
{
    auto& blocks = current_.blocks_;
    blocks.clear();
    std::uint8_t top = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        const std::uint8_t b = rgs_[i];
        if (b >= blocks.size()) blocks.resize(b + 1, 0);
        blocks[b] |= VertexSet{1} << i;
        top = std::max(top, b);
        prefix_max_[i] = top;
    }
}

std::string to_string(VertexSet x, const std::vector<std::string>& names)
{
    std::string out = "{";
    bool first = true;
    for (std::size_t v : members(x)) {
        if (!first) out += ',';
        first = false;
        out += v < names.size() ? names[v] : std::to_string(v);
    }
    return out + "}";
}

std::string to_string(const Partition& p, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ' ';
        out += to_string(p.blocks()[i], names);
    }
    return out;
}

} // namespace fforge

#include <exception>
#include <thread>

namespace fforge {

namespace {

void collect_prefixes(std::size_t depth, std::vector<std::uint8_t>& cur, std::uint8_t top,
                      std::vector<std::vector<std::uint8_t>>& out)
{
    if (cur.size() == depth) {
        out.push_back(cur);
        return;
    }
    for (std::uint8_t b = 0; b <= top; ++b) {
        cur.push_back(b);
        collect_prefixes(depth, cur, b == top ? static_cast<std::uint8_t>(top + 1) : top, out);
        cur.pop_back();
    }
}

struct Best {
    std::optional<Partition> partition;
    std::vector<std::uint8_t> rgs;
    Count value = 0;

    void offer(const Partition& p, const std::vector<std::uint8_t>& code, Count v)
    {
        if (!partition || v > value || (v == value && code < rgs)) {
            partition = p;
            rgs = code;
            value = v;
        }
    }
};

} // namespace

PartitionArgmax argmax_partition(std::size_t n, const std::function<Count(const Partition&)>& score,
                                 const Limits& limits)
{
    require_cap(n, limits.max_partition_vertices, "partition enumeration over |V|");
    const unsigned threads = std::max(1U, limits.threads);
    if (threads == 1 || n < 4) {
        Best best;
        PartitionStream stream(n, limits.max_partition_vertices);
        while (stream.next()) best.offer(stream.current(), stream.current_rgs(), score(stream.current()));
        return {*best.partition, best.value};
    }

    std::vector<std::vector<std::uint8_t>> prefixes;
    std::vector<std::uint8_t> cur{0};
    collect_prefixes(std::min<std::size_t>(n, 4), cur, 1, prefixes);

    std::vector<Best> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < prefixes.size(); i += threads) {
                    PartitionStream stream(n, prefixes[i], limits.max_partition_vertices);
                    while (stream.next()) {
                        partial[w].offer(stream.current(), stream.current_rgs(), score(stream.current()));
                    }
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    Best best;
    for (const auto& b : partial) {
        if (b.partition) best.offer(*b.partition, b.rgs, b.value);
    }
    return {*best.partition, best.value};
}

} // namespace fforge
