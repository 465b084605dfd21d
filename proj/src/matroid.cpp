#include "fforge/matroid.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace fforge {

struct Matroid::Impl {
    ElementSet ground = 0;
    RankFn fn;
    std::string description;
    bool memoize = true;
    mutable std::shared_mutex mutex;
    mutable std::unordered_map<ElementSet, int> cache;
};

Matroid::Matroid() : Matroid(0, [](ElementSet) { return 0; }, "empty", false) {}

Matroid::Matroid(ElementSet ground, RankFn rank, std::string description, bool memoize)
{
    auto impl = std::make_shared<Impl>();
    impl->ground = ground;
    impl->fn = std::move(rank);
    impl->description = std::move(description);
    impl->memoize = memoize;
    impl_ = std::move(impl);
}

ElementSet Matroid::ground() const { return impl_->ground; }

const std::string& Matroid::description() const { return impl_->description; }

int Matroid::rank(ElementSet x) const
{
    if ((x & ~impl_->ground) != 0) {
        throw InvalidArgument("rank query outside the ground set of the " + impl_->description
                              + " matroid");
    }
    if (!impl_->memoize) return impl_->fn(x);
    {
        std::shared_lock lock(impl_->mutex);
        auto it = impl_->cache.find(x);
        if (it != impl_->cache.end()) return it->second;
    }
    const int r = impl_->fn(x);
    std::unique_lock lock(impl_->mutex);
    impl_->cache.emplace(x, r);
    return r;
}

ElementSet Matroid::maximal_independent(ElementSet x) const
{
    ElementSet out = 0;
    for (std::size_t e : members(x)) {
        const ElementSet trial = out | (ElementSet{1} << e);
        if (independent(trial)) out = trial;
    }
    return out;
}

Matroid make_free(ElementSet ground)
{
    return Matroid(ground, [](ElementSet x) { return popcount(x); }, "free", false);
}

Matroid make_uniform(ElementSet ground, int k)
{
    if (k < 0 || k > popcount(ground)) {
        throw InvalidArgument("uniform matroid rank " + std::to_string(k)
                              + " outside [0, |ground|]");
    }
    return Matroid(ground, [k](ElementSet x) { return std::min(popcount(x), k); },
                   "uniform rank " + std::to_string(k), false);
}

Matroid make_from_table(std::size_t n, std::vector<int> table)
{
    if (n > 20) throw CapExceeded("explicit rank tables are limited to 20 elements");
    if (table.size() != (std::size_t{1} << n)) {
        throw InvalidArgument("rank table must list all " + std::to_string(std::size_t{1} << n)
                              + " subsets");
    }
    auto shared = std::make_shared<const std::vector<int>>(std::move(table));
    return Matroid(full_element_set(n), [shared](ElementSet x) { return (*shared)[x]; },
                   "explicit table", false);
}

Matroid restrict(const Matroid& m, ElementSet t)
{
    if ((t & ~m.ground()) != 0) throw InvalidArgument("restriction set leaves the ground set");
    return Matroid(t, [m](ElementSet x) { return m.rank(x); }, m.description() + " restricted",
                   false);
}

Matroid contract(const Matroid& m, ElementSet x)
{
    if ((x & ~m.ground()) != 0) throw InvalidArgument("contraction set leaves the ground set");
    if (!m.independent(x)) throw InvalidArgument("cannot contract a dependent set");
    const int size = popcount(x);
    return Matroid(m.ground() & ~x, [m, x, size](ElementSet z) { return m.rank(x | z) - size; },
                   m.description() + " contracted", false);
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2)
{
    if ((m1.ground() & m2.ground()) != 0) {
        throw InvalidArgument("direct sum needs disjoint ground sets");
    }
    const ElementSet g1 = m1.ground();
    const ElementSet g2 = m2.ground();
    return Matroid(g1 | g2,
                   [m1, m2, g1, g2](ElementSet x) { return m1.rank(x & g1) + m2.rank(x & g2); },
                   "(" + m1.description() + ") + (" + m2.description() + ")", false);
}

std::string gen_partition_defect(const GenPartitionSpec& spec)
{
    const std::size_t n = spec.parts.size();
    if (spec.lower.size() != n || spec.upper.size() != n) {
        return "bounds must be given for every part";
    }
    ElementSet seen = 0;
    for (ElementSet part : spec.parts) {
        if ((seen & part) != 0) return "parts overlap";
        seen |= part;
    }
    Count lower_sum = 0;
    Count cap_sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (spec.lower[i] < 0 || spec.upper[i] < 0) return "negative bound on part " + std::to_string(i);
        const Count cap = std::min<Count>(spec.upper[i], popcount(spec.parts[i]));
        if (spec.lower[i] > cap) {
            return "lower bound " + std::to_string(spec.lower[i]) + " of part " + std::to_string(i)
                   + " exceeds min{upper, |part|} = " + std::to_string(cap);
        }
        lower_sum += spec.lower[i];
        cap_sum += cap;
    }
    if (lower_sum > spec.size) {
        return "sum of lower bounds " + std::to_string(lower_sum) + " exceeds size "
               + std::to_string(spec.size);
    }
    if (spec.size > cap_sum) {
        return "size " + std::to_string(spec.size) + " exceeds sum of min{upper, |part|} = "
               + std::to_string(cap_sum);
    }
    return {};
}

Matroid make_gen_partition(const GenPartitionSpec& spec)
{
    if (auto defect = gen_partition_defect(spec); !defect.empty()) {
        throw InvalidArgument("infeasible generalized partition matroid: " + defect);
    }
    ElementSet ground = 0;
    for (ElementSet part : spec.parts) ground |= part;
    return Matroid(
        ground,
        [spec](ElementSet z) {
            Count upper_total = 0;
            Count shortfall = 0;
            for (std::size_t i = 0; i < spec.parts.size(); ++i) {
                const Count hit = popcount(z & spec.parts[i]);
                upper_total += std::min(spec.upper[i], hit);
                shortfall += std::max<Count>(spec.lower[i] - hit, 0);
            }
            return static_cast<int>(std::min(upper_total, spec.size - shortfall));
        },
        "generalized partition", false);
}

namespace {

void require_same_ground(const Matroid& m1, const Matroid& m2)
{
    if (m1.ground() != m2.ground()) throw InvalidArgument("matroid intersection needs a common ground set");
}

struct Augmenter {
    const Matroid& m1;
    const Matroid& m2;
    ElementSet ground;
    ElementSet current = 0;

    // One BFS over the exchange graph. Returns false when no augmenting path
    // exists; then `reach_sink` holds the elements that can reach a sink.
    bool augment(ElementSet& reach_sink)
    {
        const ElementSet outside = ground & ~current;
        ElementSet sources = 0;
        ElementSet sinks = 0;
        for (std::size_t x : members(outside)) {
            const ElementSet bit = ElementSet{1} << x;
            if (m1.independent(current | bit)) sources |= bit;
            if (m2.independent(current | bit)) sinks |= bit;
        }

        // Arc a -> b. y in I, x outside: y -> x iff I-y+x in I1; x -> y iff I-y+x in I2.
        const auto arc = [&](std::size_t a, std::size_t b) {
            const ElementSet ba = ElementSet{1} << a;
            const ElementSet bb = ElementSet{1} << b;
            if (contains(current, a) && !contains(current, b)) {
                return m1.independent((current & ~ba) | bb);
            }
            if (!contains(current, a) && contains(current, b)) {
                return m2.independent((current & ~bb) | ba);
            }
            return false;
        };

        std::vector<int> parent(64, -1);
        ElementSet visited = sources;
        std::deque<std::size_t> queue;
        for (std::size_t s : members(sources)) queue.push_back(s);
        while (!queue.empty()) {
            const std::size_t a = queue.front();
            queue.pop_front();
            if (contains(sinks, a)) {
                for (int v = static_cast<int>(a); v != -1; v = parent[static_cast<std::size_t>(v)]) {
                    current ^= ElementSet{1} << v;
                }
                return true;
            }
            const ElementSet candidates = contains(current, a) ? outside : current;
            for (std::size_t b : members(candidates & ~visited)) {
                if (!arc(a, b)) continue;
                visited |= ElementSet{1} << b;
                parent[b] = static_cast<int>(a);
                queue.push_back(b);
            }
        }

        // Backward search from the sinks.
        reach_sink = sinks;
        std::deque<std::size_t> back;
        for (std::size_t s : members(sinks)) back.push_back(s);
        while (!back.empty()) {
            const std::size_t b = back.front();
            back.pop_front();
            const ElementSet candidates = contains(current, b) ? outside : current;
            for (std::size_t a : members(candidates & ~reach_sink)) {
                if (!arc(a, b)) continue;
                reach_sink |= ElementSet{1} << a;
                back.push_back(a);
            }
        }
        return false;
    }
};

} // namespace

MaxCommonIndependent max_common_independent(const Matroid& m1, const Matroid& m2)
{
    require_same_ground(m1, m2);
    Augmenter aug{m1, m2, m1.ground()};
    ElementSet z = 0;
    while (aug.augment(z)) {}
    const ElementSet rest = m1.ground() & ~z;
    if (m1.rank(z) + m2.rank(rest) != popcount(aug.current)) {
        throw InternalInconsistency("exchange-graph certificate does not match the common independent set");
    }
    return {aug.current, z};
}

IntersectionOutcome matroid_intersection(const Matroid& m1, const Matroid& m2, std::size_t target)
{
    require_same_ground(m1, m2);
    const ElementSet ground = m1.ground();
    Augmenter aug{m1, m2, ground};
    ElementSet z = 0;
    for (;;) {
        if (static_cast<std::size_t>(popcount(aug.current)) >= target) {
            // Paths add exactly one element, so the set has exactly `target` elements.
            return CommonIndependent{aug.current};
        }
        if (!aug.augment(z)) break;
    }
    const auto value = [&](ElementSet s) { return m1.rank(s) + m2.rank(ground & ~s); };
    if (static_cast<std::size_t>(value(z)) >= target) {
        throw InternalInconsistency("matroid intersection stopped without a deficiency certificate");
    }
    // Drop elements while the inequality stays strict.
    for (std::size_t e : members(z)) {
        const ElementSet smaller = z & ~(ElementSet{1} << e);
        if (static_cast<std::size_t>(value(smaller)) < target) z = smaller;
    }
    return DeficiencyCertificate{z, value(z)};
}

} // namespace fforge
