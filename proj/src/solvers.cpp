#include "fforge/solvers.hpp"

#include <algorithm>
#include <random>

namespace fforge {

namespace {

using TreeEdges = std::vector<std::vector<EdgeId>>;

std::vector<EdgeId> map_ids(const std::vector<EdgeId>& local, const std::vector<EdgeId>& origin)
{
    std::vector<EdgeId> out;
    out.reserve(local.size());
    for (EdgeId e : local) out.push_back(origin.at(e));
    return out;
}

// i_{E'}(X) for every X, over the edges whose flag is set.
std::vector<Count> inside_counts(const Hypergraph& g, const std::vector<char>& alive)
{
    const std::size_t subsets = std::size_t{1} << g.num_vertices();
    std::vector<Count> inside(subsets, 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!alive[e]) continue;
        const VertexSet m = g.edge_mask(e);
        for (std::size_t x = 0; x < subsets; ++x) {
            if ((m & ~static_cast<VertexSet>(x)) == 0) ++inside[x];
        }
    }
    return inside;
}

std::optional<VertexSet> minimal_dangerous(const std::vector<Count>& inside, Count k, VertexSet tree, std::size_t n)
{
    std::optional<VertexSet> best;
    for (VertexSet x = 1; x <= full_vertex_set(n); ++x) {
        if ((x & ~tree) == 0) continue;
        if (inside[x] != extension_bound(k, tree, x)) continue;
        if (!best || popcount(x) < popcount(*best) || (popcount(x) == popcount(*best) && lex_less(x, *best))) best = x;
    }
    return best;
}

void require_extension(const std::vector<Count>& inside, Count k, VertexSet tree, std::size_t n)
{
    for (VertexSet x = 1; x <= full_vertex_set(n); ++x) {
        if (inside[x] > extension_bound(k, tree, x)) {
            throw InternalInconsistency("tree growth broke the extension condition at " + to_string(x));
        }
    }
}

// One spanning tree T with (G - E(T), k - 1) still packable. Requires
// |E| = k(|V| - 1) and the partition condition.
std::vector<EdgeId> grow_tree(const Hypergraph& g, Count k)
{
    const std::size_t n = g.num_vertices();
    std::vector<char> alive(g.num_edges(), 1);
    VertexSet tree = 1;
    std::vector<EdgeId> used;
    require_extension(inside_counts(g, alive), k, tree, n);
    while (tree != full_vertex_set(n)) {
        const auto inside = inside_counts(g, alive);
        const auto x = minimal_dangerous(inside, k, tree, n);
        if (!x) throw InternalInconsistency("no dangerous set while the tree is not spanning");
        const VertexSet in = *x & tree;
        const VertexSet out = *x & ~tree;
        std::optional<EdgeId> pick;
        for (EdgeId e = 0; e < g.num_edges() && !pick; ++e) {
            if (!alive[e]) continue;
            const auto [a, b] = g.ends(e);
            if ((contains(in, a) && contains(out, b)) || (contains(in, b) && contains(out, a))) pick = e;
        }
        if (!pick) throw InternalInconsistency("minimal dangerous set has no edge leaving the tree");
        const auto [a, b] = g.ends(*pick);
        tree |= (VertexSet{1} << a) | (VertexSet{1} << b);
        alive[*pick] = 0;
        used.push_back(*pick);
        require_extension(inside_counts(g, alive), k, tree, n);
    }
    std::sort(used.begin(), used.end());
    return used;
}

TreeEdges spanning_recurse(const Hypergraph& g, Count k, const Limits& limits)
{
    const std::size_t n = g.num_vertices();
    if (k == 0) return {};
    if (n == 1) return TreeEdges(static_cast<std::size_t>(k));
    const Count need = k * static_cast<Count>(n - 1);
    const auto m = static_cast<Count>(g.num_edges());
    if (m < need) throw InternalInconsistency("too few edges for a packing the condition promised");

    if (m > need) {
        std::optional<VertexSet> split;
        PartitionStream stream(n, limits.max_partition_vertices);
        while (!split && stream.next()) {
            const Partition& p = stream.current();
            if (p.is_whole()) continue;
            if (crossing_count(g, p) != k * static_cast<Count>(p.size() - 1)) continue;
            for (VertexSet x : p.blocks()) {
                if (popcount(x) > 1 && static_cast<std::size_t>(popcount(x)) < n) {
                    split = x;
                    break;
                }
            }
        }
        if (split) {
            const InducedSubgraph inner = induced_subgraph(g, *split);
            const Contraction outer = contract(g, *split);
            const TreeEdges a = spanning_recurse(inner.graph, k, limits);
            const TreeEdges b = spanning_recurse(outer.graph, k, limits);
            TreeEdges merged(static_cast<std::size_t>(k));
            for (std::size_t i = 0; i < merged.size(); ++i) {
                merged[i] = map_ids(a[i], inner.edge_origin);
                const auto rest = map_ids(b[i], outer.edge_origin);
                merged[i].insert(merged[i].end(), rest.begin(), rest.end());
                std::sort(merged[i].begin(), merged[i].end());
            }
            return merged;
        }
        std::vector<EdgeId> keep;
        for (EdgeId e = 1; e < g.num_edges(); ++e) keep.push_back(e);
        TreeEdges trees = spanning_recurse(g.edge_subgraph(keep), k, limits);
        for (auto& t : trees) t = map_ids(t, keep);
        return trees;
    }

    TreeEdges trees;
    trees.push_back(grow_tree(g, k));
    std::vector<EdgeId> keep;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!std::binary_search(trees[0].begin(), trees[0].end(), e)) keep.push_back(e);
    }
    for (const auto& t : spanning_recurse(g.edge_subgraph(keep), k - 1, limits)) trees.push_back(map_ids(t, keep));
    return trees;
}

std::vector<VertexPair> graph_ends(const Hypergraph& g, const std::vector<EdgeId>& edges)
{
    std::vector<VertexPair> out;
    out.reserve(edges.size());
    for (EdgeId e : edges) out.push_back(g.ends(e));
    return out;
}

ProblemSpec with_kind(const ProblemSpec& spec, ProblemKind kind)
{
    ProblemSpec copy = spec;
    copy.kind = kind;
    return copy;
}

Violation violation_or_bug(const ProblemSpec& spec, const char* what)
{
    if (auto v = check(spec)) return *v;
    throw InternalInconsistency(std::string(what) + " failed on an instance the conditions declare feasible");
}

// Backtracking assignment of edges to the trees rooted at the tokens of T.
class Decomposer {
public:
    Decomposer(const KtContext& ctx, ElementSet edges, ElementSet tokens)
        : ctx_(ctx), n_(ctx.graph().num_vertices()), rank_(ctx.base_rank())
    {
        for (std::size_t e : members(edges)) edges_.push_back(static_cast<EdgeId>(e));
        for (std::size_t t : members(tokens)) tokens_.push_back(static_cast<TokenId>(t));
        remaining_at_.assign(edges_.size() + 1, std::vector<int>(n_, 0));
        for (std::size_t i = edges_.size(); i-- > 0;) {
            remaining_at_[i] = remaining_at_[i + 1];
            const auto [a, b] = ctx_.graph().ends(edges_[i]);
            ++remaining_at_[i][a];
            ++remaining_at_[i][b];
        }
    }

    Packing run()
    {
        State s;
        s.parent.assign(tokens_.size(), std::vector<VertexId>(n_));
        s.touched.assign(tokens_.size(), 0);
        s.at.assign(n_, 0);
        for (std::size_t j = 0; j < tokens_.size(); ++j) {
            for (VertexId v = 0; v < n_; ++v) s.parent[j][v] = v;
            const VertexId r = ctx_.roots().vertex_of(tokens_[j]);
            s.touched[j] = VertexSet{1} << r;
            s.at[r] |= ElementSet{1} << tokens_[j];
        }
        for (VertexId v = 0; v < n_; ++v) {
            if (!ctx_.base().independent(s.at[v])) throw InvalidArgument("root tokens at a vertex are dependent");
        }
        s.owner.assign(edges_.size(), 0);
        if (!search(s, 0)) {
            throw InternalInconsistency("no decomposition exists for a basis of the rooted-tree matroid");
        }
        Packing packing;
        for (std::size_t j = 0; j < tokens_.size(); ++j) {
            RootedTree tree;
            tree.token = tokens_[j];
            tree.root = ctx_.roots().vertex_of(tokens_[j]);
            for (std::size_t i = 0; i < edges_.size(); ++i) {
                if (best_owner_[i] == j) tree.edges.push_back(edges_[i]);
            }
            tree.ends = graph_ends(ctx_.graph(), tree.edges);
            packing.members.push_back(std::move(tree));
        }
        return packing;
    }

private:
    struct State {
        std::vector<std::vector<VertexId>> parent;
        std::vector<VertexSet> touched;
        std::vector<ElementSet> at;
        std::vector<std::size_t> owner;
    };

    static VertexId find(std::vector<VertexId>& parent, VertexId v)
    {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }

    int components(State& s, std::size_t j) const
    {
        int count = 0;
        for (std::size_t v : members(s.touched[j])) {
            if (find(s.parent[j], static_cast<VertexId>(v)) == v) ++count;
        }
        return count;
    }

    bool feasible(State& s, std::size_t next) const
    {
        int missing = 0;
        for (std::size_t j = 0; j < tokens_.size(); ++j) missing += components(s, j) - 1;
        if (missing > static_cast<int>(edges_.size() - next)) return false;
        for (VertexId v = 0; v < n_; ++v) {
            if (popcount(s.at[v]) + remaining_at_[next][v] < rank_) return false;
        }
        return true;
    }

    bool search(State& s, std::size_t next)
    {
        if (!feasible(s, next)) return false;
        if (next == edges_.size()) {
            for (VertexId v = 0; v < n_; ++v) {
                if (popcount(s.at[v]) != rank_ || !ctx_.base().independent(s.at[v])) return false;
            }
            for (std::size_t j = 0; j < tokens_.size(); ++j) {
                if (components(s, j) != 1) return false;
            }
            best_owner_ = s.owner;
            return true;
        }
        const auto [a, b] = ctx_.graph().ends(edges_[next]);
        const VertexSet ends = (VertexSet{1} << a) | (VertexSet{1} << b);
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < tokens_.size(); ++j) {
            if (s.touched[j] & ends) order.push_back(j);
        }
        for (std::size_t j = 0; j < tokens_.size(); ++j) {
            if (!(s.touched[j] & ends)) order.push_back(j);
        }
        for (std::size_t j : order) {
            State t = s;
            if (find(t.parent[j], a) == find(t.parent[j], b)) continue;
            bool ok = true;
            for (VertexId w : {a, b}) {
                if (contains(t.touched[j], w)) continue;
                t.touched[j] |= VertexSet{1} << w;
                t.at[w] |= ElementSet{1} << tokens_[j];
                if (popcount(t.at[w]) > rank_ || !ctx_.base().independent(t.at[w])) ok = false;
            }
            if (!ok) continue;
            t.parent[j][find(t.parent[j], a)] = find(t.parent[j], b);
            t.owner[next] = j;
            if (search(t, next + 1)) return true;
        }
        return false;
    }

    const KtContext& ctx_;
    std::size_t n_;
    int rank_;
    std::vector<EdgeId> edges_;
    std::vector<TokenId> tokens_;
    std::vector<std::vector<int>> remaining_at_;
    std::vector<std::size_t> best_owner_;
};

std::vector<Partition> all_partitions(std::size_t n, const Limits& limits)
{
    std::vector<Partition> out;
    for_each_partition(n, limits.max_partition_vertices, [&](const Partition& p) { out.push_back(p); });
    return out;
}

#ifndef NDEBUG
void sample_supermodularity(const std::vector<Partition>& parts, const PartitionFunction& p, const char* name)
{
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    for (int i = 0; i < 64; ++i) {
        const Partition& a = parts[pick(rng)];
        const Partition& b = parts[pick(rng)];
        if (p(a) + p(b) > p(meet(a, b)) + p(join(a, b))) {
            throw InvalidArgument(std::string(name) + " is not supermodular on " + to_string(a) + ", " + to_string(b));
        }
    }
}
#endif

} // namespace

Count extension_bound(Count k, VertexSet tree_vertices, VertexSet x)
{
    return k * (popcount(x) - 1) - popcount(x & tree_vertices) + 1;
}

PackResult pack_spanning_trees(const Hypergraph& g, Count k, const Limits& limits)
{
    if (!g.is_graph()) throw InvalidArgument("spanning-tree packing needs a graph");
    if (k < 0) throw InvalidArgument("k must be non-negative");
    ProblemSpec spec = ProblemSpec::spanning(g, k);
    spec.limits = limits;
    if (auto v = check(spec)) return *v;
    Packing packing;
    for (auto& edges : spanning_recurse(g, k, limits)) {
        RootedTree tree;
        tree.ends = graph_ends(g, edges);
        tree.edges = std::move(edges);
        packing.members.push_back(std::move(tree));
    }
    return packing;
}

PackResult mbased_pack(const KtContext& ctx)
{
    ProblemSpec spec = ProblemSpec::rooted(ProblemKind::mbased, ctx.graph(), ctx.roots(), ctx.base());
    spec.limits = ctx.limits();
    if (ctx.dependent_root_vertex()) return violation_or_bug(spec, "root independence");
    const ElementSet tokens = ctx.roots().all();
    const int base = popcount(tokens);
    ElementSet edges = 0;
    for (EdgeId e = 0; e < ctx.num_edges(); ++e) {
        const ElementSet grown = edges | (ElementSet{1} << e);
        if (ctx.r_prime(grown, tokens) == popcount(grown) + base) edges = grown;
    }
    if (popcount(edges) + base == ctx.basis_size()) return decompose(ctx, edges, tokens);
    return violation_or_bug(spec, "complete M-based packing");
}

PackResult pack_bounded_k(const ProblemSpec& input)
{
    const ProblemSpec spec = with_kind(input, ProblemKind::bounded);
    if (!spec.k) throw InvalidArgument("bounded packing needs k");
    const SpecTerms terms(spec);
    if (auto v = check_pointwise(spec, terms)) return *v;

    const KtContext ctx(spec.instance, spec.roots, spec.matroid, spec.limits);
    const Count k = *spec.k;
    GenPartitionSpec parts;
    parts.size = k;
    ElementSet star = 0;
    for (VertexId v = 0; v < spec.num_vertices(); ++v) {
        const ElementSet part = spec.matroid.maximal_independent(spec.roots.at(v));
        if (part == 0) continue;
        star |= part;
        parts.parts.push_back(ctx.mixed(0, part));
        parts.lower.push_back(spec.lower(v));
        parts.upper.push_back(std::min<Count>(spec.upper(v).value_or(popcount(part)), popcount(part)));
    }
    if (spec.roots.all() & ~star) {
        parts.parts.push_back(ctx.mixed(0, spec.roots.all() & ~star));
        parts.lower.push_back(0);
        parts.upper.push_back(0);
    }
    if (!gen_partition_defect(parts).empty()) return violation_or_bug(spec, "generalized partition matroid");

    const Count edge_quota = std::min<Count>(ctx.basis_size() - k, static_cast<Count>(ctx.num_edges()));
    const Matroid second = direct_sum(make_uniform(ctx.all_edges(), static_cast<int>(edge_quota)),
                                      make_gen_partition(parts));
    const auto outcome = matroid_intersection(ctx.prime_matroid(), second, static_cast<std::size_t>(ctx.basis_size()));
    if (const auto* common = std::get_if<CommonIndependent>(&outcome)) {
        return decompose(ctx, ctx.edge_part(common->set), ctx.token_part(common->set));
    }
    return violation_or_bug(spec, "matroid intersection");
}

Packing decompose(const KtContext& ctx, ElementSet edges, ElementSet tokens)
{
    if ((edges & ~ctx.all_edges()) || (tokens & ~ctx.roots().all())) {
        throw InvalidArgument("decompose: edge or token outside the instance");
    }
    const int size = popcount(edges) + popcount(tokens);
    if (size != ctx.basis_size() || ctx.r_prime(edges, tokens) != size) {
        throw InvalidArgument("decompose: F ∪ T is not a basis of the rooted-tree matroid");
    }
    return Decomposer(ctx, edges, tokens).run();
}

PackResult pack_limited(const ProblemSpec& input)
{
    const ProblemSpec spec = with_kind(input, ProblemKind::limited);
    if (auto v = check(spec)) return *v;
    const SpecTerms terms(spec);
    const Count last = std::min(terms.beta(), terms.capacity());
    for (Count k = terms.alpha(); k <= last; ++k) {
        ProblemSpec exact = with_kind(spec, ProblemKind::bounded);
        exact.k = k;
        if (auto r = pack_bounded_k(exact); std::holds_alternative<Packing>(r)) return r;
    }
    throw InternalInconsistency("no root count in [alpha, beta] admits a packing the conditions promised");
}

TrimResult trim_hypergraph(const Hypergraph& h, const PartitionFunction& p1, const PartitionFunction& p2,
                           const Limits& limits)
{
    const std::size_t n = h.num_vertices();
    const std::vector<Partition> parts = all_partitions(n, limits);
#ifndef NDEBUG
    sample_supermodularity(parts, p1, "p1");
    sample_supermodularity(parts, p2, "p2");
#endif
    std::vector<Count> need(parts.size()), crossing(parts.size());
    std::optional<Violation> worst;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        need[i] = std::max(p1(parts[i]), p2(parts[i]));
        crossing[i] = crossing_count(h, parts[i]);
        const Count d = need[i] - crossing[i];
        if (d > 0 && (!worst || d > worst->deficit)) worst = Violation{Condition::cover_partition, parts[i], d};
    }
    if (worst) return *worst;

    std::vector<std::vector<VertexId>> current;
    for (EdgeId e = 0; e < h.num_edges(); ++e) current.push_back(h.edge(e));
    for (auto& z : current) {
        while (z.size() > 2) {
            VertexSet mask = 0;
            for (VertexId v : z) mask |= VertexSet{1} << v;
            bool removed = false;
            for (std::size_t pos = 0; pos < z.size() && !removed; ++pos) {
                const VertexSet smaller = mask & ~(VertexSet{1} << z[pos]);
                bool ok = true;
                for (std::size_t i = 0; i < parts.size() && ok; ++i) {
                    const Count after = crossing[i] - crosses(mask, parts[i]) + crosses(smaller, parts[i]);
                    ok = after >= need[i];
                }
                if (!ok) continue;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    crossing[i] += static_cast<Count>(crosses(smaller, parts[i])) - crosses(mask, parts[i]);
                }
                z.erase(z.begin() + static_cast<std::ptrdiff_t>(pos));
                removed = true;
            }
            if (!removed) throw InternalInconsistency("no vertex of a hyperedge can be dropped");
        }
    }
    Trimming out{Hypergraph(n, current), {}};
    for (EdgeId e = 0; e < out.graph.num_edges(); ++e) out.ends.push_back(out.graph.ends(e));
    return out;
}

CoverResult cover_partition_functions(std::size_t n, const PartitionFunction& p1, const PartitionFunction& p2,
                                      Count gamma, const Limits& limits)
{
    if (n == 0) throw InvalidArgument("cover needs at least one vertex");
    if (gamma < 0) throw InvalidArgument("gamma must be non-negative");
    const std::vector<Partition> parts = all_partitions(n, limits);
    std::vector<Count> v1(parts.size()), v2(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        v1[i] = p1(parts[i]);
        v2[i] = p2(parts[i]);
    }
    // parts[0] is {V}.
    if (const Count top = std::max(v1[0], v2[0]); top > 0) {
        return Violation{Condition::cover_partition, parts[0], top};
    }
    auto peak = [&] {
        std::size_t at = 0;
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (std::max(v1[i], v2[i]) > std::max(v1[at], v2[at])) at = i;
        }
        return at;
    };
    const std::size_t top = peak();
    Count level = std::max<Count>(0, std::max(v1[top], v2[top]));
    if (gamma < level) return Violation{Condition::cover_budget, parts[top], level - gamma};
    if (gamma > 0 && n < 2) throw InvalidArgument("no edge fits on fewer than two vertices");

    std::vector<VertexPair> added;
    while (level > 0) {
        std::vector<VertexSet> maximal;
        for (const auto* values : {&v1, &v2}) {
            std::optional<VertexSet> best;
            for (std::size_t i = 0; i < parts.size(); ++i) {
                if ((*values)[i] != level) continue;
                for (VertexSet x : parts[i].blocks()) {
                    if (!best || popcount(x) > popcount(*best) || (popcount(x) == popcount(*best) && lex_less(x, *best))) {
                        best = x;
                    }
                }
            }
            if (best) maximal.push_back(*best);
        }
        std::optional<VertexPair> pair;
        for (VertexId u = 0; u < n && !pair; ++u) {
            for (VertexId v = u + 1; v < n && !pair; ++v) {
                bool separated = true;
                for (VertexSet x : maximal) separated = separated && contains(x, u) != contains(x, v);
                if (separated) pair = VertexPair{u, v};
            }
        }
        if (!pair) throw InternalInconsistency("no pair is separated by both maximal sets");
        added.push_back(*pair);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i].block_of(pair->first) != parts[i].block_of(pair->second)) {
                --v1[i];
                --v2[i];
            }
        }
        const std::size_t next = peak();
        const Count lowered = std::max<Count>(0, std::max(v1[next], v2[next]));
        if (lowered != level - 1) throw InternalInconsistency("an added edge failed to lower the cover requirement");
        level = lowered;
    }
    while (static_cast<Count>(added.size()) < gamma) added.emplace_back(0, 1);
    return added;
}

PackResult pack_limited_hyper(const ProblemSpec& input)
{
    const ProblemSpec spec = with_kind(input, ProblemKind::limited_hyper);
    if (auto v = check(spec)) return *v;
    const SpecTerms terms(spec);
    const auto trimmed = trim_hypergraph(
        spec.instance, [&](const Partition& p) { return terms.p1(p); },
        [&](const Partition& p) { return terms.p2(p); }, spec.limits);
    const auto* graph = std::get_if<Trimming>(&trimmed);
    if (!graph) throw InternalInconsistency("trimming failed on an instance the conditions declare feasible");
    ProblemSpec on_graph = with_kind(spec, ProblemKind::limited);
    on_graph.instance = graph->graph;
    auto result = pack_limited(on_graph);
    if (!std::holds_alternative<Packing>(result)) {
        throw InternalInconsistency("the trimmed graph admits no packing although it satisfies the conditions");
    }
    return result;
}

AugmentResult augment_hypergraph(const ProblemSpec& input)
{
    const ProblemSpec spec = with_kind(input, ProblemKind::augment);
    if (auto v = check(spec)) return *v;
    const SpecTerms terms(spec);
    const auto cover = cover_partition_functions(
        spec.num_vertices(),
        [&](const Partition& p) { return terms.p1(p) - crossing_count(spec.instance, p); },
        [&](const Partition& p) { return terms.p2(p) - crossing_count(spec.instance, p); }, *spec.gamma,
        spec.limits);
    const auto* added = std::get_if<std::vector<VertexPair>>(&cover);
    if (!added) throw InternalInconsistency("covering failed on an instance the conditions declare feasible");
    Augmentation out;
    out.added = *added;
    out.augmented = spec.instance.with_added_edges(out.added);
    ProblemSpec grown = with_kind(spec, ProblemKind::limited_hyper);
    grown.instance = out.augmented;
    grown.gamma.reset();
    auto packed = pack_limited_hyper(grown);
    auto* packing = std::get_if<Packing>(&packed);
    if (!packing) throw InternalInconsistency("the augmented instance admits no packing");
    out.packing = std::move(*packing);
    return out;
}

std::optional<Count> min_augmentation(const ProblemSpec& input)
{
    if (input.kind == ProblemKind::spanning) {
        // Only partition conditions exist; the largest deficit is the answer.
        const auto v = check(input);
        return v ? v->deficit : 0;
    }
    ProblemSpec spec = with_kind(input, ProblemKind::augment);
    spec.gamma = 0;
    while (true) {
        const auto v = check(spec);
        if (!v) return spec.gamma;
        if (v->condition != Condition::upper_partition && v->condition != Condition::lower_partition) {
            return std::nullopt;
        }
        *spec.gamma += v->deficit;
    }
}

} // namespace fforge
