#include "fforge/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace fforge::oracle {

namespace {

struct UnionFind {
    std::vector<std::size_t> up;

    explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), std::size_t{0}); }

    std::size_t root(std::size_t v)
    {
        while (up[v] != v) v = up[v] = up[up[v]];
        return v;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = root(a);
        b = root(b);
        if (a == b) return false;
        up[a] = b;
        return true;
    }
};

std::string set_text(std::uint64_t s)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (std::size_t i = 0; i < 64; ++i) {
        if (!((s >> i) & 1U)) continue;
        out << (first ? "" : ",") << i;
        first = false;
    }
    out << '}';
    return out.str();
}

std::string partition_text(const Partition& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.blocks().size(); ++i) out += (i ? " " : "") + set_text(p.blocks()[i]);
    return out + "]";
}

bool rooted(ProblemKind kind) { return kind != ProblemKind::spanning; }

Count upper_at(const ProblemSpec& spec, VertexId v, Count fallback)
{
    return v < spec.g.size() && spec.g[v] ? *spec.g[v] : fallback;
}

// Vertices a member reaches: its root plus the ends of its trimmed edges.
VertexSet member_vertices(const RootedTree& tree)
{
    VertexSet s = VertexSet{1} << tree.root;
    for (const auto& [a, b] : tree.ends) s |= (VertexSet{1} << a) | (VertexSet{1} << b);
    return s;
}

// Root count constraints of the kind, applied to a candidate root set.
bool root_count_ok(const ProblemSpec& spec, std::size_t count)
{
    const auto c = static_cast<Count>(count);
    switch (spec.kind) {
    case ProblemKind::spanning:
        return true;
    case ProblemKind::mbased:
        return count == spec.roots.size();
    case ProblemKind::bounded:
        return c == spec.k.value_or(-1);
    default:
        return c >= spec.alpha.value_or(0) && (!spec.beta || c <= *spec.beta);
    }
}

} // namespace

bool ValidationReport::has(const std::string& rule) const
{
    return std::any_of(failures.begin(), failures.end(), [&](const auto& f) { return f.rule == rule; });
}

ValidationReport validate_packing(const Packing& packing, const ProblemSpec& spec)
{
    ValidationReport report;
    const Hypergraph& h = spec.instance;
    const std::size_t n = h.num_vertices();

    for (std::size_t i = 0; i < packing.members.size(); ++i) {
        const RootedTree& t = packing.members[i];
        if (t.root >= n) report.fail("trim", "member " + std::to_string(i) + " root outside V");
        if (t.ends.size() != t.edges.size()) {
            report.fail("trim", "member " + std::to_string(i) + " lists " + std::to_string(t.ends.size()) +
                                    " ends for " + std::to_string(t.edges.size()) + " edges");
            continue;
        }
        for (std::size_t j = 0; j < t.edges.size(); ++j) {
            const EdgeId e = t.edges[j];
            const auto [a, b] = t.ends[j];
            if (e >= h.num_edges() || a == b || a >= n || b >= n || !contains(h.edge_mask(e), a) ||
                !contains(h.edge_mask(e), b)) {
                report.fail("trim", "member " + std::to_string(i) + " edge " + std::to_string(e));
            }
        }
    }
    if (!report.ok()) return report;

    for (std::size_t i = 0; i < packing.members.size(); ++i) {
        const RootedTree& t = packing.members[i];
        UnionFind uf(n);
        for (const auto& [a, b] : t.ends) {
            if (!uf.unite(a, b)) report.fail("forest", "member " + std::to_string(i) + " has a cycle");
        }
        for (const auto& [a, b] : t.ends) {
            if (uf.root(a) != uf.root(t.root)) {
                report.fail("component-root", "member " + std::to_string(i) + " vertex " + std::to_string(a));
                break;
            }
        }
    }

    std::map<EdgeId, std::size_t> owner;
    for (std::size_t i = 0; i < packing.members.size(); ++i) {
        for (EdgeId e : packing.members[i].edges) {
            if (!owner.emplace(e, i).second) report.fail("edge-disjoint", "edge " + std::to_string(e));
        }
    }

    ElementSet used = 0;
    if (rooted(spec.kind)) {
        for (std::size_t i = 0; i < packing.members.size(); ++i) {
            const RootedTree& t = packing.members[i];
            if (!t.token || *t.token >= spec.roots.size() || spec.roots.vertex_of(*t.token) != t.root ||
                contains(used, *t.token)) {
                report.fail("root-subset", "member " + std::to_string(i));
                continue;
            }
            used |= ElementSet{1} << *t.token;
        }
        if (spec.kind == ProblemKind::mbased && used != spec.roots.all()) report.fail("complete", set_text(used));
    } else {
        for (std::size_t i = 0; i < packing.members.size(); ++i) {
            if (member_vertices(packing.members[i]) != full_vertex_set(n)) {
                report.fail("spanning", "member " + std::to_string(i));
            }
        }
    }
    if (!report.ok()) return report;

    if (rooted(spec.kind)) {
        const int target = spec.matroid.full_rank();
        for (VertexId v = 0; v < n; ++v) {
            ElementSet through = 0;
            for (const auto& t : packing.members) {
                if (contains(member_vertices(t), v)) through |= ElementSet{1} << *t.token;
            }
            if (popcount(through) != target || spec.matroid.rank(through) != target) {
                report.fail("basis", "vertex " + std::to_string(v));
            }
        }
        const Count inf = static_cast<Count>(spec.roots.size()) + 1;
        for (VertexId v = 0; v < n; ++v) {
            Count here = 0;
            for (const auto& t : packing.members) here += t.root == v;
            const Count lo = v < spec.f.size() ? spec.f[v] : 0;
            if (here < lo) report.fail("f-bound", "vertex " + std::to_string(v));
            if (here > upper_at(spec, v, inf)) report.fail("g-bound", "vertex " + std::to_string(v));
        }
        const auto total = static_cast<Count>(packing.members.size());
        const bool limited = spec.kind == ProblemKind::limited || spec.kind == ProblemKind::limited_hyper ||
                             spec.kind == ProblemKind::augment;
        if (limited && total < spec.alpha.value_or(0)) report.fail("alpha", std::to_string(total));
        if (limited && spec.beta && total > *spec.beta) report.fail("beta", std::to_string(total));
    }
    if ((spec.kind == ProblemKind::spanning || spec.kind == ProblemKind::bounded) &&
        static_cast<Count>(packing.members.size()) != spec.k.value_or(-1)) {
        report.fail("k", std::to_string(packing.members.size()));
    }
    return report;
}

namespace {

// Depth-first assignment of hyperedges to trees. Each hyperedge is skipped
// or given to one tree together with a trimmed pair.
class Search {
public:
    Search(const ProblemSpec& spec, std::vector<VertexId> roots, std::vector<std::optional<TokenId>> tokens,
           Count edge_total, std::optional<ElementSet> exact_edges)
        : spec_(spec), n_(spec.instance.num_vertices()), roots_(std::move(roots)), tokens_(std::move(tokens)),
          edge_total_(edge_total), exact_(exact_edges)
    {
        target_rank_ = rooted(spec.kind) ? spec.matroid.full_rank() : 0;
    }

    bool run()
    {
        const std::size_t m = spec_.instance.num_edges();
        if (exact_ && static_cast<Count>(popcount(*exact_)) != edge_total_) return false;
        if (!exact_ && static_cast<Count>(m) < edge_total_) return false;
        State s;
        s.uf.assign(roots_.size(), UnionFind(n_));
        s.touched.assign(roots_.size(), 0);
        s.through.assign(n_, 0);
        for (std::size_t j = 0; j < roots_.size(); ++j) {
            s.touched[j] = VertexSet{1} << roots_[j];
            if (tokens_[j]) s.through[roots_[j]] |= ElementSet{1} << *tokens_[j];
        }
        s.packing.members.resize(roots_.size());
        for (std::size_t j = 0; j < roots_.size(); ++j) {
            s.packing.members[j].root = roots_[j];
            s.packing.members[j].token = tokens_[j];
        }
        return step(s, 0);
    }

private:
    struct State {
        std::vector<UnionFind> uf;
        std::vector<VertexSet> touched;
        std::vector<ElementSet> through;
        Packing packing;
        Count used = 0;
    };

    bool through_ok(ElementSet through) const
    {
        if (!rooted(spec_.kind)) return true;
        return popcount(through) <= target_rank_ && spec_.matroid.rank(through) == popcount(through);
    }

    bool step(State& s, std::size_t e)
    {
        const std::size_t m = spec_.instance.num_edges();
        const Count left = static_cast<Count>(m - e);
        if (s.used > edge_total_ || s.used + left < edge_total_) return false;
        if (e == m) return validate_packing(s.packing, spec_).ok();

        const bool must = exact_ && contains(*exact_, e);
        const bool may = !exact_ || must;
        if (!must) {
            if (step(s, e + 1)) return true;
        }
        if (!may) return false;
        const auto& z = spec_.instance.edge(static_cast<EdgeId>(e));
        for (std::size_t j = 0; j < roots_.size(); ++j) {
            // Spanning trees are interchangeable: open tree j only after j-1.
            if (!rooted(spec_.kind) && j > 0 && s.packing.members[j - 1].edges.empty() &&
                s.packing.members[j].edges.empty()) {
                break;
            }
            for (std::size_t x = 0; x < z.size(); ++x) {
                for (std::size_t y = x + 1; y < z.size(); ++y) {
                    const VertexId a = z[x], b = z[y];
                    State t = s;
                    if (!t.uf[j].unite(a, b)) continue;
                    bool ok = true;
                    for (VertexId w : {a, b}) {
                        if (contains(t.touched[j], w)) continue;
                        t.touched[j] |= VertexSet{1} << w;
                        if (tokens_[j]) t.through[w] |= ElementSet{1} << *tokens_[j];
                        ok = ok && through_ok(t.through[w]);
                    }
                    if (!ok) continue;
                    t.packing.members[j].edges.push_back(static_cast<EdgeId>(e));
                    t.packing.members[j].ends.emplace_back(a, b);
                    ++t.used;
                    if (step(t, e + 1)) return true;
                }
            }
        }
        return false;
    }

    const ProblemSpec& spec_;
    std::size_t n_;
    std::vector<VertexId> roots_;
    std::vector<std::optional<TokenId>> tokens_;
    Count edge_total_;
    std::optional<ElementSet> exact_;
    int target_rank_ = 0;
};

bool exists_unchecked(const ProblemSpec& spec)
{
    const std::size_t n = spec.instance.num_vertices();
    if (!rooted(spec.kind)) {
        const Count k = spec.k.value_or(0);
        std::vector<VertexId> roots(static_cast<std::size_t>(k), 0);
        std::vector<std::optional<TokenId>> tokens(roots.size());
        return Search(spec, roots, tokens, k * static_cast<Count>(n - 1), std::nullopt).run();
    }
    const int target = spec.matroid.full_rank();
    const std::size_t s = spec.roots.size();
    for (ElementSet t = 0; t < (ElementSet{1} << s); ++t) {
        if (!root_count_ok(spec, static_cast<std::size_t>(popcount(t)))) continue;
        if (spec.matroid.rank(t) != target) continue;
        bool ok = true;
        for (VertexId v = 0; v < n && ok; ++v) {
            const ElementSet here = t & spec.roots.at(v);
            const Count count = popcount(here);
            const Count lo = v < spec.f.size() ? spec.f[v] : 0;
            ok = spec.matroid.rank(here) == count && count >= lo && count <= upper_at(spec, v, count);
        }
        if (!ok) continue;
        std::vector<VertexId> roots;
        std::vector<std::optional<TokenId>> tokens;
        for (std::size_t tok : members(t)) {
            roots.push_back(spec.roots.vertex_of(static_cast<TokenId>(tok)));
            tokens.emplace_back(static_cast<TokenId>(tok));
        }
        const Count edges = static_cast<Count>(target) * static_cast<Count>(n) - popcount(t);
        if (Search(spec, roots, tokens, edges, std::nullopt).run()) return true;
    }
    return false;
}

void require(bool ok, const std::string& what)
{
    if (!ok) throw CapExceeded("oracle refuses: " + what);
}

void enumerate_into(std::size_t n, std::vector<std::uint8_t>& rgs, std::uint8_t top, std::vector<Partition>& out)
{
    if (rgs.size() == n) {
        out.push_back(Partition::from_rgs(rgs));
        return;
    }
    for (std::uint8_t b = 0; b <= top; ++b) {
        rgs.push_back(b);
        enumerate_into(n, rgs, std::max<std::uint8_t>(top, static_cast<std::uint8_t>(b + 1)), out);
        rgs.pop_back();
    }
}

} // namespace

bool brute_exists_packing(const ProblemSpec& spec, const BruteCaps& caps)
{
    require(spec.instance.num_vertices() <= caps.vertices, "|V| above " + std::to_string(caps.vertices));
    require(spec.instance.num_edges() <= caps.hyperedges, "|E| above " + std::to_string(caps.hyperedges));
    require(spec.roots.size() <= caps.roots, "|S| above " + std::to_string(caps.roots));
    if (spec.kind == ProblemKind::spanning) {
        require(spec.k.value_or(0) <= 4, "k above 4");
        if (!spec.k) throw InvalidArgument("spanning problems need k");
    }
    if (spec.kind == ProblemKind::bounded && !spec.k) throw InvalidArgument("bounded problems need k");
    if (spec.instance.num_vertices() == 0) throw InvalidArgument("an instance needs at least one vertex");
    return exists_unchecked(spec);
}

bool brute_exists_basis_packing(const Hypergraph& g, const RootMultiset& roots, const Matroid& m, ElementSet edges,
                                ElementSet tokens, const BruteCaps& caps)
{
    require(g.num_vertices() <= caps.vertices, "|V| above " + std::to_string(caps.vertices));
    require(g.num_edges() <= caps.hyperedges, "|E| above " + std::to_string(caps.hyperedges));
    require(roots.size() <= caps.roots, "|S| above " + std::to_string(caps.roots));
    ProblemSpec spec = ProblemSpec::rooted(ProblemKind::limited, g, roots, m);
    std::vector<VertexId> at;
    std::vector<std::optional<TokenId>> toks;
    for (std::size_t t : members(tokens)) {
        at.push_back(roots.vertex_of(static_cast<TokenId>(t)));
        toks.emplace_back(static_cast<TokenId>(t));
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (!m.independent(tokens & roots.at(v))) return false;
    }
    const Count total = static_cast<Count>(m.full_rank()) * static_cast<Count>(g.num_vertices()) - popcount(tokens);
    return Search(spec, at, toks, total, edges).run();
}

ValidationReport verify_matroid_axioms(const RankFunction& rank, std::size_t ground_size)
{
    require(ground_size <= 10, "matroid ground above 10 elements");
    ValidationReport report;
    const std::size_t subsets = std::size_t{1} << ground_size;
    std::vector<int> r(subsets);
    for (std::size_t x = 0; x < subsets; ++x) r[x] = rank(x);
    for (std::size_t x = 0; x < subsets; ++x) {
        if (r[x] < 0) {
            report.fail("non-negative", set_text(x));
            break;
        }
    }
    for (std::size_t x = 0; x < subsets; ++x) {
        if (r[x] > popcount(x)) {
            report.fail("subcardinal", set_text(x));
            break;
        }
    }
    [&] {
        for (std::size_t x = 0; x < subsets; ++x) {
            for (std::size_t e = 0; e < ground_size; ++e) {
                if (!contains(x, e) && r[x] > r[x | (std::size_t{1} << e)]) {
                    report.fail("monotone", set_text(x) + " + " + std::to_string(e));
                    return;
                }
            }
        }
    }();
    [&] {
        for (std::size_t x = 0; x < subsets; ++x) {
            for (std::size_t y = 0; y < subsets; ++y) {
                if (r[x] + r[y] < r[x & y] + r[x | y]) {
                    report.fail("submodular", set_text(x) + " " + set_text(y));
                    return;
                }
            }
        }
    }();
    return report;
}

std::vector<Partition> enumerate_partitions(std::size_t n)
{
    std::vector<Partition> out;
    if (n == 0) return out;
    std::vector<std::uint8_t> rgs;
    enumerate_into(n, rgs, 0, out);
    return out;
}

std::pair<Partition, Partition> uncross_pair(const Partition& p1, const Partition& p2)
{
    std::vector<VertexSet> family = p1.blocks();
    family.insert(family.end(), p2.blocks().begin(), p2.blocks().end());
    auto proper = [](VertexSet a, VertexSet b) { return (a & b) && (a & ~b) && (b & ~a); };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < family.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < family.size() && !changed; ++j) {
                if (!proper(family[i], family[j])) continue;
                const VertexSet a = family[i], b = family[j];
                family[i] = a & b;
                family[j] = a | b;
                changed = true;
            }
        }
    }
    std::vector<VertexSet> minimal, maximal;
    for (VertexSet x : family) {
        bool is_min = true, is_max = true;
        for (VertexSet y : family) {
            if (y != x && (y & ~x) == 0) is_min = false;
            if (y != x && (x & ~y) == 0) is_max = false;
        }
        if (is_min && std::find(minimal.begin(), minimal.end(), x) == minimal.end()) minimal.push_back(x);
        if (is_max && std::find(maximal.begin(), maximal.end(), x) == maximal.end()) maximal.push_back(x);
    }
    return {Partition(p1.ground_size(), minimal), Partition(p1.ground_size(), maximal)};
}

ValidationReport verify_partition_supermodular(const std::function<Count(const Partition&)>& p, std::size_t n)
{
    require(n <= 5, "partition supermodularity above n = 5");
    ValidationReport report;
    const auto parts = enumerate_partitions(n);
    std::vector<Count> value(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) value[i] = p(parts[i]);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = 0; j < parts.size(); ++j) {
            const auto [lo, hi] = uncross_pair(parts[i], parts[j]);
            if (value[i] + value[j] > p(lo) + p(hi)) {
                report.fail("supermodular", partition_text(parts[i]) + " " + partition_text(parts[j]));
                return report;
            }
        }
    }
    return report;
}

std::optional<Count> brute_min_augmentation(const ProblemSpec& spec)
{
    const std::size_t n = spec.instance.num_vertices();
    require(n <= 4, "augmentation search above |V| = 4");
    require(spec.roots.size() <= 4, "augmentation search above |S| = 4");
    ProblemSpec base = spec;
    if (base.kind == ProblemKind::augment) base.kind = ProblemKind::limited_hyper;
    base.gamma.reset();
    const Count useful = rooted(base.kind) ? static_cast<Count>(base.matroid.full_rank()) * static_cast<Count>(n)
                                           : base.k.value_or(0) * static_cast<Count>(n - 1);
    std::vector<VertexPair> pairs;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    for (Count m = 0; m <= useful; ++m) {
        if (m > 0 && pairs.empty()) break;
        // Multisets of m pairs as non-decreasing index sequences.
        std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
        while (true) {
            std::vector<VertexPair> extra;
            for (std::size_t i : pick) extra.push_back(pairs[i]);
            ProblemSpec grown = base;
            grown.instance = spec.instance.with_added_edges(extra);
            if (exists_unchecked(grown)) return m;
            std::size_t pos = pick.size();
            while (pos > 0 && pick[pos - 1] + 1 == pairs.size()) --pos;
            if (pos == 0) break;
            ++pick[pos - 1];
            for (std::size_t i = pos; i < pick.size(); ++i) pick[i] = pick[pos - 1];
        }
    }
    return std::nullopt;
}

} // namespace fforge::oracle
