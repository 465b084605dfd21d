#include "fforge/feasibility.hpp"

#include <algorithm>
#include <array>

namespace fforge {

namespace {

constexpr std::array<std::pair<ProblemKind, std::string_view>, 6> kKindNames{{
    {ProblemKind::spanning, "spanning"},
    {ProblemKind::mbased, "mbased"},
    {ProblemKind::bounded, "bounded"},
    {ProblemKind::limited, "limited"},
    {ProblemKind::limited_hyper, "limited-hyper"},
    {ProblemKind::augment, "augment"},
}};

constexpr std::array<std::pair<Condition, std::string_view>, 12> kConditionNames{{
    {Condition::root_independence, "root-independence"},
    {Condition::lower_vs_capacity, "lower-vs-capacity"},
    {Condition::count_vs_capacity, "count-vs-capacity"},
    {Condition::alpha_vs_capacity, "alpha-vs-capacity"},
    {Condition::alpha_vs_beta, "alpha-vs-beta"},
    {Condition::subset_root_deficit, "subset-root-deficit"},
    {Condition::spanning_partition, "spanning-partition"},
    {Condition::kt_partition, "kt-partition"},
    {Condition::upper_partition, "upper-partition"},
    {Condition::lower_partition, "lower-partition"},
    {Condition::cover_partition, "cover-partition"},
    {Condition::cover_budget, "cover-budget"},
}};

bool uses_roots(ProblemKind kind) { return kind != ProblemKind::spanning; }

void validate(const ProblemSpec& spec)
{
    const std::size_t n = spec.num_vertices();
    if (n == 0) throw InvalidArgument("an instance needs at least one vertex");
    if (spec.f.size() > n || spec.g.size() > n) throw InvalidArgument("bound maps list more vertices than exist");
    for (Count v : spec.f) {
        if (v < 0) throw InvalidArgument("f must be non-negative");
    }
    for (const auto& v : spec.g) {
        if (v && *v < 0) throw InvalidArgument("g must be non-negative");
    }
    for (const auto* v : {&spec.alpha, &spec.beta, &spec.k, &spec.gamma}) {
        if (*v && **v < 0) throw InvalidArgument("alpha, beta, k and gamma must be non-negative");
    }
    if ((spec.kind == ProblemKind::spanning || spec.kind == ProblemKind::bounded) && !spec.k) {
        throw InvalidArgument(std::string(to_string(spec.kind)) + " problems need k");
    }
    if (spec.kind == ProblemKind::augment && !spec.gamma) throw InvalidArgument("augment problems need gamma");
    if (uses_roots(spec.kind)) {
        if (spec.roots.num_vertices() != n) throw InvalidArgument("root multiset and instance disagree on |V|");
        if (spec.matroid.ground() != spec.roots.all()) {
            throw InvalidArgument("the matroid ground set must be exactly the root tokens");
        }
    }
    if ((spec.kind == ProblemKind::mbased || spec.kind == ProblemKind::bounded ||
         spec.kind == ProblemKind::limited) &&
        !spec.instance.is_graph()) {
        throw InvalidArgument(std::string(to_string(spec.kind)) + " problems need a graph");
    }
}

Count gamma_of(const ProblemSpec& spec)
{
    return spec.kind == ProblemKind::augment ? spec.gamma.value_or(0) : 0;
}

} // namespace

std::string_view to_string(ProblemKind kind)
{
    for (const auto& [k, name] : kKindNames) {
        if (k == kind) return name;
    }
    return "?";
}

std::optional<ProblemKind> parse_problem_kind(std::string_view text)
{
    for (const auto& [k, name] : kKindNames) {
        if (name == text) return k;
    }
    return std::nullopt;
}

std::string_view to_string(Condition c)
{
    for (const auto& [k, name] : kConditionNames) {
        if (k == c) return name;
    }
    return "?";
}

std::optional<Condition> parse_condition(std::string_view text)
{
    for (const auto& [k, name] : kConditionNames) {
        if (name == text) return k;
    }
    return std::nullopt;
}

ProblemSpec ProblemSpec::spanning(Hypergraph g, Count k)
{
    ProblemSpec spec;
    spec.kind = ProblemKind::spanning;
    spec.roots = RootMultiset(g.num_vertices(), {});
    spec.matroid = make_free(0);
    spec.instance = std::move(g);
    spec.k = k;
    return spec;
}

ProblemSpec ProblemSpec::rooted(ProblemKind kind, Hypergraph h, RootMultiset roots, Matroid m)
{
    ProblemSpec spec;
    spec.kind = kind;
    spec.instance = std::move(h);
    spec.roots = std::move(roots);
    spec.matroid = std::move(m);
    return spec;
}

SpecTerms::SpecTerms(const ProblemSpec& spec) : spec_(&spec), n_(spec.num_vertices())
{
    require_cap(n_, spec.limits.max_subset_vertices, "|V| for subset scans");
    const std::size_t subsets = std::size_t{1} << n_;
    const bool rooted = uses_roots(spec.kind);
    rank_total_ = rooted ? spec.matroid.full_rank() : 0;
    infinity_ = rank_total_ * static_cast<Count>(n_) + 1;

    std::vector<Count> f_vertex(n_), g_vertex(n_);
    for (VertexId v = 0; v < n_; ++v) {
        f_vertex[v] = spec.lower(v);
        g_vertex[v] = spec.upper(v).value_or(infinity_);
    }

    rank_.assign(subsets, 0);
    f_.assign(subsets, 0);
    g_.assign(subsets, 0);
    for (std::size_t y = 1; y < subsets; ++y) {
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(y));
        const std::size_t rest = y & (y - 1);
        f_[y] = f_[rest] + f_vertex[low];
        g_[y] = g_[rest] + g_vertex[low];
        rank_[y] = rooted ? spec.matroid.rank(spec.roots.restrict_to(static_cast<VertexSet>(y))) : 0;
    }

    capacity_ = 0;
    for (VertexId v = 0; v < n_; ++v) capacity_ += std::min(rank_[std::size_t{1} << v], g_vertex[v]);

    upper_.resize(subsets);
    lower_.resize(subsets);
    for (std::size_t y = 0; y < subsets; ++y) {
        upper_[y] = rank_total_ + g_[y] - rank_[y];
        lower_[y] = rank_total_ + f_[y] - rank_[y];
    }
    for (std::size_t bit = 0; bit < n_; ++bit) {
        for (std::size_t x = 0; x < subsets; ++x) {
            if (contains(x, bit)) {
                upper_[x] = std::max(upper_[x], upper_[x ^ (std::size_t{1} << bit)]);
                lower_[x] = std::max(lower_[x], lower_[x ^ (std::size_t{1} << bit)]);
            }
        }
    }
}

Count SpecTerms::rank_of(VertexSet y) const { return rank_.at(y); }
Count SpecTerms::f_of(VertexSet y) const { return f_.at(y); }
Count SpecTerms::g_of(VertexSet y) const { return g_.at(y); }

Count SpecTerms::alpha() const { return spec_->alpha.value_or(0); }

Count SpecTerms::beta() const
{
    if (spec_->beta) return *spec_->beta;
    return std::max(alpha(), capacity_);
}

Count SpecTerms::block_max(VertexSet x, InnerMode mode) const
{
    return mode == InnerMode::upper ? upper_.at(x) : lower_.at(x);
}

Count SpecTerms::p1(const Partition& p) const
{
    Count total = -g_of(full_vertex_set(n_));
    for (VertexSet x : p.blocks()) total += upper_[x];
    return total;
}

Count SpecTerms::p2(const Partition& p) const { return p2_with(p, beta()); }

Count SpecTerms::p2_with(const Partition& p, Count beta) const
{
    Count total = -beta;
    for (VertexSet x : p.blocks()) total += lower_[x];
    return total;
}

InnerMax inner_max(VertexSet x, const ProblemSpec& spec, InnerMode mode)
{
    const std::size_t n = spec.num_vertices();
    if (x & ~full_vertex_set(n)) throw InvalidArgument("inner_max: X is not a vertex subset");
    require_cap(static_cast<std::size_t>(popcount(x)), spec.limits.max_subset_vertices, "|X| for inner maxima");
    const Count total = spec.matroid.full_rank();
    const Count inf = total * static_cast<Count>(n) + 1;
    InnerMax best{0, 0};
    bool first = true;
    // Submasks of x, visited from x down to the empty set.
    VertexSet y = x;
    while (true) {
        Count bound = 0;
        for (std::size_t v : members(y)) {
            const auto vid = static_cast<VertexId>(v);
            bound += mode == InnerMode::upper ? spec.upper(vid).value_or(inf) : spec.lower(vid);
        }
        const Count value = total + bound - spec.matroid.rank(spec.roots.restrict_to(y));
        if (first || value > best.value || (value == best.value && lex_less(y, best.argmax))) {
            best = {value, y};
            first = false;
        }
        if (y == 0) break;
        y = (y - 1) & x;
    }
    return best;
}

Count eval_p1(const Partition& p, const ProblemSpec& spec)
{
    const Count inf = spec.matroid.full_rank() * static_cast<Count>(spec.num_vertices()) + 1;
    Count total = 0;
    for (VertexId v = 0; v < spec.num_vertices(); ++v) total -= spec.upper(v).value_or(inf);
    for (VertexSet x : p.blocks()) total += inner_max(x, spec, InnerMode::upper).value;
    return total;
}

Count eval_p2(const Partition& p, const ProblemSpec& spec)
{
    Count total = -SpecTerms(spec).beta();
    for (VertexSet x : p.blocks()) total += inner_max(x, spec, InnerMode::lower).value;
    return total;
}

std::vector<Condition> conditions_for(ProblemKind kind)
{
    using C = Condition;
    switch (kind) {
    case ProblemKind::spanning:
        return {C::spanning_partition};
    case ProblemKind::mbased:
        return {C::root_independence, C::kt_partition};
    case ProblemKind::bounded:
        return {C::lower_vs_capacity, C::count_vs_capacity, C::upper_partition, C::lower_partition};
    case ProblemKind::limited:
    case ProblemKind::limited_hyper:
        return {C::lower_vs_capacity, C::alpha_vs_beta, C::alpha_vs_capacity, C::upper_partition,
                C::lower_partition};
    case ProblemKind::augment:
        return {C::lower_vs_capacity, C::alpha_vs_beta, C::alpha_vs_capacity, C::subset_root_deficit,
                C::upper_partition, C::lower_partition};
    }
    return {};
}

namespace {

bool is_partition_condition(Condition c)
{
    return c == Condition::spanning_partition || c == Condition::kt_partition ||
           c == Condition::upper_partition || c == Condition::lower_partition;
}

// The lower-partition condition compares against k for exact counts and
// against beta otherwise; it is vacuous when beta is unbounded.
std::optional<Count> lower_budget(const ProblemSpec& spec)
{
    if (spec.kind == ProblemKind::bounded) return spec.k;
    return spec.beta;
}

Count partition_deficit(const ProblemSpec& spec, const SpecTerms& terms, Condition c, const Partition& p)
{
    const Count e = crossing_count(spec.instance, p);
    switch (c) {
    case Condition::spanning_partition:
        return spec.k.value_or(0) * (static_cast<Count>(p.size()) - 1) - e;
    case Condition::kt_partition: {
        Count need = 0;
        for (VertexSet x : p.blocks()) need += terms.rank_total() - terms.rank_of(x);
        return need - e;
    }
    case Condition::upper_partition:
        return terms.p1(p) - e - gamma_of(spec);
    case Condition::lower_partition:
        return terms.p2_with(p, *lower_budget(spec)) - e - gamma_of(spec);
    default:
        throw InvalidArgument("not a partition condition");
    }
}

Count vertex_deficit(const ProblemSpec& spec, const SpecTerms& terms, Condition c, VertexId v)
{
    const VertexSet single = VertexSet{1} << v;
    switch (c) {
    case Condition::root_independence:
        return popcount(spec.roots.at(v)) - terms.rank_of(single);
    case Condition::lower_vs_capacity:
        return terms.f_of(single) - std::min(terms.rank_of(single), terms.g_of(single));
    default:
        throw InvalidArgument("not a vertex condition");
    }
}

Count subset_deficit(const ProblemSpec& spec, const SpecTerms& terms, VertexSet y)
{
    const VertexSet rest = full_vertex_set(spec.num_vertices()) & ~y;
    Count allowance = terms.g_of(rest);
    if (spec.beta) allowance = std::min(allowance, *spec.beta - terms.f_of(y));
    return terms.rank_total() - terms.rank_of(y) - allowance;
}

Count scalar_deficit(const ProblemSpec& spec, const SpecTerms& terms, Condition c)
{
    switch (c) {
    case Condition::count_vs_capacity:
        return spec.k.value_or(0) - terms.capacity();
    case Condition::alpha_vs_capacity:
        return terms.alpha() - terms.capacity();
    case Condition::alpha_vs_beta:
        return spec.beta ? terms.alpha() - *spec.beta : 0;
    default:
        throw InvalidArgument("not a scalar condition");
    }
}

std::optional<Violation> check_condition(const ProblemSpec& spec, const SpecTerms& terms, Condition c)
{
    const std::size_t n = spec.num_vertices();
    switch (c) {
    case Condition::root_independence:
    case Condition::lower_vs_capacity:
        for (VertexId v = 0; v < n; ++v) {
            const Count d = vertex_deficit(spec, terms, c, v);
            if (d > 0) return Violation{c, VertexWitness{v}, d};
        }
        return std::nullopt;
    case Condition::count_vs_capacity:
    case Condition::alpha_vs_capacity:
    case Condition::alpha_vs_beta: {
        const Count d = scalar_deficit(spec, terms, c);
        if (d > 0) return Violation{c, std::monostate{}, d};
        return std::nullopt;
    }
    case Condition::subset_root_deficit: {
        require_cap(n, spec.limits.max_subset_vertices, "|V| for subset scans");
        std::optional<Violation> worst;
        for (VertexSet y = 0; y <= full_vertex_set(n); ++y) {
            const Count d = subset_deficit(spec, terms, y);
            if (d > 0 && (!worst || d > worst->deficit)) worst = Violation{c, SubsetWitness{y}, d};
            if (y == full_vertex_set(n)) break;
        }
        return worst;
    }
    default:
        break;
    }
    if (c == Condition::lower_partition && !lower_budget(spec)) return std::nullopt;
    const auto best = argmax_partition(
        n, [&](const Partition& p) { return partition_deficit(spec, terms, c, p); }, spec.limits);
    if (best.value > 0) return Violation{c, best.partition, best.value};
    return std::nullopt;
}

} // namespace

std::optional<Violation> check_pointwise(const ProblemSpec& spec, const SpecTerms& terms)
{
    for (Condition c : conditions_for(spec.kind)) {
        if (is_partition_condition(c) || c == Condition::subset_root_deficit) continue;
        if (auto v = check_condition(spec, terms, c)) return v;
    }
    return std::nullopt;
}

std::optional<Violation> check(const ProblemSpec& spec)
{
    validate(spec);
    require_cap(spec.num_vertices(), spec.limits.max_partition_vertices, "|V| for partition scans");
    const SpecTerms terms(spec);
    for (Condition c : conditions_for(spec.kind)) {
        if (auto v = check_condition(spec, terms, c)) return v;
    }
    return std::nullopt;
}

Count deficit_at(const ProblemSpec& spec, Condition condition, const Witness& witness)
{
    validate(spec);
    const std::size_t n = spec.num_vertices();
    const Count total = uses_roots(spec.kind) ? spec.matroid.full_rank() : 0;
    const Count inf = total * static_cast<Count>(n) + 1;
    auto rank_at = [&](VertexSet y) -> Count {
        return uses_roots(spec.kind) ? spec.matroid.rank(spec.roots.restrict_to(y)) : 0;
    };
    auto g_at = [&](VertexId v) { return spec.upper(v).value_or(inf); };
    auto capacity = [&] {
        Count sum = 0;
        for (VertexId v = 0; v < n; ++v) sum += std::min(rank_at(VertexSet{1} << v), g_at(v));
        return sum;
    };
    auto need_vertex = [&] {
        const auto* w = std::get_if<VertexWitness>(&witness);
        if (!w || w->vertex >= n) throw InvalidArgument("this condition needs a vertex witness");
        return w->vertex;
    };
    auto need_partition = [&]() -> const Partition& {
        const auto* p = std::get_if<Partition>(&witness);
        if (!p || p->ground_size() != n) throw InvalidArgument("this condition needs a partition witness");
        return *p;
    };

    switch (condition) {
    case Condition::root_independence: {
        const VertexId v = need_vertex();
        return popcount(spec.roots.at(v)) - rank_at(VertexSet{1} << v);
    }
    case Condition::lower_vs_capacity: {
        const VertexId v = need_vertex();
        return spec.lower(v) - std::min(rank_at(VertexSet{1} << v), g_at(v));
    }
    case Condition::count_vs_capacity:
        return spec.k.value_or(0) - capacity();
    case Condition::alpha_vs_capacity:
        return spec.alpha.value_or(0) - capacity();
    case Condition::alpha_vs_beta:
        return spec.beta ? spec.alpha.value_or(0) - *spec.beta : 0;
    case Condition::subset_root_deficit: {
        const auto* w = std::get_if<SubsetWitness>(&witness);
        if (!w || (w->subset & ~full_vertex_set(n))) throw InvalidArgument("this condition needs a subset witness");
        Count g_rest = 0, f_y = 0;
        for (VertexId v = 0; v < n; ++v) {
            if (contains(w->subset, v)) f_y += spec.lower(v);
            else g_rest += g_at(v);
        }
        Count allowance = g_rest;
        if (spec.beta) allowance = std::min(allowance, *spec.beta - f_y);
        return total - rank_at(w->subset) - allowance;
    }
    case Condition::spanning_partition: {
        const Partition& p = need_partition();
        return spec.k.value_or(0) * (static_cast<Count>(p.size()) - 1) - crossing_count(spec.instance, p);
    }
    case Condition::kt_partition: {
        const Partition& p = need_partition();
        Count need = 0;
        for (VertexSet x : p.blocks()) need += total - rank_at(x);
        return need - crossing_count(spec.instance, p);
    }
    case Condition::upper_partition: {
        const Partition& p = need_partition();
        return eval_p1(p, spec) - crossing_count(spec.instance, p) - gamma_of(spec);
    }
    case Condition::lower_partition: {
        const Partition& p = need_partition();
        const auto budget = lower_budget(spec);
        if (!budget) return 0;
        Count value = -*budget;
        for (VertexSet x : p.blocks()) value += inner_max(x, spec, InnerMode::lower).value;
        return value - crossing_count(spec.instance, p) - gamma_of(spec);
    }
    case Condition::cover_partition:
    case Condition::cover_budget:
        throw InvalidArgument("cover conditions depend on caller-supplied functions");
    }
    return 0;
}

} // namespace fforge
