#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fforge/instance.hpp"
#include "fforge/matroid.hpp"
#include "fforge/partition.hpp"

namespace fforge {

enum class ProblemKind { spanning, mbased, bounded, limited, limited_hyper, augment };

std::string_view to_string(ProblemKind kind);
std::optional<ProblemKind> parse_problem_kind(std::string_view text);

// Everything a packing question is asked about. Unset g entries and an unset
// beta mean "unbounded"; unset f entries and an unset alpha mean 0.
struct ProblemSpec {
    ProblemKind kind = ProblemKind::spanning;
    Hypergraph instance;
    RootMultiset roots;
    Matroid matroid;
    std::vector<Count> f;
    std::vector<std::optional<Count>> g;
    std::optional<Count> alpha;
    std::optional<Count> beta;
    std::optional<Count> k;
    std::optional<Count> gamma;
    Limits limits;

    // k edge-disjoint spanning trees.
    static ProblemSpec spanning(Hypergraph g, Count k);
    // A rooted-tree problem with default bounds (f = 0, g = ∞).
    static ProblemSpec rooted(ProblemKind kind, Hypergraph h, RootMultiset roots, Matroid m);

    std::size_t num_vertices() const { return instance.num_vertices(); }
    Count lower(VertexId v) const { return v < f.size() ? f[v] : 0; }
    std::optional<Count> upper(VertexId v) const { return v < g.size() ? g[v] : std::nullopt; }
};

enum class Condition {
    root_independence,   // S_v independent in M
    lower_vs_capacity,   // f(v) <= min{r_M(S_v), g(v)}
    count_vs_capacity,   // k <= Σ_v min{r_M(S_v), g(v)}
    alpha_vs_capacity,   // alpha <= Σ_v min{r_M(S_v), g(v)}
    alpha_vs_beta,       // alpha <= beta
    subset_root_deficit, // r_M(S) - r_M(S_Y) <= min{beta - f(Y), g(V \ Y)}
    spanning_partition,  // e(P) >= k(|P| - 1)
    kt_partition,        // e(P) >= Σ_X (r_M(S) - r_M(S_X))
    upper_partition,     // e(P) + gamma >= p1(P)
    lower_partition,     // e(P) + gamma >= p2(P), with k in place of beta for exact counts
    cover_partition,     // e(P) >= max{p1(P), p2(P)} for caller-supplied p1, p2
    cover_budget,        // gamma >= max{p1(P), p2(P)} for caller-supplied p1, p2
};

std::string_view to_string(Condition c);
std::optional<Condition> parse_condition(std::string_view text);

struct VertexWitness {
    VertexId vertex = 0;
    friend bool operator==(const VertexWitness&, const VertexWitness&) = default;
};

struct SubsetWitness {
    VertexSet subset = 0;
    friend bool operator==(const SubsetWitness&, const SubsetWitness&) = default;
};

using Witness = std::variant<std::monostate, VertexWitness, SubsetWitness, Partition>;

struct Violation {
    Condition condition = Condition::spanning_partition;
    Witness witness;
    // Amount by which the condition fails at the witness; always positive.
    Count deficit = 0;
};

enum class InnerMode { upper, lower };

struct InnerMax {
    Count value = 0;
    VertexSet argmax = 0;
};

// Rank, bound and block-value tables derived from a spec. All partition
// functions of the packing theorems are evaluated through this.
class SpecTerms {
public:
    explicit SpecTerms(const ProblemSpec& spec);

    const ProblemSpec& spec() const { return *spec_; }
    std::size_t num_vertices() const { return n_; }

    Count rank_total() const { return rank_total_; }
    Count rank_of(VertexSet y) const;
    Count f_of(VertexSet y) const;
    // Unbounded vertices count as r_M(S)|V| + 1.
    Count g_of(VertexSet y) const;
    Count infinity() const { return infinity_; }
    // Σ_v min{r_M(S_v), g(v)}
    Count capacity() const { return capacity_; }
    Count alpha() const;
    // An unset beta becomes max(alpha, capacity), which admits the same packings.
    Count beta() const;

    // max_{Y ⊆ X} r_M(S) + g(Y) - r_M(S_Y)   (upper)
    // max_{Y ⊆ X} r_M(S) + f(Y) - r_M(S_Y)   (lower)
    Count block_max(VertexSet x, InnerMode mode) const;

    // p1(P) = -g(V) + Σ_X block_max(X, upper)
    Count p1(const Partition& p) const;
    // p2(P) = -beta + Σ_X block_max(X, lower)
    Count p2(const Partition& p) const;
    Count p2_with(const Partition& p, Count beta) const;

private:
    const ProblemSpec* spec_;
    std::size_t n_;
    Count rank_total_ = 0;
    Count infinity_ = 0;
    Count capacity_ = 0;
    std::vector<Count> rank_;
    std::vector<Count> f_;
    std::vector<Count> g_;
    std::vector<Count> upper_;
    std::vector<Count> lower_;
};

// Brute subset scan over Y ⊆ X with the lexicographically smallest maximizer.
InnerMax inner_max(VertexSet x, const ProblemSpec& spec, InnerMode mode);

Count eval_p1(const Partition& p, const ProblemSpec& spec);
Count eval_p2(const Partition& p, const ProblemSpec& spec);

// Feasible (nullopt) or the first failed condition, in the theorem's order.
// Partition conditions report the partition with the largest deficit,
// earliest in enumeration order among ties.
std::optional<Violation> check(const ProblemSpec& spec);

// Conditions that do not quantify over partitions or subsets.
std::optional<Violation> check_pointwise(const ProblemSpec& spec, const SpecTerms& terms);

// Re-evaluates `condition` at `witness`; positive means violated by that much.
Count deficit_at(const ProblemSpec& spec, Condition condition, const Witness& witness);

// The conditions `check` evaluates for a problem kind, in order.
std::vector<Condition> conditions_for(ProblemKind kind);

} // namespace fforge
