// Acceptance checks; prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fforge/feasibility.hpp"
#include "fforge/generators.hpp"
#include "fforge/oracle.hpp"
#include "fforge/solvers.hpp"
#include "support/fixtures.hpp"

using namespace fforge;
using fforge::testing::crossing_direct;
using fforge::testing::meets_two;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void fail(std::string what)
    {
        pass = false;
        if (failures.size() < 5) failures.push_back(std::move(what));
    }
};

std::vector<Partition> all_partitions(std::size_t n)
{
    std::vector<Partition> out;
    for_each_partition(n, 12, [&](const Partition& p) { out.push_back(p); });
    return out;
}

// 1. Uncrossing claims (a)-(c) for every pair of partitions of a 4-set and every X.
Outcome uncrossing_calculus()
{
    Outcome o;
    const auto parts = all_partitions(4);
    if (parts.size() != 15 || oracle::enumerate_partitions(4).size() != 15) o.fail("Bell(4) != 15");
    std::mt19937_64 rng(2024);
    std::size_t checks = 0;
    for (const auto& p1 : parts) {
        for (const auto& p2 : parts) {
            const auto canonical = uncross(p1, p2);
            const auto [oracle_meet, oracle_join] = oracle::uncross_pair(p1, p2);
            if (canonical.join != oracle_join) o.fail("join differs from the uncrossing simulation");
            std::vector<std::pair<Partition, Partition>> results{{canonical.meet, canonical.join},
                                                                 {oracle_meet, oracle_join}};
            for (int r = 0; r < 3; ++r) {
                const auto random = uncross(p1, p2, &rng);
                results.emplace_back(random.meet, random.join);
            }
            for (const auto& [mt, jn] : results) {
                if (mt.size() != canonical.meet.size()) o.fail("meet cardinality depends on uncrossing order");
                if (p1.size() + p2.size() != mt.size() + jn.size()) o.fail("claim (c) fails");
                for (VertexSet x = 0; x < 16; ++x) {
                    ++checks;
                    if (meets_two(x, jn) && !(meets_two(x, p1) && meets_two(x, p2))) o.fail("claim (a) fails");
                    if (meets_two(x, mt) && !(meets_two(x, p1) || meets_two(x, p2))) o.fail("claim (b) fails");
                }
            }
        }
    }
    o.detail = "225 pairs x 16 subsets under 5 meets each (" + std::to_string(checks) + " checks)";
    return o;
}

// 2. e_E1(P1) + e_E2(P2) >= e_{E1∩E2}(P1 ⊓ P2) + e_{E1∪E2}(P1 ⊔ P2).
Outcome e_submodularity()
{
    Outcome o;
    std::vector<VertexSet> types;
    for (VertexSet x = 0; x < 16; ++x) {
        if (popcount(x) >= 2) types.push_back(x);
    }
    std::vector<std::vector<VertexSet>> hypergraphs{{}};
    for (std::size_t a = 0; a < types.size(); ++a) {
        hypergraphs.push_back({types[a]});
        for (std::size_t b = a; b < types.size(); ++b) {
            hypergraphs.push_back({types[a], types[b]});
            for (std::size_t c = b; c < types.size(); ++c) hypergraphs.push_back({types[a], types[b], types[c]});
        }
    }
    const auto parts = all_partitions(4);
    std::vector<std::array<Partition, 2>> pairs;
    for (const auto& p1 : parts) {
        for (const auto& p2 : parts) {
            const auto u = uncross(p1, p2);
            pairs.push_back({u.meet, u.join});
        }
    }
    std::size_t splits = 0;
    for (const auto& masks : hypergraphs) {
        const std::uint64_t full = (std::uint64_t{1} << masks.size()) - 1;
        for (std::uint64_t e1 = 0; e1 <= full; ++e1) {
            for (std::uint64_t e2 = 0; e2 <= full; ++e2) {
                ++splits;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    for (std::size_t j = 0; j < parts.size(); ++j) {
                        const auto& [mt, jn] = pairs[i * parts.size() + j];
                        const Count lhs = crossing_direct(masks, e1, parts[i]) + crossing_direct(masks, e2, parts[j]);
                        const Count rhs = crossing_direct(masks, e1 & e2, mt) + crossing_direct(masks, e1 | e2, jn);
                        if (lhs < rhs) o.fail("violated at " + to_string(parts[i]) + ", " + to_string(parts[j]));
                    }
                }
            }
        }
    }
    o.detail = std::to_string(hypergraphs.size()) + " hypergraphs, " + std::to_string(splits) + " splits, 225 pairs each";
    if (hypergraphs.size() != 364) o.fail("expected 364 hypergraphs");
    return o;
}

std::vector<KtContext> tiny_contexts(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<KtContext> out;
    while (out.size() < count) out.push_back(testing::random_context(rng));
    return out;
}

// 3. M'_KT satisfies the rank axioms.
Outcome prime_is_matroid(const std::vector<KtContext>& corpus)
{
    Outcome o;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto m = corpus[i].prime_matroid();
        const auto report = oracle::verify_matroid_axioms([&](ElementSet x) { return m.rank(x); }, m.ground_size());
        if (!report.ok()) o.fail("context " + std::to_string(i) + ": " + report.failures[0].rule);
    }
    o.detail = std::to_string(corpus.size()) + " contexts, every subset pair";
    return o;
}

// 4. F ∪ T is a basis of M'_KT exactly when an M-based packing uses edge set F and root set T.
Outcome basis_iff_packing(const std::vector<KtContext>& corpus)
{
    Outcome o;
    std::size_t cases = 0;
    std::size_t positive = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& ctx = corpus[i];
        auto spec = ProblemSpec::rooted(ProblemKind::limited, ctx.graph(), ctx.roots(), ctx.base());
        for (ElementSet f = 0; f <= ctx.all_edges(); ++f) {
            for (ElementSet t = 0; t <= ctx.roots().all(); ++t) {
                ++cases;
                const int size = popcount(f) + popcount(t);
                const bool basis = size == ctx.basis_size() && ctx.r_prime(f, t) == size;
                const bool brute =
                    oracle::brute_exists_basis_packing(ctx.graph(), ctx.roots(), ctx.base(), f, t);
                if (basis != brute) {
                    o.fail("context " + std::to_string(i) + " F=" + to_string(VertexSet(f)) + " T=" +
                           to_string(VertexSet(t)));
                }
                if (!basis) continue;
                ++positive;
                const auto packing = decompose(ctx, f, t);
                ElementSet used_edges = 0;
                ElementSet used_tokens = 0;
                for (const auto& tree : packing.members) {
                    for (EdgeId e : tree.edges) used_edges |= ElementSet{1} << e;
                    if (tree.token) used_tokens |= ElementSet{1} << *tree.token;
                }
                if (used_edges != f || used_tokens != t || !oracle::validate_packing(packing, spec).ok()) {
                    o.fail("decompose output rejected on context " + std::to_string(i));
                }
            }
        }
    }
    o.detail = std::to_string(corpus.size()) + " contexts, " + std::to_string(cases) + " (F,T) pairs, " +
               std::to_string(positive) + " bases decomposed";
    return o;
}

// 5. r_KT(F) = r'_KT(F ∪ S) - |S|.
Outcome contraction_identity(const std::vector<KtContext>& corpus)
{
    Outcome o;
    std::size_t used = 0;
    std::size_t sets = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& ctx = corpus[i];
        if (ctx.dependent_root_vertex()) continue;
        ++used;
        for (ElementSet f = 0; f <= ctx.all_edges(); ++f) {
            ++sets;
            const int lhs = ctx.r_kt(f);
            const int rhs = ctx.r_prime(f, ctx.roots().all()) - static_cast<int>(ctx.num_tokens());
            if (lhs != rhs) o.fail("context " + std::to_string(i) + " differs");
        }
    }
    if (used < 200) o.fail("only " + std::to_string(used) + " contexts with independent root sets");
    o.detail = std::to_string(used) + " contexts with independent S_v, " + std::to_string(sets) + " edge sets";
    return o;
}

Hypergraph graph_of(std::size_t n, const std::vector<VertexPair>& edges) { return Hypergraph::graph(n, edges); }

// 6. Spanning trees: solver, conditions and brute force agree.
Outcome spanning_trees()
{
    Outcome o;
    const auto k4 = graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    const auto c4 = graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto k4_result = pack_spanning_trees(k4, 2);
    if (!std::holds_alternative<Packing>(k4_result) ||
        !oracle::validate_packing(std::get<Packing>(k4_result), ProblemSpec::spanning(k4, 2)).ok()) {
        o.fail("K4 with k = 2 not packed");
    }
    const auto c4_result = pack_spanning_trees(c4, 2);
    const auto* c4_violation = std::get_if<Violation>(&c4_result);
    if (!c4_violation || c4_violation->deficit != 2 || std::get<Partition>(c4_violation->witness) != Partition::singletons(4)) {
        o.fail("C4 with k = 2 not certified at the singletons with deficit 2");
    }

    std::mt19937_64 rng(6);
    std::size_t feasible = 0;
    std::set<std::string> distinct;
    std::size_t total = 0;
    for (std::size_t i = 0; distinct.size() < 600 && i < 100000; ++i) {
        const std::size_t n = draw(rng, 2, 5);
        const std::size_t m = draw(rng, 0, 7);
        const auto k = static_cast<Count>(draw(rng, 1, 3));
        const Hypergraph g(n, random_hyperedges(rng, n, m, 2));
        const auto spec = ProblemSpec::spanning(g, k);
        std::ostringstream key;
        key << n << ':' << k;
        for (std::size_t e = 0; e < g.num_edges(); ++e) key << ' ' << g.edge_mask(static_cast<EdgeId>(e));
        if (!distinct.insert(key.str()).second) continue;
        ++total;
        const auto result = pack_spanning_trees(g, k);
        const bool solved = std::holds_alternative<Packing>(result);
        const bool brute = oracle::brute_exists_packing(spec);
        const bool conditions = !check(spec);
        if (solved != brute || conditions != brute) o.fail("disagreement on instance " + std::to_string(i));
        if (solved && !oracle::validate_packing(std::get<Packing>(result), spec).ok()) {
            o.fail("invalid packing on instance " + std::to_string(i));
        }
        if (const auto* v = std::get_if<Violation>(&result)) {
            if (deficit_at(spec, v->condition, v->witness) != v->deficit) o.fail("certificate mismatch " + std::to_string(i));
        }
        feasible += solved ? 1 : 0;
    }
    if (total < 500) o.fail("only " + std::to_string(total) + " distinct graphs");
    o.detail = std::to_string(total) + " distinct graphs (" + std::to_string(feasible) +
               " feasible), K4 packed, C4 deficit 2";
    return o;
}

Count cross_pairs(const std::vector<VertexPair>& edges, const Partition& p)
{
    Count c = 0;
    for (auto [u, v] : edges) c += p.block_of(u) != p.block_of(v) ? 1 : 0;
    return c;
}

// Every multiset of `size` pairs on n vertices, in a fixed order.
void for_each_multiset(std::size_t n, std::size_t size, const std::function<bool(const std::vector<VertexPair>&)>& fn)
{
    std::vector<VertexPair> types;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) types.emplace_back(u, v);
    }
    std::vector<VertexPair> current;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) {
        if (current.size() == size) return fn(current);
        for (std::size_t i = from; i < types.size(); ++i) {
            current.push_back(types[i]);
            if (rec(i)) return true;
            current.pop_back();
        }
        return false;
    };
    rec(0);
}

// 7. Covering two supermodular partition functions with gamma* edges.
Outcome covering()
{
    Outcome o;
    std::mt19937_64 rng(7);
    const auto parts = oracle::enumerate_partitions(4);
    std::size_t nontrivial = 0;
    const std::size_t total = 120;
    for (std::size_t i = 0; i < total; ++i) {
        // k(|P| - 1) - e_E(P) is supermodular: |P| is modular and e_E submodular.
        std::array<Count, 2> k{static_cast<Count>(draw(rng, 1, 3)), static_cast<Count>(draw(rng, 0, 3))};
        std::array<Hypergraph, 2> base{Hypergraph(4, random_hyperedges(rng, 4, draw(rng, 0, 4), 4)),
                                       Hypergraph(4, random_hyperedges(rng, 4, draw(rng, 0, 4), 3))};
        std::array<PartitionFunction, 2> p;
        for (int j = 0; j < 2; ++j) {
            p[j] = [k, base, j](const Partition& part) {
                return k[j] * (static_cast<Count>(part.size()) - 1) - crossing_count(base[j], part);
            };
            if (!oracle::verify_partition_supermodular(p[j], 4).ok()) o.fail("construction not supermodular");
        }
        Count gamma = 0;
        for (const auto& part : parts) gamma = std::max({gamma, p[0](part), p[1](part)});
        const auto result = cover_partition_functions(4, p[0], p[1], gamma);
        const auto* edges = std::get_if<std::vector<VertexPair>>(&result);
        if (!edges || static_cast<Count>(edges->size()) != gamma) {
            o.fail("no cover of size gamma* on pair " + std::to_string(i));
            continue;
        }
        for (const auto& part : parts) {
            if (cross_pairs(*edges, part) < std::max(p[0](part), p[1](part))) o.fail("cover misses " + to_string(part));
        }
        if (gamma == 0) continue;
        ++nontrivial;
        if (cover_partition_functions(4, p[0], p[1], gamma - 1).index() != 1) o.fail("gamma* - 1 accepted by solver");
        bool smaller = false;
        for_each_multiset(4, static_cast<std::size_t>(gamma - 1), [&](const std::vector<VertexPair>& f) {
            for (const auto& part : parts) {
                if (cross_pairs(f, part) < std::max(p[0](part), p[1](part))) return false;
            }
            smaller = true;
            return true;
        });
        if (smaller) o.fail("a cover with gamma* - 1 edges exists on pair " + std::to_string(i));
    }
    o.detail = std::to_string(total) + " function pairs, " + std::to_string(nontrivial) + " with gamma* > 0";
    return o;
}

bool condition_holds(const Hypergraph& h, const PartitionFunction& p1, const PartitionFunction& p2)
{
    for (const auto& part : oracle::enumerate_partitions(h.num_vertices())) {
        const Count have = crossing_direct(std::vector<VertexSet>(h.edge_masks().begin(), h.edge_masks().end()),
                                           full_element_set(h.num_edges()), part);
        if (have < std::max(p1(part), p2(part))) return false;
    }
    return true;
}

// 8. Trimming keeps e(P) >= max{p1(P), p2(P)}.
Outcome trimming()
{
    Outcome o;
    std::mt19937_64 rng(8);
    RandomOptions options;
    options.max_edges = 7;
    options.max_edge_size = 4;
    std::size_t instances = 0;
    std::size_t shrunk = 0;
    for (std::size_t attempt = 0; attempt < 20000 && instances < 150; ++attempt) {
        const auto doc = random_document(attempt % 2 == 0 ? ProblemKind::limited_hyper : ProblemKind::spanning, rng, options);
        const auto spec = to_spec(doc);
        PartitionFunction p1;
        PartitionFunction p2;
        std::shared_ptr<SpecTerms> terms;
        if (spec.kind == ProblemKind::spanning) {
            const Count k = *spec.k;
            p1 = p2 = [k](const Partition& p) { return k * (static_cast<Count>(p.size()) - 1); };
        } else {
            terms = std::make_shared<SpecTerms>(spec);
            p1 = [terms](const Partition& p) { return terms->p1(p); };
            p2 = [terms](const Partition& p) { return terms->p2(p); };
        }
        if (spec.instance.is_graph() || !condition_holds(spec.instance, p1, p2)) continue;
        ++instances;
        const auto result = trim_hypergraph(spec.instance, p1, p2);
        const auto* t = std::get_if<Trimming>(&result);
        if (!t) {
            o.fail("trim refused a feasible instance at attempt " + std::to_string(attempt));
            continue;
        }
        for (std::size_t e = 0; e < t->ends.size(); ++e) {
            const auto [u, v] = t->ends[e];
            const VertexSet pair = (VertexSet{1} << u) | (VertexSet{1} << v);
            if (u == v || (pair & ~spec.instance.edge_mask(static_cast<EdgeId>(e))) != 0) o.fail("bad trimmed edge");
            if (spec.instance.edge(static_cast<EdgeId>(e)).size() > 2) ++shrunk;
        }
        if (!t->graph.is_graph() || !condition_holds(t->graph, p1, p2)) {
            o.fail("trimmed graph violates the condition at attempt " + std::to_string(attempt));
        }
    }
    if (instances < 100) o.fail("only " + std::to_string(instances) + " feasible instances generated");
    o.detail = std::to_string(instances) + " feasible hypergraphs, " + std::to_string(shrunk) + " hyperedges trimmed";
    return o;
}

// 9. Bounded, limited and limited-hyper: solver, conditions and brute force agree.
Outcome three_way()
{
    Outcome o;
    std::mt19937_64 rng(9);
    RandomOptions options;
    options.max_vertices = 4;
    options.max_edges = 5;
    options.max_tokens = 3;
    options.max_bound = 2;
    options.max_limit = 3;
    options.max_edge_size = 4;
    const std::array kinds{ProblemKind::bounded, ProblemKind::limited, ProblemKind::limited_hyper};
    // Per kind, the first 75 feasible and 75 infeasible specs drawn.
    constexpr std::size_t quota = 75;
    std::map<ProblemKind, std::pair<std::size_t, std::size_t>> tally;
    std::size_t total = 0;
    for (std::size_t attempt = 0; attempt < 200000; ++attempt) {
        const auto kind = kinds[attempt % kinds.size()];
        auto& [count, feasible] = tally[kind];
        if (count - feasible >= quota && feasible >= quota) {
            bool done = true;
            for (auto k : kinds) done = done && tally[k].second >= quota && tally[k].first - tally[k].second >= quota;
            if (done) break;
            continue;
        }
        const auto spec = to_spec(random_document(kind, rng, options));
        const bool brute = oracle::brute_exists_packing(spec);
        if (brute ? feasible >= quota : count - feasible >= quota) continue;
        ++total;
        ++count;
        feasible += brute ? 1 : 0;
        const auto violation = check(spec);
        PackResult result = kind == ProblemKind::bounded   ? pack_bounded_k(spec)
                            : kind == ProblemKind::limited ? pack_limited(spec)
                                                           : pack_limited_hyper(spec);
        const bool solved = std::holds_alternative<Packing>(result);
        if (solved != brute || !violation != brute) {
            o.fail(std::string(to_string(kind)) + " attempt " + std::to_string(attempt) + ": solver " +
                   std::to_string(solved) + " check " + std::to_string(!violation) + " brute " + std::to_string(brute));
        }
        if (solved && !oracle::validate_packing(std::get<Packing>(result), spec).ok()) {
            o.fail("invalid packing at attempt " + std::to_string(attempt));
        }
        if (violation && deficit_at(spec, violation->condition, violation->witness) != violation->deficit) {
            o.fail("certificate mismatch at attempt " + std::to_string(attempt));
        }
    }
    if (total < 300) o.fail("only " + std::to_string(total) + " specs drawn");
    std::string detail = std::to_string(total) + " specs (feasible:";
    for (auto kind : kinds) {
        detail += " " + std::string(to_string(kind)) + " " + std::to_string(tally[kind].second) + "/" +
                  std::to_string(tally[kind].first);
    }
    o.detail = detail + ")";
    return o;
}

// 10. Minimal augmentation agrees with brute force.
Outcome augmentation()
{
    Outcome o;
    auto empty = ProblemSpec::spanning(Hypergraph(3, {}), 1);
    if (oracle::brute_min_augmentation(empty) != 2 || min_augmentation(empty) != 2) {
        o.fail("empty 3-vertex graph with k = 1 does not need exactly 2 edges");
    }
    std::mt19937_64 rng(10);
    RandomOptions options;
    options.max_edges = 3;
    options.max_gamma = 0;
    std::size_t infeasible = 0;
    std::size_t repairable = 0;
    // The first 60 repairable and 60 unrepairable infeasible specs drawn.
    constexpr std::size_t quota = 60;
    for (std::size_t attempt = 0; attempt < 100000 && infeasible < 2 * quota; ++attempt) {
        auto spec = to_spec(random_document(ProblemKind::augment, rng, options));
        spec.gamma = 0;
        if (!check(spec)) continue;
        const auto brute = oracle::brute_min_augmentation(spec);
        if (brute ? repairable >= quota : infeasible - repairable >= quota) continue;
        ++infeasible;
        if (brute) ++repairable;
        const auto solver = min_augmentation(spec);
        std::optional<Count> scanned;
        for (Count gamma = 0; gamma <= static_cast<Count>(spec.matroid.full_rank() * spec.num_vertices()); ++gamma) {
            spec.gamma = gamma;
            if (!check(spec)) {
                scanned = gamma;
                break;
            }
        }
        if (solver != brute || scanned != brute) {
            o.fail("attempt " + std::to_string(attempt) + ": solver " + (solver ? std::to_string(*solver) : "none") +
                   " scan " + (scanned ? std::to_string(*scanned) : "none") + " brute " +
                   (brute ? std::to_string(*brute) : "none"));
            continue;
        }
        if (!brute) continue;
        spec.gamma = *brute;
        const auto result = augment_hypergraph(spec);
        const auto* a = std::get_if<Augmentation>(&result);
        if (!a || static_cast<Count>(a->added.size()) != *brute) {
            o.fail("augment failed at attempt " + std::to_string(attempt));
            continue;
        }
        auto augmented = spec;
        augmented.instance = a->augmented;
        if (!oracle::validate_packing(a->packing, augmented).ok()) o.fail("invalid augmented packing");
    }
    if (infeasible < 100) o.fail("only " + std::to_string(infeasible) + " infeasible specs");
    o.detail = std::to_string(infeasible) + " infeasible specs, " + std::to_string(repairable) +
               " repairable; empty triangle needs 2";
    return o;
}

struct Run {
    int status = -1;
    std::string output;
};

Run run_cli(const std::string& args)
{
    Run r;
    const std::string command = std::string("\"") + FFORGE_CLI_PATH + "\" " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buffer{};
    while (const std::size_t got = fread(buffer.data(), 1, buffer.size(), pipe)) r.output.append(buffer.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

// 11. CLI output does not depend on the run or the thread count.
Outcome determinism()
{
    Outcome o;
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(FFORGE_DATA_DIR)) {
        if (entry.path().extension() == ".ff") files.push_back(entry.path().string());
    }
    std::sort(files.begin(), files.end());
    const std::vector<std::string> commands{"check", "pack", "augment", "augment --minimal", "trim", "verify"};
    std::size_t runs = 0;
    for (const auto& file : files) {
        for (const auto& command : commands) {
            std::optional<Run> first;
            for (const char* threads : {"1", "2", "4", "1", "4"}) {
                const auto r = run_cli(command + " \"" + file + "\" --threads " + threads);
                ++runs;
                if (r.status < 0) o.fail("could not run " + command);
                if (!first) first = r;
                else if (r.output != first->output || r.status != first->status) {
                    o.fail(command + " " + std::filesystem::path(file).filename().string() + " differs at " + threads +
                           " threads");
                }
            }
        }
    }
    const auto a = run_cli("verify --random 60 --seed 5 --threads 1");
    const auto b = run_cli("verify --random 60 --seed 5 --threads 4");
    runs += 2;
    if (a.output != b.output || a.status != 0) o.fail("random verification differs across thread counts");
    if (files.empty()) o.fail("no golden instance files found");
    o.detail = std::to_string(files.size()) + " golden files, " + std::to_string(runs) + " CLI runs";
    return o;
}

} // namespace

int main()
{
    const auto corpus = tiny_contexts(300, 3);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"uncrossing calculus", uncrossing_calculus},
        {"e-submodularity", e_submodularity},
        {"M'_KT is a matroid", [&] { return prime_is_matroid(corpus); }},
        {"basis iff packing", [&] { return basis_iff_packing(corpus); }},
        {"contraction identity", [&] { return contraction_identity(corpus); }},
        {"spanning trees", spanning_trees},
        {"covering", covering},
        {"trimming", trimming},
        {"bounded/limited/hyper agreement", three_way},
        {"augmentation", augmentation},
        {"CLI determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): "
                  << o.detail << " [" << ms.count() << " ms]\n";
        for (const auto& f : o.failures) std::cout << "    " << f << '\n';
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << '\n';
    return failed == 0 ? 0 : 1;
}
