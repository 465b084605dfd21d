#include "doctest.h"

#include <random>

#include "fforge/oracle.hpp"
#include "fforge/solvers.hpp"
#include "support/fixtures.hpp"

using namespace fforge;

namespace {

Hypergraph k4()
{
    const std::vector<VertexPair> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    return Hypergraph::graph(4, e);
}

Hypergraph c4()
{
    const std::vector<VertexPair> e{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return Hypergraph::graph(4, e);
}

} // namespace

TEST_CASE("spanning trees: K4 packs two trees using every edge")
{
    const auto r = pack_spanning_trees(k4(), 2);
    REQUIRE(std::holds_alternative<Packing>(r));
    const auto& p = std::get<Packing>(r);
    CHECK(p.members.size() == 2);
    CHECK(p.members[0].edges.size() + p.members[1].edges.size() == 6);
    CHECK(oracle::validate_packing(p, ProblemSpec::spanning(k4(), 2)).ok());
}

TEST_CASE("spanning trees: C4 with k = 2 fails at the singletons")
{
    const auto r = pack_spanning_trees(c4(), 2);
    REQUIRE(std::holds_alternative<Violation>(r));
    const auto& v = std::get<Violation>(r);
    CHECK(v.condition == Condition::spanning_partition);
    CHECK(std::get<Partition>(v.witness) == Partition::singletons(4));
    CHECK(v.deficit == 2);
}

TEST_CASE("spanning trees: a tree packs itself")
{
    const std::vector<VertexPair> e{{0, 1}, {1, 2}, {1, 3}};
    const auto g = Hypergraph::graph(4, e);
    const auto r = pack_spanning_trees(g, 1);
    REQUIRE(std::holds_alternative<Packing>(r));
    CHECK(std::get<Packing>(r).members[0].edges == std::vector<EdgeId>{0, 1, 2});
}

TEST_CASE("mbased: path with one free root covers both vertices")
{
    const std::vector<VertexPair> e{{0, 1}};
    KtContext ctx(Hypergraph::graph(2, e), RootMultiset(2, {0}), make_free(1));
    const auto r = mbased_pack(ctx);
    REQUIRE(std::holds_alternative<Packing>(r));
    const auto& p = std::get<Packing>(r);
    REQUIRE(p.members.size() == 1);
    CHECK(p.members[0].root == 0);
    CHECK(p.members[0].edges == std::vector<EdgeId>{0});
}

TEST_CASE("bounded: uniform rank one, one tree rooted at either end")
{
    const std::vector<VertexPair> e{{0, 1}};
    auto spec = ProblemSpec::rooted(ProblemKind::bounded, Hypergraph::graph(2, e), RootMultiset(2, {0, 1}),
                                    make_uniform(0b11, 1));
    spec.k = 1;
    spec.g = {1, 1};
    const auto r = pack_bounded_k(spec);
    REQUIRE(std::holds_alternative<Packing>(r));
    const auto& p = std::get<Packing>(r);
    REQUIRE(p.members.size() == 1);
    CHECK(p.members[0].edges == std::vector<EdgeId>{0});
    CHECK(oracle::validate_packing(p, spec).ok());
}

TEST_CASE("augment: empty triangle needs two edges for one spanning tree")
{
    auto spec = ProblemSpec::rooted(ProblemKind::augment, Hypergraph(3, {}), RootMultiset(3, {0}), make_free(1));
    spec.alpha = 1;
    spec.beta = 1;
    CHECK(min_augmentation(spec) == 2);
    CHECK(oracle::brute_min_augmentation(spec) == 2);
    spec.gamma = 2;
    const auto r = augment_hypergraph(spec);
    REQUIRE(std::holds_alternative<Augmentation>(r));
    CHECK(std::get<Augmentation>(r).added.size() == 2);
}

TEST_CASE("limited hyper: two copies of abc give one spanning hypertree")
{
    auto spec = ProblemSpec::rooted(ProblemKind::limited_hyper, Hypergraph(3, {{0, 1, 2}, {0, 1, 2}}),
                                    RootMultiset(3, {0}), make_free(1));
    spec.alpha = 1;
    spec.beta = 1;
    const auto r = pack_limited_hyper(spec);
    REQUIRE(std::holds_alternative<Packing>(r));
    const auto& p = std::get<Packing>(r);
    CHECK(oracle::validate_packing(p, spec).ok());
    CHECK(p.members.at(0).edges.size() == 2);
}

TEST_CASE("mbased: k copies of a free root agree with spanning trees")
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        const std::size_t n = draw(rng, 2, 4);
        const auto k = static_cast<Count>(draw(rng, 1, 2));
        const Hypergraph g(n, random_hyperedges(rng, n, draw(rng, 0, 6), 2));
        const std::vector<VertexId> at(static_cast<std::size_t>(k), 0);
        const KtContext ctx(g, RootMultiset(n, at), make_free(full_element_set(static_cast<std::size_t>(k))));
        CHECK(std::holds_alternative<Packing>(mbased_pack(ctx)) ==
              std::holds_alternative<Packing>(pack_spanning_trees(g, k)));
    }
}

TEST_CASE("mbased: no roots and a rank-zero matroid give the empty packing")
{
    const KtContext ctx(Hypergraph(3, {}), RootMultiset(3, {}), make_free(0));
    const auto r = mbased_pack(ctx);
    REQUIRE(std::holds_alternative<Packing>(r));
    CHECK(std::get<Packing>(r).members.empty());
}

TEST_CASE("bounded: unconstrained bounds with k = |S| match mbased")
{
    std::mt19937_64 rng(32);
    for (int i = 0; i < 60; ++i) {
        const auto ctx = testing::random_context(rng, 4, 5, 2);
        const auto free = make_free(ctx.roots().all());
        auto spec = ProblemSpec::rooted(ProblemKind::bounded, ctx.graph(), ctx.roots(), free);
        spec.k = static_cast<Count>(ctx.num_tokens());
        const KtContext same(ctx.graph(), ctx.roots(), free);
        CHECK(std::holds_alternative<Packing>(pack_bounded_k(spec)) ==
              std::holds_alternative<Packing>(mbased_pack(same)));
    }
}

TEST_CASE("bounded: an impossible lower bound is reported without search")
{
    auto spec = ProblemSpec::rooted(ProblemKind::bounded, k4(), RootMultiset(4, {0}), make_free(1));
    spec.k = 1;
    spec.f = {2, 0, 0, 0};
    const auto r = pack_bounded_k(spec);
    REQUIRE(std::holds_alternative<Violation>(r));
    CHECK(std::get<Violation>(r).condition == Condition::lower_vs_capacity);
}

TEST_CASE("decompose")
{
    const std::vector<VertexPair> e{{0, 1}};
    const KtContext ctx(Hypergraph::graph(2, e), RootMultiset(2, {0}), make_free(1));
    const auto p = decompose(ctx, 0b1, 0b1);
    REQUIRE(p.members.size() == 1);
    CHECK(p.members[0].root == 0);
    CHECK(p.members[0].edges == std::vector<EdgeId>{0});
    CHECK_THROWS_AS(decompose(ctx, 0, 0b1), InvalidArgument);

    const KtContext two(k4(), RootMultiset(4, {0, 0}), make_free(0b11));
    const auto q = decompose(two, two.all_edges(), 0b11);
    const auto spec = ProblemSpec::rooted(ProblemKind::mbased, k4(), RootMultiset(4, {0, 0}), make_free(0b11));
    CHECK(oracle::validate_packing(q, spec).ok());
}

TEST_CASE("limited: alpha = beta = k matches bounded")
{
    std::mt19937_64 rng(33);
    for (int i = 0; i < 60; ++i) {
        auto bounded = to_spec(random_document(ProblemKind::bounded, rng));
        auto limited = bounded;
        limited.kind = ProblemKind::limited;
        limited.alpha = bounded.k;
        limited.beta = bounded.k;
        limited.k.reset();
        CHECK(std::holds_alternative<Packing>(pack_bounded_k(bounded)) ==
              std::holds_alternative<Packing>(pack_limited(limited)));
    }
}

TEST_CASE("limited: alpha above beta")
{
    auto spec = ProblemSpec::rooted(ProblemKind::limited, k4(), RootMultiset(4, {0, 1}), make_free(0b11));
    spec.alpha = 2;
    spec.beta = 1;
    const auto r = pack_limited(spec);
    REQUIRE(std::holds_alternative<Violation>(r));
    CHECK(std::get<Violation>(r).condition == Condition::alpha_vs_beta);
}

TEST_CASE("limited: the smallest feasible root count is used")
{
    std::mt19937_64 rng(34);
    int checked = 0;
    for (int i = 0; i < 200 && checked < 30; ++i) {
        const auto spec = to_spec(random_document(ProblemKind::limited, rng));
        const auto r = pack_limited(spec);
        if (!std::holds_alternative<Packing>(r)) continue;
        ++checked;
        const auto used = static_cast<Count>(std::get<Packing>(r).members.size());
        for (Count k = spec.alpha.value_or(0); k < used; ++k) {
            auto exact = spec;
            exact.kind = ProblemKind::bounded;
            exact.k = k;
            exact.alpha.reset();
            exact.beta.reset();
            CHECK_FALSE(oracle::brute_exists_packing(exact));
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("trim: graphs come back unchanged")
{
    auto k1 = [](const Partition& p) { return static_cast<Count>(p.size()) - 1; };
    const auto r = trim_hypergraph(k4(), k1, k1);
    REQUIRE(std::holds_alternative<Trimming>(r));
    CHECK(std::get<Trimming>(r).graph == k4());
}

TEST_CASE("trim: two copies of abc become a spanning tree")
{
    auto k1 = [](const Partition& p) { return static_cast<Count>(p.size()) - 1; };
    const auto r = trim_hypergraph(Hypergraph(3, {{0, 1, 2}, {0, 1, 2}}), k1, k1);
    REQUIRE(std::holds_alternative<Trimming>(r));
    const auto& g = std::get<Trimming>(r).graph;
    CHECK(g.is_graph());
    CHECK(std::holds_alternative<Packing>(pack_spanning_trees(g, 1)));
}

TEST_CASE("trim: one hyperedge cannot carry a spanning tree on three vertices")
{
    auto k1 = [](const Partition& p) { return static_cast<Count>(p.size()) - 1; };
    const auto r = trim_hypergraph(Hypergraph(3, {{0, 1, 2}}), k1, k1);
    REQUIRE(std::holds_alternative<Violation>(r));
    CHECK(std::get<Partition>(std::get<Violation>(r).witness) == Partition::singletons(3));
}

TEST_CASE("cover")
{
    auto zero = [](const Partition&) { return Count{0}; };
    const auto none = cover_partition_functions(3, zero, zero, 0);
    REQUIRE(std::holds_alternative<std::vector<VertexPair>>(none));
    CHECK(std::get<std::vector<VertexPair>>(none).empty());

    auto positive = [](const Partition&) { return Count{1}; };
    CHECK(std::holds_alternative<Violation>(cover_partition_functions(3, positive, zero, 1)));

    auto k1 = [](const Partition& p) { return static_cast<Count>(p.size()) - 1; };
    CHECK(std::holds_alternative<Violation>(cover_partition_functions(3, k1, k1, 1)));
    const auto tree = cover_partition_functions(3, k1, k1, 2);
    REQUIRE(std::holds_alternative<std::vector<VertexPair>>(tree));
    const auto& f = std::get<std::vector<VertexPair>>(tree);
    CHECK(f.size() == 2);
    CHECK(std::holds_alternative<Packing>(pack_spanning_trees(Hypergraph::graph(3, f), 1)));
}

TEST_CASE("limited hyper on graphs matches limited")
{
    std::mt19937_64 rng(35);
    for (int i = 0; i < 60; ++i) {
        auto spec = to_spec(random_document(ProblemKind::limited, rng));
        auto hyper = spec;
        hyper.kind = ProblemKind::limited_hyper;
        CHECK(std::holds_alternative<Packing>(pack_limited(spec)) ==
              std::holds_alternative<Packing>(pack_limited_hyper(hyper)));
    }
}

TEST_CASE("limited hyper with a free matroid packs spanning hypertrees")
{
    std::mt19937_64 rng(36);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = draw(rng, 2, 4);
        const auto k = static_cast<Count>(draw(rng, 1, 2));
        const Hypergraph h(n, random_hyperedges(rng, n, draw(rng, 0, 6), 3));
        const std::vector<VertexId> at(static_cast<std::size_t>(k), 0);
        auto spec = ProblemSpec::rooted(ProblemKind::limited_hyper, h, RootMultiset(n, at),
                                        make_free(full_element_set(static_cast<std::size_t>(k))));
        spec.alpha = k;
        spec.beta = k;
        CHECK(std::holds_alternative<Packing>(pack_limited_hyper(spec)) ==
              !check(ProblemSpec::spanning(h, k)).has_value());
    }
}

TEST_CASE("augment with gamma = 0 matches limited hyper")
{
    std::mt19937_64 rng(37);
    for (int i = 0; i < 60; ++i) {
        auto spec = to_spec(random_document(ProblemKind::augment, rng));
        spec.gamma = 0;
        auto hyper = spec;
        hyper.kind = ProblemKind::limited_hyper;
        hyper.gamma.reset();
        CHECK(std::holds_alternative<Augmentation>(augment_hypergraph(spec)) ==
              std::holds_alternative<Packing>(pack_limited_hyper(hyper)));
    }
}

TEST_CASE("augment below the partition bound")
{
    auto spec = ProblemSpec::rooted(ProblemKind::augment, Hypergraph(3, {}), RootMultiset(3, {0}), make_free(1));
    spec.alpha = 1;
    spec.beta = 1;
    spec.gamma = 1;
    const auto r = augment_hypergraph(spec);
    REQUIRE(std::holds_alternative<Violation>(r));
    const auto& v = std::get<Violation>(r);
    CHECK(std::get<Partition>(v.witness) == Partition::singletons(3));
    CHECK(v.deficit == 1);
}
