#pragma once

#include <cstdint>
#include <random>

#include "fforge/instance_io.hpp"

namespace fforge {

// Size and value ranges for random instances. Every draw goes through
// `rng() % range`, so a seed gives the same instance on every platform.
struct RandomOptions {
    std::size_t min_vertices = 2;
    std::size_t max_vertices = 4;
    std::size_t max_edges = 5;
    // Largest hyperedge for the hypergraph kinds; graph kinds always use 2.
    std::size_t max_edge_size = 3;
    std::size_t max_tokens = 3;
    Count max_bound = 2;
    Count max_limit = 3;
    Count max_k = 3;
    Count max_gamma = 2;
};

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi);

// Vertex names a, b, c, ... and token names r1, r2, ...
std::vector<std::string> vertex_names(std::size_t n);
std::vector<std::string> token_names(std::size_t s);

std::vector<std::vector<VertexId>> random_hyperedges(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                                     std::size_t max_size);

// Free, uniform or generalized partition matroid on s tokens; the
// generalized partition parameters always admit a matroid.
MatroidSpec random_matroid(std::mt19937_64& rng, std::size_t s);

InstanceDocument random_document(ProblemKind kind, std::mt19937_64& rng, const RandomOptions& options = {});

} // namespace fforge
