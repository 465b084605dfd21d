#pragma once

#include <optional>
#include <vector>

#include "fforge/instance.hpp"

namespace fforge {

// One member of a packing: a tree rooted at `root`. For hypergraph instances
// `edges` lists hyperedge ids and `ends[i]` is the edge edges[i] is trimmed to;
// for graphs `ends[i]` is just the edge itself. Spanning-tree packings carry
// no root token.
struct RootedTree {
    VertexId root = 0;
    std::optional<TokenId> token;
    std::vector<EdgeId> edges;
    std::vector<VertexPair> ends;

    friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

struct Packing {
    std::vector<RootedTree> members;

    friend bool operator==(const Packing&, const Packing&) = default;
};

} // namespace fforge
