#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fforge/feasibility.hpp"

namespace fforge {

// A malformed instance file; what() names the line.
class ParseError : public Error {
public:
    using Error::Error;
};

enum class MatroidKind { free, uniform, gen_partition, table };

struct MatroidSpec {
    MatroidKind kind = MatroidKind::free;
    // Rank for uniform, target size for gen-partition.
    Count value = 0;
    std::vector<std::vector<TokenId>> parts;
    std::vector<Count> lower;
    std::vector<Count> upper;
    // Rank of every nonempty token subset, keyed by bitmask.
    std::map<ElementSet, int> ranks;
};

// The parsed contents of one "fforge-v1" instance file.
struct InstanceDocument {
    ProblemKind problem = ProblemKind::spanning;
    std::vector<std::string> vertices;
    std::vector<std::vector<VertexId>> hyperedges;
    std::vector<std::string> tokens;
    std::vector<VertexId> token_vertex;
    MatroidSpec matroid;
    std::vector<Count> f;
    std::vector<std::optional<Count>> g;
    std::optional<Count> alpha;
    std::optional<Count> beta;
    std::optional<Count> k;
    std::optional<Count> gamma;
};

InstanceDocument parse_instance(const std::string& text);
std::string serialize_instance(const InstanceDocument& doc);

Matroid build_matroid(const InstanceDocument& doc);
ProblemSpec to_spec(const InstanceDocument& doc, const Limits& limits = {});

// Renders vertex or token sets with the document's names.
std::string vertex_set_text(VertexSet s, const std::vector<std::string>& names);
std::string partition_text(const Partition& p, const std::vector<std::string>& names);

} // namespace fforge
