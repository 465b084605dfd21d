#include "fforge/generators.hpp"

#include <algorithm>

namespace fforge {

std::size_t draw(std::mt19937_64& rng, std::size_t lo, std::size_t hi)
{
    if (hi <= lo) return lo;
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

std::vector<std::string> vertex_names(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "v" + std::to_string(i));
    }
    return out;
}

std::vector<std::string> token_names(std::size_t s)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s; ++i) out.push_back("r" + std::to_string(i + 1));
    return out;
}

std::vector<std::vector<VertexId>> random_hyperedges(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                                     std::size_t max_size)
{
    std::vector<std::vector<VertexId>> out;
    if (n < 2) return out;
    max_size = std::clamp<std::size_t>(max_size, 2, n);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t size = draw(rng, 2, max_size);
        std::vector<VertexId> pool(n);
        for (std::size_t v = 0; v < n; ++v) pool[v] = static_cast<VertexId>(v);
        for (std::size_t j = 0; j < size; ++j) std::swap(pool[j], pool[draw(rng, j, n - 1)]);
        std::vector<VertexId> edge(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(edge.begin(), edge.end());
        out.push_back(std::move(edge));
    }
    return out;
}

MatroidSpec random_matroid(std::mt19937_64& rng, std::size_t s)
{
    MatroidSpec m;
    switch (draw(rng, 0, 2)) {
    case 0:
        m.kind = MatroidKind::free;
        break;
    case 1:
        m.kind = MatroidKind::uniform;
        m.value = static_cast<Count>(draw(rng, s == 0 ? 0 : 1, s));
        break;
    default: {
        m.kind = MatroidKind::gen_partition;
        std::vector<std::vector<TokenId>> parts;
        for (TokenId t = 0; t < s; ++t) {
            if (parts.empty() || draw(rng, 0, 1) == 0) parts.emplace_back();
            parts.back().push_back(t);
        }
        Count lo_sum = 0;
        Count hi_sum = 0;
        for (const auto& part : parts) {
            const auto hi = static_cast<Count>(draw(rng, 0, part.size()));
            const auto lo = static_cast<Count>(draw(rng, 0, static_cast<std::size_t>(hi)));
            m.parts.push_back(part);
            m.lower.push_back(lo);
            m.upper.push_back(hi);
            lo_sum += lo;
            hi_sum += hi;
        }
        m.value = static_cast<Count>(draw(rng, static_cast<std::size_t>(lo_sum), static_cast<std::size_t>(hi_sum)));
        break;
    }
    }
    return m;
}

InstanceDocument random_document(ProblemKind kind, std::mt19937_64& rng, const RandomOptions& options)
{
    InstanceDocument doc;
    doc.problem = kind;
    const std::size_t n = draw(rng, options.min_vertices, options.max_vertices);
    doc.vertices = vertex_names(n);
    const bool hyper = kind == ProblemKind::limited_hyper || kind == ProblemKind::augment;
    doc.hyperedges = random_hyperedges(rng, n, draw(rng, 0, options.max_edges), hyper ? options.max_edge_size : 2);

    if (kind == ProblemKind::spanning) {
        doc.k = static_cast<Count>(draw(rng, 1, static_cast<std::size_t>(options.max_k)));
        return doc;
    }

    const std::size_t s = draw(rng, 1, options.max_tokens);
    doc.tokens = token_names(s);
    for (std::size_t t = 0; t < s; ++t) doc.token_vertex.push_back(static_cast<VertexId>(draw(rng, 0, n - 1)));
    doc.matroid = random_matroid(rng, s);
    if (kind == ProblemKind::mbased) return doc;

    doc.f.assign(n, 0);
    doc.g.assign(n, std::nullopt);
    const auto bound = static_cast<std::size_t>(options.max_bound);
    for (std::size_t v = 0; v < n; ++v) {
        doc.f[v] = static_cast<Count>(draw(rng, 0, bound) == 0 ? draw(rng, 0, bound) : 0);
        if (draw(rng, 0, 2) != 0) doc.g[v] = static_cast<Count>(draw(rng, static_cast<std::size_t>(doc.f[v]), bound));
    }
    const auto limit = static_cast<std::size_t>(options.max_limit);
    if (kind == ProblemKind::bounded) {
        doc.k = static_cast<Count>(draw(rng, 1, static_cast<std::size_t>(options.max_k)));
        return doc;
    }
    doc.alpha = static_cast<Count>(draw(rng, 0, limit));
    if (draw(rng, 0, 3) != 0) doc.beta = static_cast<Count>(draw(rng, 0, limit));
    if (kind == ProblemKind::augment) doc.gamma = static_cast<Count>(draw(rng, 0, static_cast<std::size_t>(options.max_gamma)));
    return doc;
}

} // namespace fforge
