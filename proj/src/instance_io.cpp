#include "fforge/instance_io.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include "fforge/oracle.hpp"

namespace fforge {

namespace {

constexpr std::string_view kHeader = "fforge-v1";

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> words(std::string_view s)
{
    std::istringstream in{std::string(s)};
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

bool valid_name(const std::string& name)
{
    if (name.empty() || name == "inf") return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
    });
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    InstanceDocument run()
    {
        std::istringstream in(text_);
        std::string raw;
        bool header = false;
        while (std::getline(in, raw)) {
            ++line_;
            const auto hash = raw.find('#');
            const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
            if (body.empty()) continue;
            if (!header) {
                if (body != kHeader) fail("expected header line '" + std::string(kHeader) + "'");
                header = true;
                continue;
            }
            const auto colon = body.find(':');
            if (colon == std::string::npos) fail("expected 'key: value'");
            const std::string key = trim(body.substr(0, colon));
            const std::string value = trim(body.substr(colon + 1));
            handle(key, value);
        }
        if (!header) fail("empty document");
        finish();
        return std::move(doc_);
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("line " + std::to_string(line_) + ": " + what);
    }

    void once(const std::string& key)
    {
        if (!seen_.insert(key).second) fail("key '" + key + "' given twice");
        if (key != "problem" && key != "vertices" && !vertices_line_ && key != "alpha" && key != "beta" &&
            key != "k" && key != "gamma" && key != "matroid") {
            fail("'" + key + "' must come after 'vertices'");
        }
    }

    Count integer(const std::string& s) const
    {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            fail("expected a non-negative integer, got '" + s + "'");
        }
        if (s.size() > 12) fail("integer '" + s + "' is too large");
        return std::stoll(s);
    }

    std::optional<Count> bound(const std::string& s) const
    {
        if (s == "inf") return std::nullopt;
        return integer(s);
    }

    VertexId vertex(const std::string& name) const
    {
        const auto it = std::find(doc_.vertices.begin(), doc_.vertices.end(), name);
        if (it == doc_.vertices.end()) fail("unknown vertex '" + name + "'");
        return static_cast<VertexId>(it - doc_.vertices.begin());
    }

    TokenId token(const std::string& name) const
    {
        if (!roots_line_) fail("'roots' must come before token references");
        const auto it = std::find(doc_.tokens.begin(), doc_.tokens.end(), name);
        if (it == doc_.tokens.end()) fail("unknown root token '" + name + "'");
        return static_cast<TokenId>(it - doc_.tokens.begin());
    }

    void handle(const std::string& key, const std::string& value)
    {
        if (key == "problem") {
            once(key);
            const auto kind = parse_problem_kind(value);
            if (!kind) fail("unknown problem '" + value + "'");
            doc_.problem = *kind;
        } else if (key == "vertices") {
            once(key);
            vertices_line_ = line_;
            doc_.vertices = words(value);
            std::set<std::string> unique;
            for (const auto& v : doc_.vertices) {
                if (!valid_name(v)) fail("invalid vertex name '" + v + "'");
                if (!unique.insert(v).second) fail("vertex '" + v + "' declared twice");
            }
            if (doc_.vertices.empty()) fail("at least one vertex is required");
            if (doc_.vertices.size() > kMaxVertices) fail("more than " + std::to_string(kMaxVertices) + " vertices");
        } else if (key == "edges") {
            once(key);
            if (value.empty()) return;
            for (const auto& group : split(value, ';')) {
                std::vector<VertexId> edge;
                for (const auto& name : words(group)) edge.push_back(vertex(name));
                std::vector<VertexId> sorted = edge;
                std::sort(sorted.begin(), sorted.end());
                if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                    fail("hyperedge '" + group + "' repeats a vertex");
                }
                if (edge.size() < 2) fail("hyperedge '" + group + "' has fewer than two vertices");
                doc_.hyperedges.push_back(sorted);
            }
        } else if (key == "roots") {
            once(key);
            roots_line_ = line_;
            for (const auto& item : words(value)) {
                const auto at = item.find('@');
                if (at == std::string::npos) fail("root '" + item + "' must be written token@vertex");
                const std::string name = item.substr(0, at);
                if (!valid_name(name)) fail("invalid token name '" + name + "'");
                if (std::find(doc_.tokens.begin(), doc_.tokens.end(), name) != doc_.tokens.end()) {
                    fail("token '" + name + "' declared twice");
                }
                doc_.tokens.push_back(name);
                doc_.token_vertex.push_back(vertex(item.substr(at + 1)));
            }
            if (doc_.tokens.size() > 20) fail("more than 20 root tokens");
        } else if (key == "matroid") {
            once(key);
            const auto w = words(value);
            if (w.empty()) fail("matroid kind missing");
            if (w[0] == "free" && w.size() == 1) {
                doc_.matroid.kind = MatroidKind::free;
            } else if (w[0] == "uniform" && w.size() == 2) {
                doc_.matroid.kind = MatroidKind::uniform;
                doc_.matroid.value = integer(w[1]);
            } else if (w[0] == "gen-partition" && w.size() == 2) {
                doc_.matroid.kind = MatroidKind::gen_partition;
                doc_.matroid.value = integer(w[1]);
            } else if (w[0] == "table" && w.size() == 1) {
                doc_.matroid.kind = MatroidKind::table;
            } else {
                fail("matroid must be 'free', 'uniform K', 'gen-partition SIZE' or 'table'");
            }
        } else if (key == "part") {
            const auto halves = split(value, '/');
            if (halves.size() != 2) fail("part must be 'tokens... / lower upper'");
            std::vector<TokenId> members;
            for (const auto& name : words(halves[0])) members.push_back(token(name));
            const auto b = words(halves[1]);
            if (b.size() != 2) fail("part bounds must be 'lower upper'");
            doc_.matroid.parts.push_back(members);
            doc_.matroid.lower.push_back(integer(b[0]));
            const auto hi = bound(b[1]);
            doc_.matroid.upper.push_back(hi ? *hi : static_cast<Count>(members.size()));
            part_lines_.push_back(line_);
        } else if (key == "rank") {
            const auto halves = split(value, '=');
            if (halves.size() != 2) fail("rank must be 'tokens... = r'");
            ElementSet set = 0;
            for (const auto& name : words(halves[0])) set |= ElementSet{1} << token(name);
            if (set == 0) fail("rank of the empty set is always 0 and is not listed");
            if (doc_.matroid.ranks.count(set)) fail("rank of this set given twice");
            doc_.matroid.ranks[set] = static_cast<int>(integer(halves[1]));
        } else if (key == "f" || key == "g") {
            once(key);
            auto& target_f = doc_.f;
            auto& target_g = doc_.g;
            if (key == "f") target_f.assign(doc_.vertices.size(), 0);
            else target_g.assign(doc_.vertices.size(), std::nullopt);
            for (const auto& item : words(value)) {
                const auto eq = item.find('=');
                if (eq == std::string::npos) fail("bound '" + item + "' must be vertex=value");
                const VertexId v = vertex(item.substr(0, eq));
                const std::string amount = item.substr(eq + 1);
                if (key == "f") target_f[v] = integer(amount);
                else target_g[v] = bound(amount);
            }
        } else if (key == "alpha" || key == "beta" || key == "k" || key == "gamma") {
            once(key);
            if (key == "alpha") doc_.alpha = integer(value);
            if (key == "beta") doc_.beta = bound(value);
            if (key == "k") doc_.k = integer(value);
            if (key == "gamma") doc_.gamma = integer(value);
        } else {
            fail("unknown key '" + key + "'");
        }
    }

    void finish()
    {
        if (!seen_.count("problem")) fail("missing 'problem'");
        if (!seen_.count("vertices")) fail("missing 'vertices'");
        const auto& m = doc_.matroid;
        const std::size_t s = doc_.tokens.size();
        if (m.kind != MatroidKind::gen_partition && !m.parts.empty()) fail("'part' lines need matroid gen-partition");
        if (m.kind != MatroidKind::table && !m.ranks.empty()) fail("'rank' lines need matroid table");
        if (m.kind == MatroidKind::uniform && m.value > static_cast<Count>(s)) {
            fail("uniform rank exceeds the number of tokens");
        }
        if (m.kind == MatroidKind::gen_partition) {
            ElementSet covered = 0;
            for (const auto& part : m.parts) {
                for (TokenId t : part) {
                    if (contains(covered, t)) fail("gen-partition parts overlap on token '" + doc_.tokens[t] + "'");
                    covered |= ElementSet{1} << t;
                }
            }
            if (covered != full_element_set(s)) fail("gen-partition parts must cover every token");
            GenPartitionSpec spec;
            for (std::size_t i = 0; i < m.parts.size(); ++i) {
                ElementSet mask = 0;
                for (TokenId t : m.parts[i]) mask |= ElementSet{1} << t;
                spec.parts.push_back(mask);
            }
            spec.lower = m.lower;
            spec.upper = m.upper;
            spec.size = m.value;
            if (const auto defect = gen_partition_defect(spec); !defect.empty()) {
                fail("gen-partition matroid does not exist: " + defect);
            }
        }
        if (m.kind == MatroidKind::table) {
            if (s > 10) fail("rank tables are limited to 10 tokens");
            for (ElementSet x = 1; x <= full_element_set(s); ++x) {
                if (!m.ranks.count(x)) fail("rank table misses " + token_text(x));
            }
            const auto report = oracle::verify_matroid_axioms(
                [&](ElementSet x) { return x == 0 ? 0 : m.ranks.at(x); }, s);
            if (!report.ok()) {
                const auto& f = report.failures.front();
                fail("rank table is not a matroid (" + f.rule + " fails at " + named_witness(f.witness) + ")");
            }
        }
        if ((doc_.problem == ProblemKind::spanning || doc_.problem == ProblemKind::bounded) && !doc_.k) {
            fail("problem '" + std::string(to_string(doc_.problem)) + "' needs k");
        }
        if (doc_.problem == ProblemKind::augment && !doc_.gamma) fail("problem 'augment' needs gamma");
    }

    // Rewrites the index sets "{0,2}" of an oracle witness with token names.
    std::string named_witness(const std::string& witness) const
    {
        static const std::regex set_pattern(R"(\{([0-9,]*)\})");
        std::string out;
        auto last = witness.cbegin();
        for (std::sregex_iterator it(witness.begin(), witness.end(), set_pattern), end; it != end; ++it) {
            out.append(last, witness.cbegin() + it->position());
            ElementSet x = 0;
            for (const auto& index : split((*it)[1].str(), ',')) {
                if (!index.empty()) x |= ElementSet{1} << std::stoul(index);
            }
            out += token_text(x);
            last = witness.cbegin() + it->position() + it->length();
        }
        out.append(last, witness.cend());
        return out;
    }

    std::string token_text(ElementSet x) const
    {
        std::string out = "{";
        for (std::size_t t : members(x)) out += (out.size() > 1 ? "," : "") + doc_.tokens[t];
        return out + "}";
    }

    const std::string& text_;
    InstanceDocument doc_;
    std::set<std::string> seen_;
    std::size_t line_ = 0;
    std::size_t vertices_line_ = 0;
    std::size_t roots_line_ = 0;
    std::vector<std::size_t> part_lines_;
};

std::string count_text(std::optional<Count> c) { return c ? std::to_string(*c) : "inf"; }

} // namespace

InstanceDocument parse_instance(const std::string& text) { return Parser(text).run(); }

std::string serialize_instance(const InstanceDocument& doc)
{
    std::ostringstream out;
    auto names = [&](auto&& ids, const std::vector<std::string>& table) {
        std::string s;
        for (auto id : ids) s += (s.empty() ? "" : " ") + table.at(id);
        return s;
    };
    out << kHeader << '\n';
    out << "problem: " << to_string(doc.problem) << '\n';
    out << "vertices: " << names(std::vector<std::size_t>([&] {
               std::vector<std::size_t> ids(doc.vertices.size());
               for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
               return ids;
           }()),
                                 doc.vertices)
        << '\n';
    out << "edges:";
    for (std::size_t i = 0; i < doc.hyperedges.size(); ++i) {
        out << (i ? "; " : " ") << names(doc.hyperedges[i], doc.vertices);
    }
    out << '\n';
    if (!doc.tokens.empty() || doc.problem != ProblemKind::spanning) {
        out << "roots:";
        for (std::size_t t = 0; t < doc.tokens.size(); ++t) {
            out << ' ' << doc.tokens[t] << '@' << doc.vertices.at(doc.token_vertex[t]);
        }
        out << '\n';
        const auto& m = doc.matroid;
        switch (m.kind) {
        case MatroidKind::free:
            out << "matroid: free\n";
            break;
        case MatroidKind::uniform:
            out << "matroid: uniform " << m.value << '\n';
            break;
        case MatroidKind::gen_partition:
            out << "matroid: gen-partition " << m.value << '\n';
            for (std::size_t i = 0; i < m.parts.size(); ++i) {
                out << "part: " << names(m.parts[i], doc.tokens) << " / " << m.lower[i] << ' ' << m.upper[i] << '\n';
            }
            break;
        case MatroidKind::table:
            out << "matroid: table\n";
            for (const auto& [set, r] : m.ranks) {
                std::vector<std::size_t> ids = members(set);
                out << "rank: " << names(ids, doc.tokens) << " = " << r << '\n';
            }
            break;
        }
    }
    std::string f, g;
    for (std::size_t v = 0; v < doc.vertices.size(); ++v) {
        if (v < doc.f.size() && doc.f[v] != 0) f += ' ' + doc.vertices[v] + '=' + std::to_string(doc.f[v]);
        if (v < doc.g.size() && doc.g[v]) g += ' ' + doc.vertices[v] + '=' + count_text(doc.g[v]);
    }
    if (!f.empty()) out << "f:" << f << '\n';
    if (!g.empty()) out << "g:" << g << '\n';
    if (doc.alpha) out << "alpha: " << *doc.alpha << '\n';
    if (doc.beta) out << "beta: " << *doc.beta << '\n';
    if (doc.k) out << "k: " << *doc.k << '\n';
    if (doc.gamma) out << "gamma: " << *doc.gamma << '\n';
    return out.str();
}

Matroid build_matroid(const InstanceDocument& doc)
{
    const std::size_t s = doc.tokens.size();
    const ElementSet all = full_element_set(s);
    const auto& m = doc.matroid;
    switch (m.kind) {
    case MatroidKind::free:
        return make_free(all);
    case MatroidKind::uniform:
        return make_uniform(all, static_cast<int>(m.value));
    case MatroidKind::gen_partition: {
        GenPartitionSpec spec;
        for (const auto& part : m.parts) {
            ElementSet mask = 0;
            for (TokenId t : part) mask |= ElementSet{1} << t;
            spec.parts.push_back(mask);
        }
        spec.lower = m.lower;
        spec.upper = m.upper;
        spec.size = m.value;
        return make_gen_partition(spec);
    }
    case MatroidKind::table: {
        std::vector<int> table(std::size_t{1} << s, 0);
        for (const auto& [set, r] : m.ranks) table[set] = r;
        return make_from_table(s, std::move(table));
    }
    }
    throw InvalidArgument("unknown matroid kind");
}

ProblemSpec to_spec(const InstanceDocument& doc, const Limits& limits)
{
    ProblemSpec spec;
    spec.kind = doc.problem;
    spec.instance = Hypergraph(doc.vertices.size(), doc.hyperedges);
    spec.roots = RootMultiset(doc.vertices.size(), doc.token_vertex);
    spec.matroid = build_matroid(doc);
    spec.f = doc.f;
    spec.g = doc.g;
    spec.alpha = doc.alpha;
    spec.beta = doc.beta;
    spec.k = doc.k;
    spec.gamma = doc.gamma;
    spec.limits = limits;
    return spec;
}

std::string vertex_set_text(VertexSet s, const std::vector<std::string>& names)
{
    std::string out = "{";
    for (std::size_t v : members(s)) out += (out.size() > 1 ? "," : "") + names.at(v);
    return out + "}";
}

std::string partition_text(const Partition& p, const std::vector<std::string>& names)
{
    std::string out;
    for (VertexSet x : p.blocks()) out += (out.empty() ? "" : " ") + vertex_set_text(x, names);
    return out;
}

} // namespace fforge
