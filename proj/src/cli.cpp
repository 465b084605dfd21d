#include "fforge/cli.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "fforge/generators.hpp"
#include "fforge/instance_io.hpp"
#include "fforge/oracle.hpp"
#include "fforge/solvers.hpp"

namespace fforge::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct Loaded {
    InstanceDocument doc;
    ProblemSpec spec;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

Loaded load(const std::string& path, unsigned threads)
{
    Loaded loaded;
    try {
        loaded.doc = parse_instance(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
    Limits limits;
    limits.threads = threads;
    loaded.spec = to_spec(loaded.doc, limits);
    return loaded;
}

// Machine-readable lines, then a "--" separator, then prose.
struct Report {
    std::vector<std::string> machine;
    std::vector<std::string> prose;

    void line(std::string text) { machine.push_back(std::move(text)); }
    void say(std::string text) { prose.push_back(std::move(text)); }

    void print(std::ostream& out) const
    {
        for (const auto& l : machine) out << l << '\n';
        out << "--\n";
        for (const auto& l : prose) out << l << '\n';
    }
};

std::string counted(std::size_t n, const std::string& noun)
{
    return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

std::string pair_text(VertexPair e, const std::vector<std::string>& names)
{
    return names.at(e.first) + "-" + names.at(e.second);
}

std::string pairs_text(const std::vector<VertexPair>& pairs, const std::vector<std::string>& names)
{
    std::string out;
    for (const auto& e : pairs) out += (out.empty() ? "" : ",") + pair_text(e, names);
    return out;
}

std::string witness_text(const Witness& w, const std::vector<std::string>& names)
{
    if (const auto* v = std::get_if<VertexWitness>(&w)) return "vertex " + names.at(v->vertex);
    if (const auto* s = std::get_if<SubsetWitness>(&w)) return "subset " + vertex_set_text(s->subset, names);
    if (const auto* p = std::get_if<Partition>(&w)) return "partition " + partition_text(*p, names);
    return "none";
}

std::string tree_line(const RootedTree& t, const InstanceDocument& doc)
{
    std::string out = "tree: root=" + doc.vertices.at(t.root);
    if (t.token) out += " token=" + doc.tokens.at(*t.token);
    out += " edges=";
    for (std::size_t i = 0; i < t.edges.size(); ++i) out += (i ? "," : "") + std::to_string(t.edges[i]);
    out += " ends=" + pairs_text(t.ends, doc.vertices);
    return out;
}

std::string describe(const Violation& v, const std::vector<std::string>& names)
{
    const std::string at = witness_text(v.witness, names);
    switch (v.condition) {
    case Condition::root_independence:
        return "The roots at " + at + " are dependent in the matroid.";
    case Condition::lower_vs_capacity:
        return "The lower bound at " + at + " exceeds the number of independent roots it may host.";
    case Condition::count_vs_capacity:
        return "The vertices cannot host k independent roots.";
    case Condition::alpha_vs_capacity:
        return "The vertices cannot host alpha independent roots.";
    case Condition::alpha_vs_beta:
        return "alpha exceeds beta.";
    case Condition::subset_root_deficit:
        return "Too much root rank is missing outside " + at + ".";
    case Condition::spanning_partition:
    case Condition::kt_partition:
    case Condition::upper_partition:
    case Condition::lower_partition:
        return "Too few edges cross " + at + ".";
    case Condition::cover_partition:
        return "The edges crossing " + at + " stay below max{p1, p2}.";
    case Condition::cover_budget:
        return "gamma is below max{p1, p2} at " + at + ".";
    }
    return "A condition fails.";
}

void report_violation(Report& r, const Violation& v, const InstanceDocument& doc)
{
    r.line("status: infeasible");
    r.line("violation: " + std::string(to_string(v.condition)));
    r.line("witness: " + witness_text(v.witness, doc.vertices));
    r.line("deficit: " + std::to_string(v.deficit));
    r.say(describe(v, doc.vertices) + " Short by " + std::to_string(v.deficit) + ".");
}

bool is_cover(Condition c) { return c == Condition::cover_partition || c == Condition::cover_budget; }

// The two partition functions the trim command preserves.
struct TrimFunctions {
    PartitionFunction p1;
    PartitionFunction p2;
};

TrimFunctions trim_functions(const ProblemSpec& spec)
{
    switch (spec.kind) {
    case ProblemKind::spanning: {
        const Count k = spec.k.value_or(0);
        auto p = [k](const Partition& part) { return k * (static_cast<Count>(part.size()) - 1); };
        return {p, p};
    }
    case ProblemKind::limited:
    case ProblemKind::limited_hyper:
    case ProblemKind::augment: {
        auto terms = std::make_shared<SpecTerms>(spec);
        return {[terms](const Partition& p) { return terms->p1(p); },
                [terms](const Partition& p) { return terms->p2(p); }};
    }
    default:
        throw UsageError("trim needs problem spanning, limited, limited-hyper or augment");
    }
}

struct Solved {
    std::optional<Packing> packing;
    std::optional<Violation> violation;
    std::vector<VertexPair> added;
    Count gamma = 0;
};

void take(Solved& s, PackResult r)
{
    if (auto* p = std::get_if<Packing>(&r)) s.packing = std::move(*p);
    else s.violation = std::get<Violation>(r);
}

// Spanning hypertrees: trim to a graph keeping k(|P| - 1), then pack trees.
PackResult pack_spanning(const ProblemSpec& spec)
{
    const Count k = spec.k.value_or(0);
    if (spec.instance.is_graph()) return pack_spanning_trees(spec.instance, k, spec.limits);
    const auto fns = trim_functions(spec);
    auto trimmed = trim_hypergraph(spec.instance, fns.p1, fns.p2, spec.limits);
    if (std::holds_alternative<Violation>(trimmed)) {
        auto fallback = check(spec);
        if (!fallback) throw InternalInconsistency("trimming failed on a feasible spanning instance");
        return *fallback;
    }
    return pack_spanning_trees(std::get<Trimming>(trimmed).graph, k, spec.limits);
}

Solved solve(const ProblemSpec& spec)
{
    Solved s;
    switch (spec.kind) {
    case ProblemKind::spanning:
        take(s, pack_spanning(spec));
        break;
    case ProblemKind::mbased:
        take(s, mbased_pack(KtContext(spec.instance, spec.roots, spec.matroid, spec.limits)));
        break;
    case ProblemKind::bounded:
        take(s, pack_bounded_k(spec));
        break;
    case ProblemKind::limited:
        take(s, pack_limited(spec));
        break;
    case ProblemKind::limited_hyper:
        take(s, pack_limited_hyper(spec));
        break;
    case ProblemKind::augment: {
        s.gamma = spec.gamma.value_or(0);
        auto r = augment_hypergraph(spec);
        if (auto* a = std::get_if<Augmentation>(&r)) {
            s.packing = std::move(a->packing);
            s.added = std::move(a->added);
        } else {
            s.violation = std::get<Violation>(r);
        }
        break;
    }
    }
    return s;
}

ProblemSpec with_added(const ProblemSpec& spec, const std::vector<VertexPair>& added)
{
    ProblemSpec out = spec;
    out.instance = spec.instance.with_added_edges(added);
    return out;
}

void report_packing(Report& r, const Solved& s, const InstanceDocument& doc, bool augment)
{
    r.line("status: feasible");
    if (augment) {
        r.line("gamma: " + std::to_string(s.gamma));
        const auto added = pairs_text(s.added, doc.vertices);
        r.line(added.empty() ? "added:" : "added: " + added);
    }
    r.line("trees: " + std::to_string(s.packing->members.size()));
    for (const auto& t : s.packing->members) r.line(tree_line(t, doc));
    if (augment) r.say("Added " + counted(s.added.size(), "edge") + ".");
    r.say("Packed " + counted(s.packing->members.size(), "edge-disjoint tree") + ".");
}

int cmd_check(const Loaded& in, Report& r)
{
    if (const auto v = check(in.spec)) {
        report_violation(r, *v, in.doc);
        return kInfeasible;
    }
    r.line("status: feasible");
    r.say("Every condition of the " + std::string(to_string(in.spec.kind)) + " problem holds.");
    return kFeasible;
}

int cmd_pack(const Loaded& in, Report& r)
{
    if (in.spec.kind == ProblemKind::augment) throw UsageError("problem augment is solved by the augment command");
    const auto s = solve(in.spec);
    if (s.violation) {
        report_violation(r, *s.violation, in.doc);
        return kInfeasible;
    }
    report_packing(r, s, in.doc, false);
    return kFeasible;
}

int cmd_augment(Loaded in, bool minimal, Report& r)
{
    if (in.spec.kind != ProblemKind::augment) throw UsageError("the augment command needs problem augment");
    if (minimal) {
        const auto gamma = min_augmentation(in.spec);
        if (!gamma) {
            const auto v = check(in.spec);
            if (!v) throw InternalInconsistency("no minimal gamma although the instance is feasible");
            report_violation(r, *v, in.doc);
            r.line("gamma: " + std::to_string(*in.spec.gamma));
            r.say("No number of added edges repairs this condition.");
            return kInfeasible;
        }
        in.spec.gamma = *gamma;
    }
    const auto s = solve(in.spec);
    if (s.violation) {
        report_violation(r, *s.violation, in.doc);
        r.line("gamma: " + std::to_string(*in.spec.gamma));
        return kInfeasible;
    }
    report_packing(r, s, in.doc, true);
    return kFeasible;
}

int cmd_trim(const Loaded& in, Report& r)
{
    const auto fns = trim_functions(in.spec);
    const auto result = trim_hypergraph(in.spec.instance, fns.p1, fns.p2, in.spec.limits);
    if (const auto* v = std::get_if<Violation>(&result)) {
        report_violation(r, *v, in.doc);
        return kInfeasible;
    }
    const auto& t = std::get<Trimming>(result);
    r.line("status: feasible");
    for (std::size_t i = 0; i < t.ends.size(); ++i) {
        r.line("trim: edge=" + std::to_string(i) + " ends=" + pair_text(t.ends[i], in.doc.vertices));
    }
    r.say("Trimmed " + counted(t.ends.size(), "hyperedge") + " to edges.");
    return kFeasible;
}

// check / solver / brute force agreement on one spec.
struct SuiteResult {
    std::vector<std::string> lines;
    bool consistent = true;
};

SuiteResult run_suite(const ProblemSpec& spec)
{
    SuiteResult out;
    auto mismatch = [&](std::string line) {
        out.lines.push_back(std::move(line));
        out.consistent = false;
    };
    const auto violation = check(spec);
    const bool feasible = !violation;
    out.lines.push_back(std::string("check: ") +
                        (feasible ? "feasible" : "infeasible " + std::string(to_string(violation->condition))));
    if (violation) {
        const Count d = deficit_at(spec, violation->condition, violation->witness);
        if (d == violation->deficit && d > 0) out.lines.push_back("certificate: ok");
        else mismatch("certificate: deficit recomputes to " + std::to_string(d));
    }

    try {
        const auto s = solve(spec);
        const bool solved = s.packing.has_value();
        if (solved == feasible) out.lines.push_back(std::string("solver: ") + (solved ? "feasible" : "infeasible"));
        else mismatch(std::string("solver: ") + (solved ? "feasible" : "infeasible"));
        if (s.packing) {
            const auto report = oracle::validate_packing(*s.packing, with_added(spec, s.added));
            if (report.ok()) out.lines.push_back("validation: ok");
            for (const auto& f : report.failures) mismatch("failure: " + f.rule + " " + f.witness);
        }
    } catch (const InternalInconsistency& e) {
        mismatch(std::string("solver: error ") + e.what());
    }

    try {
        bool brute = false;
        if (spec.kind == ProblemKind::augment) {
            const auto m = oracle::brute_min_augmentation(spec);
            brute = m && *m <= spec.gamma.value_or(0);
        } else {
            brute = oracle::brute_exists_packing(spec);
        }
        if (brute == feasible) out.lines.push_back(std::string("brute: ") + (brute ? "feasible" : "infeasible"));
        else mismatch(std::string("brute: ") + (brute ? "feasible" : "infeasible"));
    } catch (const CapExceeded&) {
        out.lines.push_back("brute: skipped");
    }
    return out;
}

int cmd_verify_file(const Loaded& in, Report& r)
{
    const auto suite = run_suite(in.spec);
    r.line(std::string("status: ") + (suite.consistent ? "ok" : "mismatch"));
    for (const auto& l : suite.lines) r.line(l);
    r.say(suite.consistent ? "Feasibility check, solver and brute force agree."
                           : "The feasibility check, solver and brute force disagree.");
    return suite.consistent ? kFeasible : kInfeasible;
}

int cmd_verify_random(std::size_t count, std::uint64_t seed, Report& r)
{
    static constexpr ProblemKind kinds[] = {ProblemKind::spanning, ProblemKind::mbased,
                                            ProblemKind::bounded,  ProblemKind::limited,
                                            ProblemKind::limited_hyper, ProblemKind::augment};
    std::mt19937_64 rng(seed);
    std::size_t mismatches = 0;
    std::size_t feasible = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failures;
    for (std::size_t i = 0; i < count; ++i) {
        const auto kind = kinds[i % std::size(kinds)];
        const auto doc = random_document(kind, rng);
        const auto suite = run_suite(to_spec(doc));
        for (const auto& l : suite.lines) {
            if (l == "check: feasible") ++feasible;
            if (l == "brute: skipped") ++skipped;
        }
        if (!suite.consistent) {
            ++mismatches;
            failures.push_back("failure: index=" + std::to_string(i) + " kind=" + std::string(to_string(kind)));
        }
    }
    r.line(std::string("status: ") + (mismatches == 0 ? "ok" : "mismatch"));
    r.line("random: " + std::to_string(count));
    r.line("seed: " + std::to_string(seed));
    r.line("feasible: " + std::to_string(feasible));
    r.line("brute-skipped: " + std::to_string(skipped));
    r.line("mismatches: " + std::to_string(mismatches));
    for (const auto& f : failures) r.line(f);
    r.say("Checked " + std::to_string(count) + " random instances from seed " + std::to_string(seed) + ".");
    return mismatches == 0 ? kFeasible : kInfeasible;
}

// Parsing of printed results, for re-verification.
struct Printed {
    std::map<std::string, std::string> fields;
    std::vector<std::string> trees;
    std::vector<std::string> trims;
};

Printed parse_printed(const std::string& text)
{
    Printed p;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line == "--") break;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw UsageError("certificate line without a key: '" + line + "'");
        const std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        if (!value.empty() && value.front() == ' ') value.erase(0, 1);
        if (key == "tree") p.trees.push_back(value);
        else if (key == "trim") p.trims.push_back(value);
        else p.fields[key] = value;
    }
    if (!p.fields.count("status")) throw UsageError("certificate has no status line");
    return p;
}

std::vector<std::string> split_on(const std::string& s, char sep)
{
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) return out;
        start = pos + 1;
    }
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name)
{
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return i;
    }
    throw UsageError("certificate names unknown '" + name + "'");
}

Count parse_count(const std::string& s)
{
    try {
        std::size_t used = 0;
        const auto v = std::stoll(s, &used);
        if (used != s.size()) throw UsageError("bad number '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw UsageError("bad number '" + s + "'");
    }
}

VertexSet parse_set(const std::string& s, const std::vector<std::string>& names)
{
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') throw UsageError("bad vertex set '" + s + "'");
    VertexSet out = 0;
    for (const auto& name : split_on(s.substr(1, s.size() - 2), ',')) out |= VertexSet{1} << index_of(names, name);
    return out;
}

VertexPair parse_pair(const std::string& s, const std::vector<std::string>& names)
{
    const auto parts = split_on(s, '-');
    if (parts.size() != 2) throw UsageError("bad edge '" + s + "'");
    return {static_cast<VertexId>(index_of(names, parts[0])), static_cast<VertexId>(index_of(names, parts[1]))};
}

std::vector<VertexPair> parse_pairs(const std::string& s, const std::vector<std::string>& names)
{
    std::vector<VertexPair> out;
    for (const auto& item : split_on(s, ',')) out.push_back(parse_pair(item, names));
    return out;
}

Witness parse_witness(const std::string& s, const InstanceDocument& doc)
{
    if (s == "none") return std::monostate{};
    const auto space = s.find(' ');
    if (space == std::string::npos) throw UsageError("bad witness '" + s + "'");
    const std::string kind = s.substr(0, space);
    const std::string rest = s.substr(space + 1);
    if (kind == "vertex") return VertexWitness{static_cast<VertexId>(index_of(doc.vertices, rest))};
    if (kind == "subset") return SubsetWitness{parse_set(rest, doc.vertices)};
    if (kind == "partition") {
        std::vector<VertexSet> blocks;
        for (const auto& b : split_on(rest, ' ')) blocks.push_back(parse_set(b, doc.vertices));
        try {
            return Partition(doc.vertices.size(), blocks);
        } catch (const InvalidArgument&) {
            throw UsageError("witness '" + rest + "' is not a partition");
        }
    }
    throw UsageError("bad witness '" + s + "'");
}

RootedTree parse_tree(const std::string& s, const InstanceDocument& doc)
{
    RootedTree t;
    bool has_root = false;
    for (const auto& field : split_on(s, ' ')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw UsageError("bad tree field '" + field + "'");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "root") {
            t.root = static_cast<VertexId>(index_of(doc.vertices, value));
            has_root = true;
        } else if (key == "token") {
            t.token = static_cast<TokenId>(index_of(doc.tokens, value));
        } else if (key == "edges") {
            for (const auto& id : split_on(value, ',')) t.edges.push_back(static_cast<EdgeId>(parse_count(id)));
        } else if (key == "ends") {
            t.ends = parse_pairs(value, doc.vertices);
        } else {
            throw UsageError("bad tree field '" + field + "'");
        }
    }
    if (!has_root) throw UsageError("tree without a root");
    return t;
}

std::vector<std::string> verify_trim(const Printed& p, const Loaded& in)
{
    const auto& h = in.spec.instance;
    std::vector<std::vector<VertexId>> lists(h.num_edges());
    std::vector<bool> seen(h.num_edges(), false);
    std::vector<std::string> problems;
    for (const auto& line : p.trims) {
        const auto fields = split_on(line, ' ');
        if (fields.size() != 2 || fields[0].rfind("edge=", 0) != 0 || fields[1].rfind("ends=", 0) != 0) {
            throw UsageError("bad trim line '" + line + "'");
        }
        const auto id = static_cast<std::size_t>(parse_count(fields[0].substr(5)));
        const auto e = parse_pair(fields[1].substr(5), in.doc.vertices);
        if (id >= h.num_edges() || seen[id]) {
            problems.push_back("trim: edge " + std::to_string(id) + " is unknown or repeated");
            continue;
        }
        seen[id] = true;
        const VertexSet pair = (VertexSet{1} << e.first) | (VertexSet{1} << e.second);
        if (e.first == e.second || (pair & ~h.edge_mask(static_cast<EdgeId>(id))) != 0) {
            problems.push_back("trim: edge " + std::to_string(id) + " is not trimmed to two of its vertices");
        }
        lists[id] = {std::min(e.first, e.second), std::max(e.first, e.second)};
    }
    for (std::size_t id = 0; id < seen.size(); ++id) {
        if (!seen[id]) problems.push_back("trim: edge " + std::to_string(id) + " is missing");
    }
    if (!problems.empty()) return problems;
    const Hypergraph trimmed(h.num_vertices(), lists);
    const auto fns = trim_functions(in.spec);
    for_each_partition(h.num_vertices(), in.spec.limits.max_partition_vertices, [&](const Partition& part) {
        const Count need = std::max(fns.p1(part), fns.p2(part));
        const Count have = crossing_count(trimmed, part);
        if (have < need && problems.size() < 8) {
            problems.push_back("trim: partition " + partition_text(part, in.doc.vertices) + " has " +
                               std::to_string(have) + " < " + std::to_string(need));
        }
    });
    return problems;
}

int cmd_verify_certificate(Loaded in, const std::string& path, Report& r)
{
    const auto p = parse_printed(read_file(path));
    const std::string status = p.fields.at("status");
    std::vector<std::string> problems;
    std::string what;
    if (p.fields.count("gamma")) in.spec.gamma = parse_count(p.fields.at("gamma"));

    if (status == "infeasible") {
        for (const char* key : {"violation", "witness", "deficit"}) {
            if (!p.fields.count(key)) throw UsageError(std::string("infeasibility certificate lacks ") + key);
        }
        const auto condition = parse_condition(p.fields.at("violation"));
        if (!condition) throw UsageError("unknown condition '" + p.fields.at("violation") + "'");
        const auto witness = parse_witness(p.fields.at("witness"), in.doc);
        const Count claimed = parse_count(p.fields.at("deficit"));
        Count actual = 0;
        if (is_cover(*condition)) {
            const auto* part = std::get_if<Partition>(&witness);
            if (!part || *condition != Condition::cover_partition) {
                throw UsageError("only partition coverage certificates can be re-verified");
            }
            const auto fns = trim_functions(in.spec);
            actual = std::max(fns.p1(*part), fns.p2(*part)) - crossing_count(in.spec.instance, *part);
        } else {
            actual = deficit_at(in.spec, *condition, witness);
        }
        if (actual != claimed) {
            problems.push_back("deficit: claimed " + std::to_string(claimed) + ", recomputed " + std::to_string(actual));
        } else if (actual <= 0) {
            problems.push_back("deficit: the condition holds at the witness");
        }
        what = "infeasibility certificate";
    } else if (status == "feasible") {
        if (!p.trees.empty() || p.fields.count("added")) {
            Packing packing;
            for (const auto& t : p.trees) packing.members.push_back(parse_tree(t, in.doc));
            std::vector<VertexPair> added;
            if (p.fields.count("added")) {
                added = parse_pairs(p.fields.at("added"), in.doc.vertices);
                if (static_cast<Count>(added.size()) != in.spec.gamma.value_or(0)) {
                    problems.push_back("added: " + std::to_string(added.size()) + " edges, gamma is " +
                                       std::to_string(in.spec.gamma.value_or(0)));
                }
            }
            const auto report = oracle::validate_packing(packing, with_added(in.spec, added));
            for (const auto& f : report.failures) problems.push_back("failure: " + f.rule + " " + f.witness);
            what = "packing";
        } else if (!p.trims.empty()) {
            problems = verify_trim(p, in);
            what = "trimming";
        } else {
            if (const auto v = check(in.spec)) {
                problems.push_back("check: " + std::string(to_string(v->condition)) + " fails");
            }
            what = "feasibility claim";
        }
    } else {
        throw UsageError("status '" + status + "' is not a certificate");
    }
    r.line(std::string("status: ") + (problems.empty() ? "verified" : "rejected"));
    for (const auto& l : problems) r.line(l);
    r.say("The " + what + (problems.empty() ? " re-verifies." : " does not re-verify."));
    return problems.empty() ? kFeasible : kInfeasible;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Packing of rooted trees and hypertrees with certificates", "fforge"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = 1;
    app.add_option("--threads", threads, "Worker threads for partition scans")->check(CLI::Range(1U, 256U));

    std::string file;
    auto* check_cmd = app.add_subcommand("check", "Evaluate the feasibility conditions");
    check_cmd->add_option("file", file, "Instance file")->required();
    auto* pack_cmd = app.add_subcommand("pack", "Construct a packing or a violation certificate");
    pack_cmd->add_option("file", file, "Instance file")->required();
    bool minimal = false;
    auto* augment_cmd = app.add_subcommand("augment", "Add gamma edges and pack");
    augment_cmd->add_option("file", file, "Instance file")->required();
    augment_cmd->add_flag("--minimal", minimal, "Use the smallest gamma that works");
    auto* trim_cmd = app.add_subcommand("trim", "Trim hyperedges to edges");
    trim_cmd->add_option("file", file, "Instance file")->required();
    std::string certificate;
    std::size_t random = 0;
    std::uint64_t seed = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check against brute force, or re-verify a certificate");
    verify_cmd->add_option("file", file, "Instance file");
    verify_cmd->add_option("--certificate", certificate, "Output of an earlier command to re-verify");
    auto* random_opt = verify_cmd->add_option("--random", random, "Number of random instances to cross-check");
    verify_cmd->add_option("--seed", seed, "Seed for --random")->needs(random_opt);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsage;
    }

    try {
        Report report;
        int code = kUsage;
        if (verify_cmd->parsed() && random_opt->count() > 0) {
            if (!file.empty() || !certificate.empty()) throw UsageError("--random takes no instance file");
            code = cmd_verify_random(random, seed, report);
        } else {
            if (file.empty()) throw UsageError("an instance file is required");
            const auto loaded = load(file, threads);
            if (check_cmd->parsed()) code = cmd_check(loaded, report);
            else if (pack_cmd->parsed()) code = cmd_pack(loaded, report);
            else if (augment_cmd->parsed()) code = cmd_augment(loaded, minimal, report);
            else if (trim_cmd->parsed()) code = cmd_trim(loaded, report);
            else if (!certificate.empty()) code = cmd_verify_certificate(loaded, certificate, report);
            else code = cmd_verify_file(loaded, report);
        }
        report.print(out);
        return code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const CapExceeded& e) {
        err << "error: cap exceeded: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsage;
}

} // namespace fforge::cli
