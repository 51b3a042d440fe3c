#include "psf/io.hpp"

#include "psf/enumerative.hpp"
#include "psf/error.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace psf {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& what)
{
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

} // namespace

Complex parse_facets(std::string_view text)
{
    std::vector<Simplex> facets;
    std::size_t line_no = 0, first_line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<VertexId> vs;
        std::size_t i = 0;
        while (i < line.size()) {
            if (is_space(line[i])) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !is_space(line[j])) ++j;
            const std::string_view tok = line.substr(i, j - i);
            VertexId v = 0;
            const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || end != tok.data() + tok.size()) {
                parse_fail(line_no, i + 1, "expected a vertex label, found '" + std::string(tok) + "'");
            }
            if (std::find(vs.begin(), vs.end(), v) != vs.end()) {
                parse_fail(line_no, i + 1, "vertex " + std::to_string(v) + " repeated in one facet");
            }
            vs.push_back(v);
            i = j;
        }
        if (!vs.empty()) {
            if (!facets.empty() && vs.size() != facets.front().size()) {
                parse_fail(line_no, 1,
                           "facet has " + std::to_string(vs.size()) + " vertices, line " + std::to_string(first_line) +
                               " has " + std::to_string(facets.front().size()));
            }
            if (facets.empty()) first_line = line_no;
            facets.emplace_back(vs);
        }
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    if (facets.empty()) parse_fail(line_no, 1, "no facets");
    return Complex::from_simplices(std::move(facets));
}

std::string print_facets(const Complex& K)
{
    std::string out;
    for (const Simplex& f : K.facets()) {
        bool first = true;
        for (VertexId v : f) {
            if (!first) out += ' ';
            out += std::to_string(v);
            first = false;
        }
        out += '\n';
    }
    return out;
}

Complex read_facet_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_facets(ss.str());
}

void write_facet_file(const std::string& path, const Complex& K)
{
    std::ofstream out(path);
    if (!out) throw Error(Errc::InvalidArgument, "cannot write " + path);
    out << print_facets(K);
}

bool BuildResult::ledger_ok() const
{
    return std::all_of(ledger.begin(), ledger.end(), [](const LedgerEntry& e) { return e.ok; });
}

namespace {

struct StepContext
{
    int index;
    const json& args;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(Errc::SchemaError, "step " + std::to_string(index) + ": " + what);
    }

    template <class T> T get(const char* key) const
    {
        if (!args.contains(key)) fail(std::string("missing argument '") + key + "'");
        try {
            return args.at(key).get<T>();
        } catch (const json::exception&) {
            fail(std::string("argument '") + key + "' has the wrong type");
        }
    }

    template <class T> T get_or(const char* key, T fallback) const { return args.contains(key) ? get<T>(key) : fallback; }
};

Complex create(const std::string& op, const StepContext& c)
{
    if (op == "boundary_simplex") return boundary_simplex(c.get<int>("n"));
    if (op == "stacked_sphere") return stacked_sphere(c.get_or<int>("d", 4), c.get<int>("k"), c.get_or<std::uint64_t>("seed", 0));
    if (op == "stacked_chain") {
        const auto focus = c.get_or<std::vector<VertexId>>("focus", {});
        return stacked_chain(c.get_or<int>("d", 4), c.get<int>("k"), Simplex(focus), c.get_or<std::uint64_t>("seed", 0));
    }
    if (op == "facets") {
        std::vector<std::vector<VertexId>> fs = c.get<std::vector<std::vector<VertexId>>>("facets");
        return Complex::from_facets(fs);
    }
    c.fail("'" + op + "' cannot start a script");
}

std::optional<FoldingMap> explicit_map(const StepContext& c, FoldKind kind)
{
    if (!c.args.contains("source") && !c.args.contains("target")) return std::nullopt;
    const auto src = c.get<std::vector<VertexId>>("source");
    const auto dst = c.get<std::vector<VertexId>>("target");
    return FoldingMap::from_sequences(src, dst, kind);
}

Complex summand(const json& desc, int index)
{
    if (!desc.is_object() || !desc.contains("op")) {
        throw Error(Errc::SchemaError, "step " + std::to_string(index) + ": 'with' must be a creating step");
    }
    static const json empty = json::object();
    const StepContext c{index, desc.contains("args") ? desc.at("args") : empty};
    return create(desc.at("op").get<std::string>(), c);
}

} // namespace

BuildResult run_script(std::string_view text, bool fault)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("version")) throw Error(Errc::SchemaError, "missing 'version'");
    if (doc.at("version") != 1) throw Error(Errc::SchemaError, "unsupported version " + doc.at("version").dump());
    if (!doc.contains("steps") || !doc.at("steps").is_array()) throw Error(Errc::SchemaError, "missing 'steps' array");
    const json& steps = doc.at("steps");
    if (steps.empty()) throw Error(Errc::SchemaError, "script has no steps");

    BuildResult out;
    static const json empty = json::object();
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const json& st = steps[i];
        const int idx = static_cast<int>(i);
        if (!st.is_object() || !st.contains("op") || !st.at("op").is_string()) {
            throw Error(Errc::SchemaError, "step " + std::to_string(i) + ": missing 'op'");
        }
        const std::string op = st.at("op").get<std::string>();
        const json& args = st.contains("args") ? st.at("args") : empty;
        if (!args.is_object()) throw Error(Errc::SchemaError, "step " + std::to_string(i) + ": 'args' must be an object");
        const StepContext c{idx, args};

        LedgerEntry e;
        e.step = idx;
        e.op = op;
        if (i == 0) {
            out.complex = create(op, c);
            e.dg2 = g2(out.complex);
            e.dg3 = g3(out.complex);
            out.ledger.push_back(e);
            continue;
        }
        const Complex& K = out.complex;
        const std::int64_t before2 = g2(K), before3 = g3(K);
        Complex next;
        std::pair<std::int64_t, std::int64_t> expect{0, 0};
        SplitMix64 rng(c.get_or<std::uint64_t>("seed", 0));
        if (op == "facet_subdivision") {
            const Simplex f = args.contains("facet") ? Simplex(c.get<std::vector<VertexId>>("facet"))
                                                     : K.facets()[rng.below(K.num_facets())];
            next = facet_subdivision(K, f);
        } else if (op == "connected_sum") {
            if (!args.contains("with")) c.fail("missing argument 'with'");
            const Complex raw = summand(args.at("with"), idx);
            const Complex B = shift_labels(raw, K.fresh_vertex());
            std::map<VertexId, VertexId> shift;
            for (std::size_t k = 0; k < raw.vertices().size(); ++k) shift[raw.vertices()[k]] = B.vertices()[k];
            FoldingMap psi;
            if (auto m = explicit_map(c, FoldKind::ConnectedSum)) {
                std::vector<VertexId> src, dst;
                for (const auto& [a, b] : m->pairs) {
                    if (!shift.count(b)) c.fail("target vertex " + std::to_string(b) + " is not in the summand");
                    src.push_back(a);
                    dst.push_back(shift.at(b));
                }
                psi = FoldingMap::from_sequences(src, dst, FoldKind::ConnectedSum);
            } else {
                const Simplex& a = K.facets()[rng.below(K.num_facets())];
                const Simplex& b = B.facets()[rng.below(B.num_facets())];
                std::vector<VertexId> dst(b.begin(), b.end());
                rng.shuffle(dst);
                psi = FoldingMap::from_sequences(std::vector<VertexId>(a.begin(), a.end()), dst, FoldKind::ConnectedSum);
            }
            next = connected_sum(K, B, psi);
            expect = {g2(B), g3(B)};
        } else if (op == "vertex_fold" || op == "edge_fold" || op == "handle") {
            const FoldKind kind = op == "vertex_fold" ? FoldKind::VertexFold : op == "edge_fold" ? FoldKind::EdgeFold : FoldKind::Handle;
            std::optional<FoldingMap> psi = explicit_map(c, kind);
            if (!psi) {
                if (kind == FoldKind::VertexFold) {
                    const auto v = args.contains("vertex") ? std::optional<VertexId>(c.get<VertexId>("vertex")) : std::nullopt;
                    psi = find_vertex_fold(K, v, rng);
                } else if (kind == FoldKind::EdgeFold) {
                    const auto e = args.contains("edge") ? std::optional<Simplex>(Simplex(c.get<std::vector<VertexId>>("edge")))
                                                         : std::nullopt;
                    psi = find_edge_fold(K, e, rng);
                } else {
                    psi = find_handle(K, rng);
                }
                if (!psi) throw Error(Errc::Inadmissible, "step " + std::to_string(i) + ": no admissible " + op + " found");
            }
            next = kind == FoldKind::VertexFold ? vertex_fold(K, *psi) : kind == FoldKind::EdgeFold ? edge_fold(K, *psi)
                                                                                                    : handle_addition(K, *psi);
            if (K.dimension() == 4) {
                expect = kind == FoldKind::VertexFold ? std::pair<std::int64_t, std::int64_t>{10, -10}
                         : kind == FoldKind::EdgeFold ? std::pair<std::int64_t, std::int64_t>{6, -4}
                                                      : std::pair<std::int64_t, std::int64_t>{15, -20};
            }
        } else {
            c.fail("unknown op '" + op + "'");
        }
        if (K.dimension() == 4 || op == "facet_subdivision" || op == "connected_sum") {
            if (fault) ++expect.first;
            e.expected = expect;
        }
        out.complex = std::move(next);
        e.dg2 = g2(out.complex) - before2;
        e.dg3 = g3(out.complex) - before3;
        e.ok = !e.expected || *e.expected == std::pair{e.dg2, e.dg3};
        out.ledger.push_back(e);
    }
    return out;
}

namespace {

json simplex_json(const Simplex& s) { return json(std::vector<VertexId>(s.begin(), s.end())); }

Simplex simplex_from(const json& j) { return Simplex(j.get<std::vector<VertexId>>()); }

template <class E> E enum_from(const json& j, std::initializer_list<E> all)
{
    const std::string s = j.get<std::string>();
    for (E e : all) {
        if (s == to_string(e)) return e;
    }
    throw Error(Errc::MalformedTree, "unknown name '" + s + "'");
}

} // namespace

std::string tree_to_json(const DecompositionTree& tree)
{
    json steps = json::array();
    for (const DecompositionStep& s : tree.steps) {
        json j{{"kind", to_string(s.kind)}, {"g2", s.g2}, {"f0", s.f0}, {"children", s.children}};
        switch (s.kind) {
        case StepKind::Leaf:
            j["leaf"] = to_string(s.leaf);
            j["facets"] = json::array();
            for (const Simplex& f : s.complex.facets()) j["facets"].push_back(simplex_json(f));
            break;
        case StepKind::SuspensionBase:
            j["vertex"] = s.vertex;
            j["apex"] = s.apex;
            j["base"] = json::array();
            for (const Simplex& f : s.complex.facets()) j["base"].push_back(simplex_json(f));
            break;
        case StepKind::InverseFacetSubdivision:
            j["vertex"] = s.vertex;
            j["facet"] = simplex_json(s.tau);
            break;
        default: {
            j["tau"] = simplex_json(s.tau);
            if (s.kind == StepKind::VertexUnfold) j["vertex"] = s.vertex;
            if (s.kind == StepKind::EdgeUnfold) j["edge"] = simplex_json(s.edge);
            json src = json::array(), dst = json::array();
            for (const auto& [a, b] : s.psi.pairs) {
                src.push_back(a);
                dst.push_back(b);
            }
            j["psi"] = {{"source", src}, {"target", dst}, {"flavor", to_string(s.psi.flavor)}};
        }
        }
        steps.push_back(std::move(j));
    }
    json classes = json::array();
    for (MissingFacetKind k : tree.classes) classes.push_back(to_string(k));
    const Provenance& p = tree.counters;
    const json doc{{"version", 1},
                   {"mode", to_string(tree.mode)},
                   {"t", tree.t},
                   {"root", tree.root},
                   {"counters",
                    {{"m", p.m},
                     {"n", p.n},
                     {"s", p.s},
                     {"subdivisions", p.subdivisions},
                     {"handles", p.handles},
                     {"irreducible", p.irreducible},
                     {"leaf_g2", p.leaf_g2},
                     {"two_sided_subdivisions", p.two_sided_subdivisions}}},
                   {"classes", classes},
                   {"steps", steps}};
    return doc.dump(1);
}

DecompositionTree tree_from_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::ParseError, e.what());
    }
    try {
        if (doc.at("version") != 1) throw Error(Errc::SchemaError, "unsupported tree version");
        DecompositionTree t;
        const auto mode = parse_mode(doc.at("mode").get<std::string>());
        if (!mode) throw Error(Errc::MalformedTree, "unknown mode");
        t.mode = *mode;
        t.t = doc.at("t").get<VertexId>();
        t.root = doc.at("root").get<int>();
        const json& c = doc.at("counters");
        t.counters.m = c.at("m");
        t.counters.n = c.at("n");
        t.counters.s = c.at("s");
        t.counters.subdivisions = c.at("subdivisions");
        t.counters.handles = c.value("handles", 0);
        t.counters.irreducible = c.value("irreducible", 0);
        t.counters.leaf_g2 = c.value("leaf_g2", std::int64_t{0});
        t.counters.two_sided_subdivisions = c.value("two_sided_subdivisions", 0);
        for (const json& k : doc.value("classes", json::array())) {
            t.classes.push_back(enum_from(k, {MissingFacetKind::ConnectedSumSplit, MissingFacetKind::VertexFoldAt,
                                              MissingFacetKind::EdgeFoldAt, MissingFacetKind::HandleLike,
                                              MissingFacetKind::Unclassified}));
        }
        auto facets_of = [](const json& arr) {
            std::vector<Simplex> fs;
            for (const json& f : arr) fs.push_back(simplex_from(f));
            return Complex::from_simplices(std::move(fs));
        };
        for (const json& j : doc.at("steps")) {
            DecompositionStep s;
            s.kind = enum_from(j.at("kind"), {StepKind::SplitConnectedSum, StepKind::VertexUnfold, StepKind::EdgeUnfold,
                                              StepKind::InverseFacetSubdivision, StepKind::SuspensionBase, StepKind::Leaf});
            s.g2 = j.value("g2", std::int64_t{0});
            s.f0 = j.value("f0", std::size_t{0});
            s.children = j.at("children").get<std::vector<int>>();
            switch (s.kind) {
            case StepKind::Leaf:
                s.leaf = enum_from(j.at("leaf"), {LeafKind::BoundarySimplex, LeafKind::StackedSphere, LeafKind::IrreducibleBase});
                s.complex = facets_of(j.at("facets"));
                break;
            case StepKind::SuspensionBase:
                s.vertex = j.at("vertex");
                s.apex = j.at("apex");
                s.complex = facets_of(j.at("base"));
                break;
            case StepKind::InverseFacetSubdivision:
                s.vertex = j.at("vertex");
                s.tau = simplex_from(j.at("facet"));
                break;
            default: {
                s.tau = simplex_from(j.at("tau"));
                if (j.contains("vertex")) s.vertex = j.at("vertex");
                if (j.contains("edge")) s.edge = simplex_from(j.at("edge"));
                const json& psi = j.at("psi");
                const auto flavor = enum_from(psi.at("flavor"),
                                              {FoldKind::VertexFold, FoldKind::EdgeFold, FoldKind::Handle, FoldKind::ConnectedSum});
                s.psi = FoldingMap::from_sequences(psi.at("source").get<std::vector<VertexId>>(),
                                                   psi.at("target").get<std::vector<VertexId>>(), flavor);
            }
            }
            t.steps.push_back(std::move(s));
        }
        return t;
    } catch (const json::exception& e) {
        throw Error(Errc::MalformedTree, e.what());
    }
}

} // namespace psf
