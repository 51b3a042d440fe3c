#include "psf/identities.hpp"

#include "psf/constructors.hpp"
#include "psf/enumerative.hpp"
#include "psf/io.hpp"
#include "psf/verify.hpp"

#include <json.hpp>

namespace psf {

using nlohmann::json;

bool IdentityReport::all_exact() const
{
    return std::all_of(tallies.begin(), tallies.end(), [](const auto& kv) { return kv.second.failed == 0; });
}

namespace {

json seq(const Simplex& s) { return std::vector<VertexId>(s.begin(), s.end()); }

json map_args(const FoldingMap& psi)
{
    json src = json::array(), dst = json::array();
    for (const auto& [a, b] : psi.pairs) {
        src.push_back(a);
        dst.push_back(b);
    }
    return {{"source", src}, {"target", dst}};
}

} // namespace

std::string random_script(std::uint64_t seed, int ops)
{
    SplitMix64 rng(seed * 0x9e3779b97f4a7c15ull + 17);
    json steps = json::array();
    // chains focused at a vertex or an edge grow folds there; unfocused ones grow handles
    const int k = 10 + static_cast<int>(rng.below(7));
    const int focus_kind = static_cast<int>(rng.below(3));
    json focus = focus_kind == 0 ? json::array() : focus_kind == 1 ? json::array({0}) : json::array({0, 1});
    const std::uint64_t chain_seed = rng.next() % 1000;
    steps.push_back({{"op", "stacked_chain"}, {"args", {{"k", k}, {"focus", focus}, {"seed", chain_seed}}}});
    Complex K = stacked_chain(4, k, Simplex(focus.get<std::vector<VertexId>>()), chain_seed);

    for (int i = 0; i < ops; ++i) {
        const int op = static_cast<int>(rng.below(5));
        if (op == 0) {
            const Simplex& f = K.facets()[rng.below(K.num_facets())];
            steps.push_back({{"op", "facet_subdivision"}, {"args", {{"facet", seq(f)}}}});
            K = facet_subdivision(K, f);
        } else if (op == 1) {
            const int sk = 1 + static_cast<int>(rng.below(3));
            const std::uint64_t ss = rng.next() % 1000;
            const Complex raw = stacked_sphere(4, sk, ss);
            const Simplex& f = K.facets()[rng.below(K.num_facets())];
            const Simplex& target = raw.facets()[rng.below(raw.num_facets())];
            std::vector<VertexId> dst(target.begin(), target.end());
            rng.shuffle(dst);
            json a = {{"with", {{"op", "stacked_sphere"}, {"args", {{"k", sk}, {"seed", ss}}}}},
                      {"source", seq(f)},
                      {"target", dst}};
            steps.push_back({{"op", "connected_sum"}, {"args", a}});
            const Complex B = shift_labels(raw, K.fresh_vertex());
            std::map<VertexId, VertexId> shift;
            for (std::size_t j = 0; j < raw.vertices().size(); ++j) shift[raw.vertices()[j]] = B.vertices()[j];
            std::vector<VertexId> moved;
            for (VertexId v : dst) moved.push_back(shift.at(v));
            K = connected_sum(K, B, FoldingMap::from_sequences(std::vector<VertexId>(f.begin(), f.end()), moved, FoldKind::ConnectedSum));
        } else {
            std::optional<FoldingMap> psi;
            const char* name = op == 2 ? "vertex_fold" : op == 3 ? "edge_fold" : "handle";
            if (op == 2) psi = find_vertex_fold(K, std::nullopt, rng);
            if (op == 3) psi = find_edge_fold(K, std::nullopt, rng);
            if (op == 4) psi = find_handle(K, rng);
            if (!psi) continue;
            steps.push_back({{"op", name}, {"args", map_args(*psi)}});
            K = op == 2 ? vertex_fold(K, *psi) : op == 3 ? edge_fold(K, *psi) : handle_addition(K, *psi);
        }
    }
    return json{{"version", 1}, {"steps", steps}}.dump();
}

IdentityReport verify_identities(int seeds, int ops, bool fault, std::uint64_t first_seed)
{
    IdentityReport rep;
    auto tally = [&](const std::string& name, bool ok) {
        auto& t = rep.tallies[name];
        ++t.checked;
        if (!ok) ++t.failed;
    };
    for (int s = 0; s < seeds; ++s) {
        const std::string script = random_script(first_seed + static_cast<std::uint64_t>(s), ops);
        const BuildResult r = run_script(script, fault);
        ++rep.scripts;
        for (std::size_t i = 1; i < r.ledger.size(); ++i) {
            const LedgerEntry& e = r.ledger[i];
            const std::string name = e.op == "connected_sum"       ? "connected sum (additive)"
                                     : e.op == "vertex_fold"       ? "vertex fold (+10,-10)"
                                     : e.op == "edge_fold"         ? "edge fold (+6,-4)"
                                     : e.op == "handle"            ? "handle (+15,-20)"
                                     : e.op == "facet_subdivision" ? "facet subdivision (0,0)"
                                                                   : e.op;
            tally(name, e.ok);
        }
        const Complex& K = r.complex;
        tally("normal pseudomanifold", is_normal_pseudomanifold(K).normal());
        tally("replay determinism", print_facets(run_script(script, fault).complex) == print_facets(K));
        tally("facet file round trip", parse_facets(print_facets(K)) == K);
        const std::int64_t g = g2(K);
        bool bound = true;
        for (VertexId v : K.vertices()) bound = bound && g2(link(Simplex{v}, K)) <= g;
        tally("g2(K) >= g2(lk v)", bound);
    }
    return rep;
}

} // namespace psf
