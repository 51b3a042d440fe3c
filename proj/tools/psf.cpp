// psf: command-line front end for the pseudomanifold library.
//
// Exit codes: 0 ok, 1 check failed, 2 parse or schema error, 3 undecided link,
// 4 ledger mismatch or inadmissible operation, 5 not optimal, 6 irreducible part.

#include "psf/decompose.hpp"
#include "psf/enumerative.hpp"
#include "psf/error.hpp"
#include "psf/identities.hpp"
#include "psf/io.hpp"
#include "psf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace psf;

namespace {

enum Exit { Ok = 0, CheckFailed = 1, ParseFailed = 2, UnknownVerdict = 3, LedgerMismatch = 4, NotOptimalExit = 5, Irreducible = 6 };

std::string join_ints(const std::vector<std::int64_t>& v, const char* sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string signed_str(std::int64_t x) { return x > 0 ? "+" + std::to_string(x) : std::to_string(x); }

int exit_for(const Error& e)
{
    switch (e.code()) {
    case Errc::ParseError:
    case Errc::SchemaError:
    case Errc::MixedDimension:
    case Errc::DuplicateVertexInFacet:
    case Errc::EmptyFacet:
    case Errc::MalformedTree: return ParseFailed;
    case Errc::UnknownSingularity: return UnknownVerdict;
    case Errc::NotOptimal: return NotOptimalExit;
    default: return CheckFailed;
    }
}

std::string read_all(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_info(const std::string& path)
{
    const Complex K = read_facet_file(path);
    const FVector f = f_vector(K);
    const std::vector<std::int64_t> h = h_vector(K).h;
    std::cout << "dimension = " << K.dimension() << "; vertices = " << K.num_vertices() << "; facets = " << K.num_facets() << "\n";
    std::cout << "h = " << join_ints(h) << "\n";
    const NormalityReport nr = is_normal_pseudomanifold(K);
    std::cout << "normal = " << (nr.normal() ? "yes" : "no") << "\n";
    std::string singular = "none";
    std::vector<std::string> unknown;
    if (K.dimension() >= 2 && nr.normal()) {
        std::vector<VertexId> sing;
        for (const auto& sv : classify_vertices(K)) {
            if (sv.verdict == Verdict::Singular) sing.push_back(sv.vertex);
            if (sv.verdict == Verdict::Unknown) unknown.push_back(std::to_string(sv.vertex));
        }
        if (!sing.empty()) {
            singular = "{";
            for (std::size_t i = 0; i < sing.size(); ++i) singular += (i ? "," : "") + std::to_string(sing[i]);
            singular += "}";
        }
    }
    std::cout << "f = " << join_ints(f.entries);
    if (K.dimension() >= 2) std::cout << "; g2 = " << g2(K);
    if (K.dimension() >= 3) std::cout << "; g3 = " << g3(K);
    std::cout << "; singular: " << singular << "\n";
    if (!unknown.empty()) {
        std::cout << "undecided links:";
        for (const auto& u : unknown) std::cout << " " << u;
        std::cout << "\n";
    }
    return Ok;
}

int cmd_check(const std::string& path, bool strict)
{
    const Complex K = read_facet_file(path);
    const NormalityReport nr = is_normal_pseudomanifold(K);
    if (!nr.normal()) {
        std::cout << "not a normal pseudomanifold:";
        if (!nr.pure) std::cout << " impure";
        if (!nr.ridge_degrees_ok) std::cout << " ridge-degrees";
        if (!nr.strongly_connected) std::cout << " not-strongly-connected";
        if (!nr.links_connected) std::cout << " disconnected-links";
        std::cout << "\n";
        for (const Simplex& w : nr.witnesses) std::cout << "witness " << w.to_string() << "\n";
        return CheckFailed;
    }
    std::cout << "normal pseudomanifold\n";
    if (strict) {
        for (const auto& sv : classify_vertices(K)) {
            if (sv.verdict == Verdict::Unknown) {
                std::cout << "undecided link at vertex " << sv.vertex << "\n";
                return UnknownVerdict;
            }
        }
    }
    return Ok;
}

int cmd_build(const std::string& script, const std::string& out, bool fault)
{
    const BuildResult r = run_script(read_all(script), fault);
    for (const LedgerEntry& e : r.ledger) {
        std::cout << "step " << e.step << " " << e.op << ": dg2 = " << signed_str(e.dg2) << ", dg3 = " << signed_str(e.dg3);
        if (e.expected) {
            std::cout << " (expected " << signed_str(e.expected->first) << ", " << signed_str(e.expected->second) << ")"
                      << (e.ok ? "" : " MISMATCH");
        }
        std::cout << "\n";
    }
    std::string l2, l3;
    for (std::size_t i = 1; i < r.ledger.size(); ++i) {
        l2 += (i > 1 ? "," : "") + (r.ledger[i].dg2 == 0 ? std::string("0") : signed_str(r.ledger[i].dg2));
        l3 += (i > 1 ? "," : "") + (r.ledger[i].dg3 == 0 ? std::string("0") : signed_str(r.ledger[i].dg3));
    }
    std::cout << "g2 ledger: " << l2 << "\n";
    std::cout << "g3 ledger: " << l3 << "\n";
    if (!out.empty()) write_facet_file(out, r.complex);
    else std::cout << print_facets(r.complex);
    return r.ledger_ok() ? Ok : LedgerMismatch;
}

int cmd_decompose(const std::string& path, VertexId t, const std::string& mode_name, const std::string& out)
{
    const Complex K = read_facet_file(path);
    const auto mode = parse_mode(mode_name);
    if (!mode) {
        std::cerr << "unknown mode '" << mode_name << "'\n";
        return CheckFailed;
    }
    const DecompositionTree tree = decompose(K, t, {*mode});
    const Complex back = rebuild(tree);
    const Provenance& p = tree.counters;
    std::cout << "steps = " << tree.steps.size() << "; m = " << p.m << "; n = " << p.n << "; sums = " << p.s
              << "; subdivisions = " << p.subdivisions << "\n";
    const std::int64_t g = g2(K);
    const std::int64_t predicted = 6 * p.m + 10 * p.n + p.leaf_g2;
    std::cout << "g2 = " << g << "; 6m + 10n = " << 6 * p.m + 10 * p.n << "; leaves = " << p.leaf_g2 << "; "
              << (g == predicted ? "consistent" : "INCONSISTENT") << "\n";
    std::cout << "rebuild " << (back == K ? "matches" : "DIFFERS") << "\n";
    if (!out.empty()) {
        std::ofstream o(out);
        o << tree_to_json(tree) << "\n";
    }
    if (back != K || g != predicted) return CheckFailed;
    if (p.irreducible > 0) {
        std::cout << p.irreducible << " irreducible part(s)\n";
        return Irreducible;
    }
    return Ok;
}

int cmd_verify_identities(int seeds, int ops, bool fault, std::uint64_t first)
{
    const IdentityReport r = verify_identities(seeds, ops, fault, first);
    for (const auto& [name, t] : r.tallies) {
        std::cout << name << ": " << t.checked - t.failed << "/" << t.checked << (t.failed ? " FAILED" : " exact") << "\n";
    }
    int laws = 0;
    for (const char* law : {"connected sum (additive)", "vertex fold (+10,-10)", "edge fold (+6,-4)", "handle (+15,-20)"}) {
        if (r.tallies.count(law)) ++laws;
    }
    std::cout << laws << " identities x " << r.scripts << " scripts: " << (r.all_exact() ? "all exact" : "failures") << "\n";
    return r.all_exact() ? Ok : CheckFailed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Normal pseudomanifolds: invariants, constructions and decompositions"};
    app.require_subcommand(1);

    std::string path, out, mode = "two-singularity-edge-fold";
    bool strict = false, fault = false;
    VertexId t = 0;
    int seeds = 100, ops = 12;
    std::uint64_t first = 0;

    auto* info = app.add_subcommand("info", "f-, h-, g-vectors, normality and singular vertices");
    info->add_option("path", path, "facet file")->required();

    auto* check = app.add_subcommand("check", "exit 0 iff the file is a normal pseudomanifold");
    check->add_option("path", path, "facet file")->required();
    check->add_flag("--strict", strict, "also fail (exit 3) on undecided links");

    auto* build = app.add_subcommand("build", "replay a JSON build script with its g-ledger");
    build->add_option("script", path, "build script")->required();
    build->add_option("-o,--output", out, "facet file to write");
    build->add_flag("--inject-fault", fault, "skew the ledger predictions");

    auto* dec = app.add_subcommand("decompose", "decompose into folds, sums and simplex boundaries");
    dec->add_option("path", path, "facet file")->required();
    dec->add_option("--vertex", t, "the singular vertex t")->required();
    dec->add_option("--mode", mode, "one-singularity | two-singularity-suspension | two-singularity-edge-fold");
    dec->add_option("-o,--output", out, "tree JSON to write");

    auto* ver = app.add_subcommand("verify-identities", "check the g-change laws on random build scripts");
    ver->add_option("--seeds", seeds, "number of scripts");
    ver->add_option("--ops", ops, "operations per script");
    ver->add_option("--first-seed", first, "first seed");
    ver->add_flag("--inject-fault", fault, "skew the ledger predictions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) return cmd_info(path);
        if (*check) return cmd_check(path, strict);
        if (*build) return cmd_build(path, out, fault);
        if (*dec) return cmd_decompose(path, t, mode, out);
        if (*ver) return cmd_verify_identities(seeds, ops, fault, first);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (*build && (e.code() == Errc::Inadmissible || e.code() == Errc::IntersectionNotSingleVertex ||
                       e.code() == Errc::IntersectionNotEdge || e.code() == Errc::InadmissibleIdentification ||
                       e.code() == Errc::FacetsShareVertices || e.code() == Errc::NotAFacet)) {
            return LedgerMismatch;
        }
        return exit_for(e);
    }
    return Ok;
}
