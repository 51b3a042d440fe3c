#include "psf/decompose.hpp"

#include "psf/enumerative.hpp"
#include "psf/error.hpp"
#include "psf/verify.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <set>

namespace psf {

namespace {

std::vector<Simplex> sorted_boundary(const Simplex& s)
{
    auto b = s.boundary();
    std::sort(b.begin(), b.end());
    return b;
}

LabelPool pool_for(const Complex& K) { return LabelPool(K.fresh_vertex()); }

int side_of_facet(const SeparationReport& rep, const Simplex& f, const Simplex& face)
{
    int side = 0;
    for (VertexId x : f.set_intersection(face)) {
        const int s = rep.at(x).side_of(f.without(x));
        if (s == 0) throw Error(Errc::CaseFallthrough, "facet " + f.to_string() + " lies on no side at " + std::to_string(x));
        if (side != 0 && s != side) throw Error(Errc::SideAssignmentInconsistent, "facet " + f.to_string() + " gets both sides");
        side = s;
    }
    return side;
}

Simplex rename(const Simplex& f, const std::map<VertexId, VertexId>& m)
{
    std::vector<VertexId> out;
    for (VertexId w : f) {
        const auto it = m.find(w);
        out.push_back(it == m.end() ? w : it->second);
    }
    return Simplex(out);
}

std::vector<VertexId> seq(const Simplex& s) { return std::vector<VertexId>(s.begin(), s.end()); }

/// The positional image of s under m, for building folding maps.
std::vector<VertexId> seq(const Simplex& s, const std::map<VertexId, VertexId>& m)
{
    std::vector<VertexId> out;
    for (VertexId w : s) out.push_back(m.count(w) ? m.at(w) : w);
    return out;
}

} // namespace

Complex inverse_facet_subdivision(const Complex& K, VertexId u)
{
    if (!K.has_vertex(u)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(u));
    const int d = K.dimension();
    if (K.num_vertices() < static_cast<std::size_t>(d) + 3) {
        throw Error(Errc::MinimalComplex, std::to_string(K.num_vertices()) + " vertices leave nothing to undo");
    }
    auto lf = link_facets(Simplex{u}, K);
    std::sort(lf.begin(), lf.end());
    std::vector<VertexId> verts;
    for (const Simplex& f : lf) verts.insert(verts.end(), f.begin(), f.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    const Simplex sigma{std::span<const VertexId>(verts)};
    if (sigma.size() != static_cast<std::size_t>(d) + 1 || lf != sorted_boundary(sigma)) {
        throw Error(Errc::LinkNotSimplexBoundary, "lk(" + std::to_string(u) + ") is not the boundary of a simplex");
    }
    if (K.contains(sigma)) throw Error(Errc::SimplexAlreadyPresent, sigma.to_string() + " is already a face");
    std::vector<Simplex> fs;
    for (const Simplex& f : K.facets()) {
        if (!f.contains(u)) fs.push_back(f);
    }
    fs.push_back(sigma);
    return Complex::from_simplices(std::move(fs));
}

SplitResult split_connected_sum(const Complex& K, const Simplex& tau, LabelPool& pool)
{
    if (!is_missing_facet(K, tau)) throw Error(Errc::PreconditionUnmet, tau.to_string() + " is not a missing facet");
    const auto [comp, n] = dual_components(K.facets(), sorted_boundary(tau));
    if (n != 2) throw Error(Errc::NotSplit, "∂" + tau.to_string() + " leaves " + std::to_string(n) + " dual component(s)");
    std::vector<Simplex> a, b;
    std::set<VertexId> va, vb;
    for (std::size_t i = 0; i < K.num_facets(); ++i) {
        const Simplex& f = K.facets()[i];
        (comp[i] == comp[0] ? a : b).push_back(f);
        for (VertexId w : f) {
            if (!tau.contains(w)) (comp[i] == comp[0] ? va : vb).insert(w);
        }
    }
    for (VertexId w : va) {
        if (vb.count(w)) throw Error(Errc::NotSplit, "vertex " + std::to_string(w) + " lies on both sides");
    }
    std::map<VertexId, VertexId> copy;
    std::vector<VertexId> dst;
    for (VertexId x : tau) dst.push_back(copy[x] = pool.take());
    for (Simplex& f : b) f = rename(f, copy);
    a.push_back(tau);
    b.push_back(Simplex(dst));
    SplitResult r{Complex::from_simplices(std::move(a)), Complex::from_simplices(std::move(b)),
                  FoldingMap::from_sequences(seq(tau), dst, FoldKind::ConnectedSum)};
    if (connected_sum(r.first, r.second, r.psi) != K) {
        throw Error(Errc::SideAssignmentInconsistent, "summing the parts of " + tau.to_string() + " does not give back K");
    }
    return r;
}

SplitResult split_connected_sum(const Complex& K, const Simplex& tau)
{
    LabelPool pool = pool_for(K);
    return split_connected_sum(K, tau, pool);
}

UnfoldResult vertex_unfold(const Complex& K, const Simplex& tau, VertexId v, LabelPool& pool)
{
    const MissingFacetClass c = classify_missing_facet(K, tau);
    if (c.kind != MissingFacetKind::VertexFoldAt || c.vertex != v) {
        throw Error(Errc::PreconditionUnmet, tau.to_string() + " is not a vertex fold at " + std::to_string(v));
    }
    const SeparationReport rep = separation_report(K, tau, v);
    const Simplex face = tau.without(v);
    std::map<VertexId, VertexId> prime;
    for (VertexId x : face) prime[x] = pool.take();

    // rewrite the part away from v by sides, then cone its boundary from v
    std::vector<Simplex> rest;
    for (const Simplex& f : K.facets()) {
        if (f.contains(v)) continue;
        rest.push_back(side_of_facet(rep, f, face) < 0 ? rename(f, prime) : f);
    }
    std::map<Simplex, int> ridge_degree;
    for (const Simplex& f : rest) {
        for (const Simplex& r : f.boundary()) ++ridge_degree[r];
    }
    std::vector<Simplex> fs = rest;
    for (const auto& [r, deg] : ridge_degree) {
        if (deg == 1) fs.push_back(r.with(v));
    }
    UnfoldResult out{Complex::from_simplices(std::move(fs)),
                     FoldingMap::from_sequences(seq(tau), seq(tau, prime), FoldKind::VertexFold)};
    const Admissibility ok = check_vertex_fold_admissible(out.complex, out.psi);
    if (!ok || vertex_fold(out.complex, out.psi) != K) {
        throw Error(Errc::SideAssignmentInconsistent,
                    "folding the unfolded complex does not give back K" + (ok ? std::string() : ": " + ok.reason));
    }
    return out;
}

UnfoldResult vertex_unfold(const Complex& K, const Simplex& tau, VertexId v)
{
    LabelPool pool = pool_for(K);
    return vertex_unfold(K, tau, v, pool);
}

UnfoldResult edge_unfold(const Complex& K, const Simplex& tau, const Simplex& uv, LabelPool& pool)
{
    const MissingFacetClass c = classify_missing_facet(K, tau);
    if (c.kind != MissingFacetKind::EdgeFoldAt || c.edge != uv) {
        throw Error(Errc::PreconditionUnmet, tau.to_string() + " is not an edge fold along " + uv.to_string());
    }
    const VertexId v = uv.back();
    const SeparationReport rep = separation_report(K, tau, v);
    const Simplex face = tau.set_difference(uv);
    std::map<VertexId, VertexId> minus;
    for (VertexId x : face) minus[x] = pool.take();

    // every facet through a, b or c takes the copy on its side; u and v stay put
    std::vector<Simplex> fs;
    for (const Simplex& f : K.facets()) fs.push_back(side_of_facet(rep, f, face) < 0 ? rename(f, minus) : f);
    const Simplex lower = rename(tau, minus);
    fs.push_back(tau);
    fs.push_back(lower);
    UnfoldResult out{Complex::from_simplices(std::move(fs)), FoldingMap::from_sequences(seq(tau), seq(tau, minus), FoldKind::EdgeFold)};
    const Admissibility ok = check_edge_fold_admissible(out.complex, out.psi);
    if (!ok || edge_fold(out.complex, out.psi) != K) {
        throw Error(Errc::SideAssignmentInconsistent,
                    "folding the unfolded complex does not give back K" + (ok ? std::string() : ": " + ok.reason));
    }
    return out;
}

UnfoldResult edge_unfold(const Complex& K, const Simplex& tau, const Simplex& uv)
{
    LabelPool pool = pool_for(K);
    return edge_unfold(K, tau, uv, pool);
}

std::optional<SuspensionMatch> recognize_one_vertex_suspension(const Complex& K, VertexId t, VertexId t1)
{
    if (t == t1 || !K.has_vertex(t) || !K.has_vertex(t1) || !K.contains(Simplex{t, t1})) return std::nullopt;
    for (auto [apex, v] : {std::pair{t1, t}, std::pair{t, t1}}) {
        if (is_one_vertex_suspension(K, apex, v)) return SuspensionMatch{link(Simplex{apex}, K), apex, v};
    }
    return std::nullopt;
}

std::string_view to_string(Mode m) noexcept
{
    switch (m) {
    case Mode::OneSingularity: return "one-singularity";
    case Mode::TwoSingularitySuspension: return "two-singularity-suspension";
    case Mode::TwoSingularityEdgeFold: return "two-singularity-edge-fold";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view s) noexcept
{
    for (Mode m : {Mode::OneSingularity, Mode::TwoSingularitySuspension, Mode::TwoSingularityEdgeFold}) {
        if (s == to_string(m)) return m;
    }
    return std::nullopt;
}

std::string_view to_string(StepKind k) noexcept
{
    switch (k) {
    case StepKind::SplitConnectedSum: return "split";
    case StepKind::VertexUnfold: return "vertex-unfold";
    case StepKind::EdgeUnfold: return "edge-unfold";
    case StepKind::InverseFacetSubdivision: return "inverse-subdivision";
    case StepKind::SuspensionBase: return "suspension";
    case StepKind::Leaf: return "leaf";
    }
    return "?";
}

std::string_view to_string(LeafKind k) noexcept
{
    switch (k) {
    case LeafKind::BoundarySimplex: return "boundary-simplex";
    case LeafKind::StackedSphere: return "stacked-sphere";
    case LeafKind::IrreducibleBase: return "irreducible";
    }
    return "?";
}

namespace {

std::vector<VertexId> singular_vertices(const Complex& K)
{
    std::vector<VertexId> out;
    for (const auto& sv : classify_vertices(K)) {
        if (sv.verdict == Verdict::Unknown) {
            throw Error(Errc::UnknownSingularity, "cannot decide the link of " + std::to_string(sv.vertex));
        }
        if (sv.verdict == Verdict::Singular) out.push_back(sv.vertex);
    }
    return out;
}

bool is_boundary_simplex(const Complex& K)
{
    const auto n = static_cast<std::size_t>(K.dimension()) + 2;
    return K.num_vertices() == n && K.num_facets() == n;
}

class Engine
{
public:
    Engine(const Complex& K, VertexId t, const DecomposeOptions& opts) : pool_(K.fresh_vertex()), opts_(opts)
    {
        tree_.mode = opts.mode;
        tree_.t = t;
    }

    DecompositionTree run(const Complex& K)
    {
        tree_.root = node(K, tree_.t);
        return std::move(tree_);
    }

private:
    LabelPool pool_;
    DecomposeOptions opts_;
    DecompositionTree tree_;

    int push(DecompositionStep s, const Complex& K)
    {
        s.g2 = g2(K);
        s.f0 = K.num_vertices();
        tree_.steps.push_back(std::move(s));
        return static_cast<int>(tree_.steps.size()) - 1;
    }

    int leaf(const Complex& K, LeafKind kind)
    {
        DecompositionStep s;
        s.kind = StepKind::Leaf;
        s.leaf = kind;
        s.complex = K;
        if (kind == LeafKind::IrreducibleBase) ++tree_.counters.irreducible;
        tree_.counters.leaf_g2 += g2(K);
        return push(std::move(s), K);
    }

    // the child must be smaller in (g2, f0), and in verify mode normal and still optimal where singular
    int child(const Complex& parent, const Complex& C, VertexId t)
    {
        const auto before = std::pair{g2(parent), parent.num_vertices()};
        const auto after = std::pair{g2(C), C.num_vertices()};
        if (!(after < before)) throw Error(Errc::PreconditionUnmet, "a decomposition step failed to shrink (g2, f0)");
        if (opts_.verify) {
            const NormalityReport nr = is_normal_pseudomanifold(C);
            if (!nr.normal()) throw Error(Errc::PreconditionUnmet, "intermediate complex is not normal");
            if (C.has_vertex(t) && classify_vertex(C, t).verdict == Verdict::Singular && !optimality_check(C, t).both()) {
                throw Error(Errc::NotOptimal, "optimality lost at " + std::to_string(t));
            }
        }
        return node(C, t);
    }

    int node(const Complex& K, VertexId t)
    {
        if (is_boundary_simplex(K)) return leaf(K, LeafKind::BoundarySimplex);
        const std::vector<VertexId> sing = singular_vertices(K);
        if (sing.empty()) return manifold_node(K, t);
        if (std::find(sing.begin(), sing.end(), t) == sing.end()) t = sing.front();

        if (opts_.mode == Mode::TwoSingularitySuspension && sing.size() == 2) {
            if (auto m = recognize_one_vertex_suspension(K, sing[0], sing[1])) {
                DecompositionStep s;
                s.kind = StepKind::SuspensionBase;
                s.vertex = m->vertex;
                s.apex = m->apex;
                s.complex = m->base;
                tree_.counters.leaf_g2 += g2(K);
                return push(std::move(s), K);
            }
        }

        // undo subdivisions away from t first
        for (VertexId u : K.vertices()) {
            if (u == t || K.adjacent(u, t) || std::find(sing.begin(), sing.end(), u) != sing.end()) continue;
            if (auto r = try_inverse(K, u, t)) return *r;
        }
        if (opts_.verify) {
            for (VertexId u : K.vertices()) {
                if (u != t && !K.adjacent(u, t)) {
                    throw Error(Errc::PreconditionUnmet, "vertex " + std::to_string(u) + " is still outside st(t)");
                }
            }
        }

        std::vector<Simplex> through_t, others;
        for (const Simplex& tau : missing_simplices(K, K.dimension())) (tau.contains(t) ? through_t : others).push_back(tau);
        if (through_t.empty() && others.empty()) throw Error(Errc::NoMissingFacetFound, "no missing facet to act on");
        for (const auto* list : {&through_t, &others}) {
            for (const Simplex& tau : *list) {
                if (auto r = act(K, tau, t, sing)) return *r;
            }
        }
        return leaf(K, LeafKind::IrreducibleBase);
    }

    int manifold_node(const Complex& K, VertexId t)
    {
        const auto missing = missing_simplices(K, K.dimension());
        for (const Simplex& tau : missing) {
            if (auto r = act(K, tau, t, {})) return *r;
        }
        if (g2(K) == 0 && is_stacked_sphere(K)) return leaf(K, LeafKind::StackedSphere);
        return leaf(K, LeafKind::IrreducibleBase);
    }

    std::optional<int> try_inverse(const Complex& K, VertexId u, VertexId t)
    {
        Complex C;
        try {
            C = inverse_facet_subdivision(K, u);
        } catch (const Error& e) {
            if (e.code() == Errc::LinkNotSimplexBoundary || e.code() == Errc::SimplexAlreadyPresent ||
                e.code() == Errc::MinimalComplex) {
                return std::nullopt;
            }
            throw;
        }
        DecompositionStep s;
        s.kind = StepKind::InverseFacetSubdivision;
        s.vertex = u;
        s.tau = C.facets()[0];
        for (const Simplex& f : C.facets()) {
            if (!K.has_facet(f)) s.tau = f;
        }
        ++tree_.counters.subdivisions;
        const int id = push(std::move(s), K);
        const int c = child(K, C, t);
        tree_.steps[id].children = {c};
        return id;
    }

    std::optional<int> act(const Complex& K, const Simplex& tau, VertexId t, const std::vector<VertexId>& sing)
    {
        const MissingFacetClass c = classify_missing_facet(K, tau);
        auto singular = [&](VertexId v) { return std::find(sing.begin(), sing.end(), v) != sing.end(); };
        DecompositionStep s;
        s.tau = tau;
        if (c.kind == MissingFacetKind::ConnectedSumSplit) {
            SplitResult r = split_connected_sum(K, tau, pool_);
            s.kind = StepKind::SplitConnectedSum;
            s.psi = r.psi;
            ++tree_.counters.s;
            tree_.classes.push_back(c.kind);
            const int id = push(std::move(s), K);
            const int a = child(K, r.first, t);
            const int b = child(K, r.second, tau.contains(t) ? r.psi.image(t) : t);
            tree_.steps[id].children = {a, b};
            return id;
        }
        if (c.kind == MissingFacetKind::VertexFoldAt && singular(c.vertex)) {
            UnfoldResult r = vertex_unfold(K, tau, c.vertex, pool_);
            two_sided_note(K, tau, c.vertex);
            s.kind = StepKind::VertexUnfold;
            s.vertex = c.vertex;
            s.psi = r.psi;
            ++tree_.counters.n;
            tree_.classes.push_back(c.kind);
            const int id = push(std::move(s), K);
            const int ch = child(K, r.complex, t);
            tree_.steps[id].children = {ch};
            return id;
        }
        if (c.kind == MissingFacetKind::EdgeFoldAt && opts_.mode == Mode::TwoSingularityEdgeFold && singular(c.edge[0]) &&
            singular(c.edge[1])) {
            UnfoldResult r = edge_unfold(K, tau, c.edge, pool_);
            s.kind = StepKind::EdgeUnfold;
            s.edge = c.edge;
            s.psi = r.psi;
            ++tree_.counters.m;
            tree_.classes.push_back(c.kind);
            const int id = push(std::move(s), K);
            const int ch = child(K, r.complex, t);
            tree_.steps[id].children = {ch};
            return id;
        }
        return std::nullopt;
    }

    void two_sided_note(const Complex& K, const Simplex& tau, VertexId v)
    {
        const TwoSidedResult r = two_sided(K, tau, v);
        if (!r) throw Error(Errc::SideAssignmentInconsistent, r.witness);
        tree_.counters.two_sided_subdivisions += r.subdivision_needed;
    }
};

} // namespace

DecompositionTree decompose(const Complex& K, VertexId t, const DecomposeOptions& opts_in)
{
    DecomposeOptions opts = opts_in;
    if (const char* env = std::getenv("PSF_DEBUG_VERIFY"); env && std::string_view(env) == "1") opts.verify = true;
    if (K.dimension() != 4) throw Error(Errc::DimensionMismatch, "decomposition needs a 4-dimensional complex");
    if (!K.has_vertex(t)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(t));
    const NormalityReport nr = is_normal_pseudomanifold(K);
    if (!nr.normal()) throw Error(Errc::PreconditionUnmet, "input is not a normal pseudomanifold");
    const std::vector<VertexId> sing = singular_vertices(K);
    const bool has_t = std::find(sing.begin(), sing.end(), t) != sing.end();
    const bool fits = opts.mode == Mode::OneSingularity ? (sing.empty() || (sing.size() == 1 && has_t))
                                                        : (sing.size() == 2 && has_t);
    if (!fits) {
        throw Error(Errc::ModeMismatch, std::to_string(sing.size()) + " singular vertices do not fit mode " +
                                            std::string(to_string(opts.mode)) + " at " + std::to_string(t));
    }
    if (!optimality_check(K, t).both()) throw Error(Errc::NotOptimal, "g2 or g3 exceeds that of lk(" + std::to_string(t) + ")");
    return Engine(K, t, opts).run(K);
}

Complex rebuild(const DecompositionTree& tree)
{
    const auto n = static_cast<int>(tree.steps.size());
    std::vector<char> visiting(tree.steps.size(), 0);
    std::function<Complex(int)> go = [&](int i) -> Complex {
        if (i < 0 || i >= n) throw Error(Errc::MalformedTree, "step index " + std::to_string(i) + " out of range");
        if (visiting[static_cast<std::size_t>(i)]) throw Error(Errc::MalformedTree, "cycle through step " + std::to_string(i));
        visiting[static_cast<std::size_t>(i)] = 1;
        const DecompositionStep& s = tree.steps[static_cast<std::size_t>(i)];
        const std::size_t want = s.kind == StepKind::SplitConnectedSum                             ? 2
                                 : (s.kind == StepKind::Leaf || s.kind == StepKind::SuspensionBase) ? 0
                                                                                                    : 1;
        if (s.children.size() != want) {
            throw Error(Errc::MalformedTree, "step " + std::to_string(i) + " has " + std::to_string(s.children.size()) + " children");
        }
        Complex out;
        switch (s.kind) {
        case StepKind::Leaf: out = s.complex; break;
        case StepKind::SuspensionBase: out = one_vertex_suspension(s.complex, s.vertex, s.apex); break;
        case StepKind::InverseFacetSubdivision: out = facet_subdivision(go(s.children[0]), s.tau, s.vertex); break;
        case StepKind::SplitConnectedSum: {
            const Complex a = go(s.children[0]);
            out = connected_sum(a, go(s.children[1]), s.psi);
            break;
        }
        case StepKind::VertexUnfold: out = vertex_fold(go(s.children[0]), s.psi); break;
        case StepKind::EdgeUnfold: out = edge_fold(go(s.children[0]), s.psi); break;
        }
        visiting[static_cast<std::size_t>(i)] = 0;
        return out;
    };
    if (tree.steps.empty()) throw Error(Errc::MalformedTree, "empty tree");
    return go(tree.root);
}

} // namespace psf
