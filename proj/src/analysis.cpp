#include "psf/analysis.hpp"

#include "psf/error.hpp"
#include "psf/verify.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <map>
#include <unordered_map>

namespace psf {

int VertexSeparation::side_of(const Simplex& f) const
{
    if (std::binary_search(plus.begin(), plus.end(), f)) return 1;
    if (std::binary_search(minus.begin(), minus.end(), f)) return -1;
    return 0;
}

const VertexSeparation& SeparationReport::at(VertexId x) const
{
    for (const auto& s : per_vertex) {
        if (s.x == x) return s;
    }
    throw Error(Errc::UnknownVertex, "vertex " + std::to_string(x) + " not in " + missing_facet.to_string());
}

bool is_missing_facet(const Complex& K, const Simplex& tau)
{
    if (static_cast<int>(tau.size()) != K.dimension() + 1 || K.contains(tau)) return false;
    for (const Simplex& r : tau.boundary()) {
        if (!K.contains(r)) return false;
    }
    return true;
}

namespace {

void require_missing(const Complex& K, const Simplex& tau)
{
    if (!is_missing_facet(K, tau)) throw Error(Errc::NotMissingFacet, tau.to_string());
}

std::vector<Simplex> sorted_boundary(const Simplex& s)
{
    auto b = s.boundary();
    std::sort(b.begin(), b.end());
    return b;
}

} // namespace

VertexSeparation separates_link(const Complex& K, VertexId x, const Simplex& tau, std::optional<VertexId> anchor, bool flip)
{
    require_missing(K, tau);
    if (!tau.contains(x)) throw Error(Errc::InvalidArgument, "vertex " + std::to_string(x) + " not in " + tau.to_string());
    std::vector<Simplex> lf = link_facets(Simplex{x}, K);
    std::sort(lf.begin(), lf.end());
    const Simplex face = tau.without(x);
    auto [comp, n] = dual_components(lf, sorted_boundary(face));
    if (n > 2) {
        throw Error(Errc::MoreThanTwoComponents,
                    "lk(" + std::to_string(x) + ") falls into " + std::to_string(n) + " pieces along " + face.to_string());
    }
    VertexSeparation out;
    out.x = x;
    out.components = n;
    out.separates = n == 2;
    if (!out.separates) {
        out.plus = lf;
        return out;
    }
    VertexId w = (anchor && *anchor != x && tau.contains(*anchor)) ? *anchor : (tau[0] == x ? tau[1] : tau[0]);
    const Simplex ridge = tau.without(w);
    const auto pn = link_facets(ridge, K);
    if (pn.size() != 2) throw Error(Errc::PreconditionUnmet, "ridge " + ridge.to_string() + " is not in two facets");
    const VertexId p = std::min(pn[0][0], pn[1][0]);
    const Simplex seed = ridge.without(x).with(p);
    const auto it = std::lower_bound(lf.begin(), lf.end(), seed);
    const int plus_comp = comp[static_cast<std::size_t>(it - lf.begin())];
    for (std::size_t i = 0; i < lf.size(); ++i) {
        const bool is_plus = (comp[i] == plus_comp) != flip;
        (is_plus ? out.plus : out.minus).push_back(lf[i]);
    }
    return out;
}

int separation_components_poset(const Complex& K, VertexId x, const Simplex& tau)
{
    require_missing(K, tau);
    const Complex L = link(Simplex{x}, K);
    const Simplex barrier = tau.without(x);
    // every non-empty face of the link that is not a face of ∂(τ−x), joined along cover relations
    std::vector<Simplex> nodes;
    for (int k = 0; k <= L.dimension(); ++k) {
        for (const Simplex& s : L.faces_of_dim(k)) {
            if (!s.is_face_of(barrier)) nodes.push_back(s);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    auto index = [&](const Simplex& s) -> std::optional<std::size_t> {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), s);
        if (it == nodes.end() || *it != s) return std::nullopt;
        return static_cast<std::size_t>(it - nodes.begin());
    };
    boost::disjoint_sets_with_storage<> ds(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].size() < 2) continue;
        for (const Simplex& b : nodes[i].boundary()) {
            if (auto j = index(b)) ds.union_set(i, *j);
        }
    }
    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < nodes.size(); ++i) roots.push_back(ds.find_set(i));
    std::sort(roots.begin(), roots.end());
    return static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());
}

SeparationReport separation_report(const Complex& K, const Simplex& tau, std::optional<VertexId> anchor, bool flip)
{
    require_missing(K, tau);
    SeparationReport r;
    r.missing_facet = tau;
    for (VertexId x : tau) r.per_vertex.push_back(separates_link(K, x, tau, anchor, flip));
    return r;
}

TwoSidedResult two_sided(const Complex& K, const Simplex& tau, VertexId v)
{
    require_missing(K, tau);
    const SeparationReport rep = separation_report(K, tau, v);
    for (const auto& s : rep.per_vertex) {
        if (s.x != v && !s.separates) {
            throw Error(Errc::PreconditionUnmet, "vertex " + std::to_string(s.x) + " does not separate");
        }
    }
    const Simplex face = tau.without(v);
    TwoSidedResult out;
    // facets meeting τ−v in two or more vertices get the same side from each of them
    for (const Simplex& f : K.facets()) {
        const Simplex meet = f.set_intersection(face);
        if (meet.empty()) continue;
        int side = 0;
        for (VertexId x : meet) {
            const int s = rep.at(x).side_of(f.without(x));
            if (side != 0 && s != side) {
                out.witness = "facet " + f.to_string() + " gets both sides";
                return out;
            }
            side = s;
        }
    }
    // colour the tetrahedra of lk(v) meeting τ−v and check the flips across triangles
    const auto lf = link_facets(Simplex{v}, K);
    std::map<Simplex, int> colour;
    for (const Simplex& t : lf) {
        const Simplex meet = t.set_intersection(face);
        if (meet.empty()) continue;
        const VertexId x = meet.front();
        colour[t] = rep.at(x).side_of(t.with(v).without(x));
    }
    std::unordered_map<Simplex, std::vector<Simplex>, SimplexHash> by_ridge;
    for (const auto& [t, c] : colour) {
        for (const Simplex& r : t.boundary()) {
            if (r.intersects(face)) by_ridge[r].push_back(t);
        }
    }
    for (const auto& [r, ts] : by_ridge) {
        if (ts.size() != 2) {
            out.witness = "triangle " + r.to_string() + " borders " + std::to_string(ts.size()) + " coloured tetrahedra";
            return out;
        }
        const bool flips = colour[ts[0]] != colour[ts[1]];
        if (flips != r.is_face_of(face)) {
            out.witness = "colours across " + r.to_string() + " are inconsistent";
            return out;
        }
    }
    std::map<VertexId, int> seen;
    for (const auto& [t, c] : colour) {
        for (VertexId w : t) {
            if (!tau.contains(w)) seen[w] |= (c > 0 ? 1 : 2);
        }
    }
    for (const auto& [w, mask] : seen) {
        if (mask == 3) ++out.subdivision_needed;
    }
    out.ok = true;
    return out;
}

std::string_view to_string(MissingFacetKind k) noexcept
{
    switch (k) {
    case MissingFacetKind::ConnectedSumSplit: return "connected-sum";
    case MissingFacetKind::VertexFoldAt: return "vertex-fold";
    case MissingFacetKind::EdgeFoldAt: return "edge-fold";
    case MissingFacetKind::HandleLike: return "handle";
    case MissingFacetKind::Unclassified: return "unclassified";
    }
    return "?";
}

MissingFacetClass classify_missing_facet(const Complex& K, const Simplex& tau)
{
    require_missing(K, tau);
    MissingFacetClass out;
    out.tau = tau;
    out.report = separation_report(K, tau);
    std::vector<VertexId> non_sep;
    for (const auto& s : out.report.per_vertex) {
        if (!s.separates) non_sep.push_back(s.x);
    }
    if (non_sep.empty()) {
        const auto n = dual_components(K.facets(), sorted_boundary(tau)).second;
        out.kind = n == 2 ? MissingFacetKind::ConnectedSumSplit : MissingFacetKind::HandleLike;
    } else if (non_sep.size() == 1) {
        out.kind = MissingFacetKind::VertexFoldAt;
        out.vertex = non_sep[0];
    } else if (non_sep.size() == 2) {
        const Simplex uv{non_sep[0], non_sep[1]};
        const Simplex rest = tau.set_difference(uv);
        auto lf = link_facets(uv, K);
        std::sort(lf.begin(), lf.end());
        const int n = dual_components(lf, sorted_boundary(rest)).second;
        if (n > 2) throw Error(Errc::MoreThanTwoComponents, "lk" + uv.to_string() + " along " + rest.to_string());
        out.kind = n == 1 ? MissingFacetKind::EdgeFoldAt : MissingFacetKind::HandleLike;
        out.edge = uv;
    }
    return out;
}

} // namespace psf
