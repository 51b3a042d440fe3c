#include "psf/constructors.hpp"

#include "psf/error.hpp"

#include <algorithm>
#include <numeric>

namespace psf {

std::string_view to_string(FoldKind kind) noexcept
{
    switch (kind) {
    case FoldKind::VertexFold: return "vertex_fold";
    case FoldKind::EdgeFold: return "edge_fold";
    case FoldKind::Handle: return "handle";
    case FoldKind::ConnectedSum: return "connected_sum";
    }
    return "?";
}

FoldingMap FoldingMap::from_sequences(std::span<const VertexId> source, std::span<const VertexId> target, FoldKind flavor)
{
    if (source.size() != target.size() || source.empty()) {
        throw Error(Errc::InvalidArgument, "folding map needs two equal-length non-empty vertex lists");
    }
    FoldingMap m;
    m.source_facet = Simplex(source);
    m.target_facet = Simplex(target);
    m.flavor = flavor;
    for (std::size_t i = 0; i < source.size(); ++i) m.pairs.emplace_back(source[i], target[i]);
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

VertexId FoldingMap::image(VertexId s) const
{
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair<VertexId, VertexId>{s, 0});
    if (it == pairs.end() || it->first != s) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(s) + " not in source facet");
    return it->second;
}

std::map<VertexId, VertexId> FoldingMap::inverse() const
{
    std::map<VertexId, VertexId> inv;
    for (auto [s, t] : pairs) inv.emplace(t, s);
    return inv;
}

Simplex FoldingMap::fixed() const
{
    std::vector<VertexId> f;
    for (auto [s, t] : pairs) {
        if (s == t) f.push_back(s);
    }
    return Simplex::from_sorted(f);
}

Complex boundary_simplex(int n)
{
    if (n < 1) throw Error(Errc::InvalidArgument, "boundary_simplex needs n >= 1");
    std::vector<VertexId> all(static_cast<std::size_t>(n) + 1);
    std::iota(all.begin(), all.end(), 0u);
    return boundary_of(Simplex::from_sorted(all));
}

Complex boundary_of(const Simplex& sigma)
{
    if (sigma.size() < 2) throw Error(Errc::InvalidArgument, "boundary of a simplex with fewer than two vertices");
    return Complex::from_simplices(sigma.boundary());
}

Complex cone(VertexId v, const Complex& K)
{
    if (K.has_vertex(v)) throw Error(Errc::VertexAlreadyPresent, "cone apex " + std::to_string(v));
    std::vector<Simplex> fs;
    fs.reserve(K.num_facets());
    for (const Simplex& f : K.facets()) fs.push_back(f.with(v));
    if (fs.empty()) fs.push_back(Simplex{v});
    return K.is_pure() ? Complex::from_simplices(std::move(fs)) : Complex::from_maximal_faces(std::move(fs));
}

Complex one_vertex_suspension(const Complex& K, VertexId v, std::optional<VertexId> apex)
{
    if (!K.has_vertex(v)) throw Error(Errc::UnknownVertex, "suspension vertex " + std::to_string(v));
    const VertexId u = apex.value_or(K.fresh_vertex());
    if (K.has_vertex(u)) throw Error(Errc::VertexAlreadyPresent, "suspension apex " + std::to_string(u));
    std::vector<Simplex> fs;
    fs.reserve(2 * K.num_facets());
    for (const Simplex& f : K.facets()) {
        fs.push_back(f.with(u));
        if (!f.contains(v)) fs.push_back(f.with(v));
    }
    return Complex::from_simplices(std::move(fs));
}

bool is_one_vertex_suspension(const Complex& K, VertexId apex, VertexId v)
{
    if (!K.has_vertex(apex) || !K.adjacent(apex, v)) return false;
    const Complex M = link(Simplex{apex}, K);
    if (!M.has_vertex(v)) return false;
    return one_vertex_suspension(M, v, apex) == K;
}

Complex identify_facets(const Complex& K, const FoldingMap& psi)
{
    if (!K.has_facet(psi.source_facet)) throw Error(Errc::NotAFacet, psi.source_facet.to_string());
    if (!K.has_facet(psi.target_facet)) throw Error(Errc::NotAFacet, psi.target_facet.to_string());
    const auto rename = psi.inverse();
    std::vector<Simplex> out;
    out.reserve(K.num_facets());
    std::vector<VertexId> buf;
    for (const Simplex& f : K.facets()) {
        buf.clear();
        for (VertexId w : f) {
            auto it = rename.find(w);
            buf.push_back(it == rename.end() ? w : it->second);
        }
        std::sort(buf.begin(), buf.end());
        if (std::adjacent_find(buf.begin(), buf.end()) != buf.end()) {
            throw Error(Errc::InadmissibleIdentification, "facet " + f.to_string() + " collapses under the identification");
        }
        out.push_back(Simplex::from_sorted(buf));
    }
    std::sort(out.begin(), out.end());
    // the two identified facets coincide and are removed; any other coincidence is a doubled facet
    auto [lo, hi] = std::equal_range(out.begin(), out.end(), psi.source_facet);
    if (hi - lo != 2) throw Error(Errc::InadmissibleIdentification, "identified facets do not merge");
    out.erase(lo, hi);
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw Error(Errc::InadmissibleIdentification, "identification doubles a facet");
    }
    Complex Q = Complex::from_simplices(std::move(out));
    if (Q.num_facets() + 2 != K.num_facets()) throw Error(Errc::InadmissibleIdentification, "facet count mismatch");
    return Q;
}

Complex connected_sum(const Complex& K1, const Complex& K2, const FoldingMap& psi)
{
    if (K1.dimension() != K2.dimension()) throw Error(Errc::DimensionMismatch, "connected sum of different dimensions");
    for (VertexId v : K1.vertices()) {
        if (K2.has_vertex(v)) throw Error(Errc::VertexOverlap, "vertex " + std::to_string(v) + " in both summands");
    }
    if (!K1.has_facet(psi.source_facet)) throw Error(Errc::NotAFacet, psi.source_facet.to_string() + " in first summand");
    if (!K2.has_facet(psi.target_facet)) throw Error(Errc::NotAFacet, psi.target_facet.to_string() + " in second summand");
    std::vector<Simplex> both = K1.facets();
    both.insert(both.end(), K2.facets().begin(), K2.facets().end());
    return identify_facets(Complex::from_simplices(std::move(both)), psi);
}

namespace {

void require_facets(const Complex& K, const FoldingMap& psi)
{
    if (!K.has_facet(psi.source_facet)) throw Error(Errc::NotAFacet, psi.source_facet.to_string());
    if (!K.has_facet(psi.target_facet)) throw Error(Errc::NotAFacet, psi.target_facet.to_string());
}

std::vector<VertexId> common_neighbors(const Complex& K, VertexId a, VertexId b)
{
    auto na = K.neighbors(a);
    auto nb = K.neighbors(b);
    std::vector<VertexId> out;
    std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
    return out;
}

/// y·ψ(y) absent and every common neighbour of y, ψ(y) inside `allowed`, for each moved y.
Admissibility check_moved_pairs(const Complex& K, const FoldingMap& psi, const Simplex& allowed, bool exact)
{
    for (auto [y, z] : psi.pairs) {
        if (y == z) continue;
        if (K.adjacent(y, z)) {
            return {false, "edge " + Simplex{y, z}.to_string() + " is present"};
        }
        const auto common = common_neighbors(K, y, z);
        const Simplex cs = Simplex::from_sorted(common);
        if (!cs.is_face_of(allowed) || (exact && cs != allowed)) {
            return {false, "vertices " + std::to_string(y) + " and " + std::to_string(z) + " have common neighbours " +
                               cs.to_string()};
        }
    }
    return {true, {}};
}

} // namespace

Admissibility check_handle_admissible(const Complex& K, const FoldingMap& psi)
{
    require_facets(K, psi);
    if (!psi.fixed().empty()) throw Error(Errc::FacetsShareVertices, "handle map fixes " + psi.fixed().to_string());
    if (psi.source_facet.intersects(psi.target_facet)) return {false, "facets share vertices"};
    return check_moved_pairs(K, psi, Simplex{}, false);
}

Complex handle_addition(const Complex& K, const FoldingMap& psi)
{
    const Admissibility a = check_handle_admissible(K, psi);
    if (!a) throw Error(Errc::InadmissibleIdentification, a.reason);
    return identify_facets(K, psi);
}

Admissibility check_vertex_fold_admissible(const Complex& K, const FoldingMap& psi)
{
    require_facets(K, psi);
    const Simplex meet = psi.source_facet.set_intersection(psi.target_facet);
    if (meet.size() != 1) throw Error(Errc::IntersectionNotSingleVertex, "facets meet in " + meet.to_string());
    if (psi.fixed() != meet) throw Error(Errc::InvalidArgument, "vertex fold must fix exactly the shared vertex");
    return check_moved_pairs(K, psi, meet, true);
}

Complex vertex_fold(const Complex& K, const FoldingMap& psi)
{
    const Admissibility a = check_vertex_fold_admissible(K, psi);
    if (!a) throw Error(Errc::Inadmissible, a.reason);
    return identify_facets(K, psi);
}

Admissibility check_edge_fold_admissible(const Complex& K, const FoldingMap& psi)
{
    require_facets(K, psi);
    const Simplex meet = psi.source_facet.set_intersection(psi.target_facet);
    if (meet.size() != 2) throw Error(Errc::IntersectionNotEdge, "facets meet in " + meet.to_string());
    if (psi.fixed() != meet) throw Error(Errc::InvalidArgument, "edge fold must fix exactly the shared edge");
    return check_moved_pairs(K, psi, meet, false);
}

Complex edge_fold(const Complex& K, const FoldingMap& psi)
{
    const Admissibility a = check_edge_fold_admissible(K, psi);
    if (!a) throw Error(Errc::Inadmissible, a.reason);
    return identify_facets(K, psi);
}

Complex facet_subdivision(const Complex& K, const Simplex& facet, std::optional<VertexId> fresh)
{
    if (!K.has_facet(facet)) throw Error(Errc::NotAFacet, facet.to_string());
    const VertexId u = fresh.value_or(K.fresh_vertex());
    if (K.has_vertex(u)) throw Error(Errc::VertexAlreadyPresent, "subdivision vertex " + std::to_string(u));
    std::vector<Simplex> fs;
    fs.reserve(K.num_facets() + facet.size());
    for (const Simplex& f : K.facets()) {
        if (f != facet) fs.push_back(f);
    }
    for (const Simplex& r : facet.boundary()) fs.push_back(r.with(u));
    return Complex::from_simplices(std::move(fs));
}

Complex stacked_sphere(int d, int k, std::uint64_t seed)
{
    if (d < 1 || k < 1) throw Error(Errc::InvalidArgument, "stacked_sphere needs d >= 1 and k >= 1");
    SplitMix64 rng(seed);
    Complex K = boundary_simplex(d + 1);
    for (int i = 1; i < k; ++i) {
        // subdividing a facet is the connected sum with one more simplex boundary
        const auto& fs = K.facets();
        K = facet_subdivision(K, fs[static_cast<std::size_t>(rng.below(fs.size()))]);
    }
    return K;
}

Complex stacked_chain(int d, int k, const Simplex& focus, std::uint64_t seed)
{
    if (d < 1 || k < 1) throw Error(Errc::InvalidArgument, "stacked_chain needs d >= 1 and k >= 1");
    if (!focus.empty() && (focus.back() > static_cast<VertexId>(d + 1) || focus.size() > static_cast<std::size_t>(d))) {
        throw Error(Errc::InvalidArgument, "focus " + focus.to_string() + " must be a proper face of the first simplex");
    }
    SplitMix64 rng(seed);
    Complex K = boundary_simplex(d + 1);
    for (int i = 1; i < k; ++i) {
        const VertexId newest = K.max_vertex();
        // score = smallest non-focus label; larger means further along the path
        VertexId best = 0;
        std::vector<std::size_t> ties;
        for (std::size_t j : K.facets_containing(newest)) {
            const Simplex& f = K.facets()[j];
            if (!focus.is_face_of(f)) continue;
            const Simplex rest = f.set_difference(focus);
            const VertexId score = rest.front();
            if (ties.empty() || score > best) {
                best = score;
                ties.assign(1, j);
            } else if (score == best) {
                ties.push_back(j);
            }
        }
        K = facet_subdivision(K, K.facets()[ties[static_cast<std::size_t>(rng.below(ties.size()))]]);
    }
    return K;
}

Complex shift_labels(const Complex& K, VertexId first)
{
    std::map<VertexId, VertexId> m;
    VertexId next = first;
    for (VertexId v : K.vertices()) m.emplace(v, next++);
    return relabel(K, m);
}

namespace {

bool no_edges_between(const Complex& K, const Simplex& a, const Simplex& b)
{
    for (VertexId x : a) {
        for (VertexId y : b) {
            if (x != y && !b.contains(x) && !a.contains(y) && K.adjacent(x, y)) return false;
        }
    }
    return true;
}

/// Try the bijections between the moved parts of two facets in a random order.
std::optional<FoldingMap> try_bijections(const Complex& K, const Simplex& s1, const Simplex& s2, FoldKind kind,
                                         SplitMix64& rng)
{
    const Simplex meet = s1.set_intersection(s2);
    const Simplex a = s1.set_difference(meet);
    const Simplex rest = s2.set_difference(meet);
    std::vector<VertexId> b(rest.begin(), rest.end());
    std::vector<std::vector<VertexId>> perms;
    do {
        perms.push_back(b);
    } while (std::next_permutation(b.begin(), b.end()));
    rng.shuffle(perms);
    for (const auto& p : perms) {
        std::vector<VertexId> src(meet.begin(), meet.end());
        std::vector<VertexId> dst = src;
        src.insert(src.end(), a.begin(), a.end());
        dst.insert(dst.end(), p.begin(), p.end());
        FoldingMap psi = FoldingMap::from_sequences(src, dst, kind);
        Admissibility ok;
        switch (kind) {
        case FoldKind::VertexFold: ok = check_vertex_fold_admissible(K, psi); break;
        case FoldKind::EdgeFold: ok = check_edge_fold_admissible(K, psi); break;
        default: ok = check_handle_admissible(K, psi); break;
        }
        if (ok) return psi;
    }
    return std::nullopt;
}

std::optional<FoldingMap> search_pairs(const Complex& K, const std::vector<std::size_t>& candidates, std::size_t meet_size,
                                       FoldKind kind, SplitMix64& rng)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            const Simplex& s1 = K.facets()[candidates[i]];
            const Simplex& s2 = K.facets()[candidates[j]];
            if (s1.set_intersection(s2).size() != meet_size) continue;
            if (!no_edges_between(K, s1, s2)) continue;
            pairs.emplace_back(candidates[i], candidates[j]);
        }
    }
    rng.shuffle(pairs);
    for (auto [i, j] : pairs) {
        auto psi = try_bijections(K, K.facets()[i], K.facets()[j], kind, rng);
        if (psi) return psi;
    }
    return std::nullopt;
}

} // namespace

std::optional<FoldingMap> find_vertex_fold(const Complex& K, std::optional<VertexId> at, SplitMix64& rng)
{
    std::vector<VertexId> xs = at ? std::vector<VertexId>{*at} : K.vertices();
    rng.shuffle(xs);
    for (VertexId x : xs) {
        auto fc = K.facets_containing(x);
        std::vector<std::size_t> cand(fc.begin(), fc.end());
        if (auto psi = search_pairs(K, cand, 1, FoldKind::VertexFold, rng)) return psi;
    }
    return std::nullopt;
}

std::optional<FoldingMap> find_edge_fold(const Complex& K, std::optional<Simplex> along, SplitMix64& rng)
{
    std::vector<Simplex> edges = along ? std::vector<Simplex>{*along} : K.faces_of_dim(1);
    rng.shuffle(edges);
    for (const Simplex& e : edges) {
        if (auto psi = search_pairs(K, K.facets_containing(e), 2, FoldKind::EdgeFold, rng)) return psi;
    }
    return std::nullopt;
}

std::optional<FoldingMap> find_handle(const Complex& K, SplitMix64& rng)
{
    std::vector<std::size_t> all(K.num_facets());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return search_pairs(K, all, 0, FoldKind::Handle, rng);
}

} // namespace psf
