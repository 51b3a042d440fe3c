#include "psf/verify.hpp"

#include "psf/constructors.hpp"
#include "psf/enumerative.hpp"
#include "psf/error.hpp"

#include <boost/dynamic_bitset.hpp>
#include <boost/pending/disjoint_sets.hpp>

#include <unordered_map>

namespace psf {

std::pair<std::vector<int>, int> dual_components(const std::vector<Simplex>& facets, const std::vector<Simplex>& barrier)
{
    boost::disjoint_sets_with_storage<> ds(facets.size());
    std::unordered_map<Simplex, std::size_t, SimplexHash> first;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (const Simplex& r : facets[i].boundary()) {
            if (std::binary_search(barrier.begin(), barrier.end(), r)) continue;
            auto [it, inserted] = first.emplace(r, i);
            if (!inserted) ds.union_set(it->second, i);
        }
    }
    std::vector<int> comp(facets.size(), -1);
    std::unordered_map<std::size_t, int> ids;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        auto [it, inserted] = ids.emplace(ds.find_set(i), static_cast<int>(ids.size()));
        comp[i] = it->second;
    }
    return {comp, static_cast<int>(ids.size())};
}

bool is_pure(const Complex& K) { return K.is_pure(); }

namespace {

std::unordered_map<Simplex, int, SimplexHash> ridge_degrees(const Complex& K)
{
    std::unordered_map<Simplex, int, SimplexHash> deg;
    for (const Simplex& f : K.facets()) {
        for (const Simplex& r : f.boundary()) ++deg[r];
    }
    return deg;
}

bool connected_facets(const std::vector<Simplex>& facets)
{
    // connectivity of a complex through shared vertices
    if (facets.empty()) return false;
    std::unordered_map<VertexId, std::size_t> owner;
    boost::disjoint_sets_with_storage<> ds(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        for (VertexId v : facets[i]) {
            auto [it, inserted] = owner.emplace(v, i);
            if (!inserted) ds.union_set(it->second, i);
        }
    }
    const std::size_t root = ds.find_set(0);
    for (std::size_t i = 1; i < facets.size(); ++i) {
        if (ds.find_set(i) != root) return false;
    }
    return true;
}

} // namespace

bool is_pseudomanifold(const Complex& K)
{
    if (!K.is_pure() || K.num_facets() == 0 || K.dimension() < 1) return false;
    for (const auto& [r, n] : ridge_degrees(K)) {
        if (n != 2) return false;
    }
    return true;
}

bool is_strongly_connected(const Complex& K)
{
    if (K.num_facets() == 0) return false;
    if (!K.is_pure()) return false;
    return dual_components(K.facets()).second == 1;
}

NormalityReport is_normal_pseudomanifold(const Complex& K)
{
    NormalityReport r;
    r.pure = K.is_pure() && K.num_facets() > 0;
    if (!r.pure) return r;
    r.ridge_degrees_ok = true;
    if (K.dimension() >= 1) {
        std::vector<Simplex> bad;
        for (const auto& [ridge, n] : ridge_degrees(K)) {
            if (n != 2) bad.push_back(ridge);
        }
        std::sort(bad.begin(), bad.end());
        r.ridge_degrees_ok = bad.empty();
        r.witnesses.insert(r.witnesses.end(), bad.begin(), bad.end());
    } else {
        r.ridge_degrees_ok = false;
    }
    r.strongly_connected = is_strongly_connected(K);
    r.links_connected = true;
    const int d = K.dimension();
    // the empty face's link is K itself, covered by strong connectivity
    for (int k = 0; k <= d - 2; ++k) {
        for (const Simplex& s : K.faces_of_dim(k)) {
            if (!connected_facets(link_facets(s, K))) {
                r.links_connected = false;
                r.witnesses.push_back(s);
            }
        }
    }
    return r;
}

HomologyProfile homology_gf2(const Complex& K)
{
    const int d = K.dimension();
    HomologyProfile out;
    if (d < 0) return out;
    // rank of the boundary map C_k -> C_{k-1}, with C_{-1} spanned by the empty face
    std::vector<std::int64_t> rank(static_cast<std::size_t>(d) + 2, 0);
    for (int k = 0; k <= d; ++k) {
        const auto& rows = K.faces_of_dim(k - 1);
        const auto& cols = K.faces_of_dim(k);
        std::unordered_map<Simplex, std::size_t, SimplexHash> index;
        for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], i);
        std::vector<boost::dynamic_bitset<>> pivots(rows.size());
        std::vector<bool> has_pivot(rows.size(), false);
        std::int64_t r = 0;
        for (const Simplex& c : cols) {
            boost::dynamic_bitset<> col(rows.size());
            if (k == 0) {
                col.set(0);
            } else {
                for (const Simplex& b : c.boundary()) col.set(index.at(b));
            }
            for (auto p = col.find_first(); p != boost::dynamic_bitset<>::npos; p = col.find_first()) {
                if (!has_pivot[p]) {
                    pivots[p] = std::move(col);
                    has_pivot[p] = true;
                    ++r;
                    break;
                }
                col ^= pivots[p];
            }
        }
        rank[static_cast<std::size_t>(k)] = r;
    }
    for (int k = 0; k <= d; ++k) {
        const auto fk = static_cast<std::int64_t>(K.faces_of_dim(k).size());
        out.betti.push_back(fk - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k) + 1]);
    }
    return out;
}

std::int64_t euler_characteristic(const Complex& K)
{
    std::int64_t chi = 0;
    for (int k = 0; k <= K.dimension(); ++k) {
        const auto n = static_cast<std::int64_t>(K.faces_of_dim(k).size());
        chi += (k % 2 == 0) ? n : -n;
    }
    return chi;
}

bool is_stacked_sphere(const Complex& K)
{
    if (K.dimension() < 3) throw Error(Errc::DimensionTooSmall, "stacked-sphere test needs dimension >= 3");
    return g2(K) == 0 && is_normal_pseudomanifold(K).normal();
}

bool is_2_sphere(const Complex& L)
{
    return L.dimension() == 2 && is_pseudomanifold(L) && connected_facets(L.facets()) && euler_characteristic(L) == 2;
}

namespace {

bool is_simplex_boundary(const Complex& L)
{
    return L.is_pure() && L.num_vertices() == static_cast<std::size_t>(L.dimension() + 2) &&
           L.num_facets() == L.num_vertices();
}

/// Split along a missing facet whose boundary separates the dual graph.
std::optional<std::pair<Complex, Complex>> separating_split(const Complex& L)
{
    for (const Simplex& tau : missing_simplices(L, L.dimension())) {
        auto barrier = tau.boundary();
        std::sort(barrier.begin(), barrier.end());
        auto [comp, n] = dual_components(L.facets(), barrier);
        if (n != 2) continue;
        std::vector<Simplex> a{tau};
        std::vector<Simplex> b{tau};
        for (std::size_t i = 0; i < comp.size(); ++i) (comp[i] == 0 ? a : b).push_back(L.facets()[i]);
        return std::pair{Complex::from_simplices(std::move(a)), Complex::from_simplices(std::move(b))};
    }
    return std::nullopt;
}

std::optional<std::string> certificate_3(const Complex& L, int depth)
{
    if (depth > 64 || L.dimension() != 3 || !L.is_pure()) return std::nullopt;
    if (is_simplex_boundary(L)) return "boundary";
    const NormalityReport nr = is_normal_pseudomanifold(L);
    if (!nr.normal()) return std::nullopt;
    if (g2(L) == 0) return "stacked";
    // inverse facet subdivision
    if (L.num_vertices() >= 6) {
        for (VertexId u : L.vertices()) {
            if (L.neighbors(u).size() != 4) continue;
            if (L.facets_containing(u).size() != 4) continue;
            const auto nb = L.neighbors(u);
            const Simplex sigma = Simplex::from_sorted(nb);
            if (L.has_facet(sigma)) continue;
            std::vector<Simplex> fs;
            for (const Simplex& f : L.facets()) {
                if (!f.contains(u)) fs.push_back(f);
            }
            fs.push_back(sigma);
            if (auto c = certificate_3(Complex::from_simplices(std::move(fs)), depth + 1)) {
                return "unsubdivide(" + std::to_string(u) + ")>" + *c;
            }
            break;
        }
    }
    if (auto parts = separating_split(L)) {
        auto a = certificate_3(parts->first, depth + 1);
        if (!a) return std::nullopt;
        auto b = certificate_3(parts->second, depth + 1);
        if (!b) return std::nullopt;
        return "split(" + *a + "," + *b + ")";
    }
    for (VertexId a : L.vertices()) {
        const Complex M = link(Simplex{a}, L);
        if (!is_2_sphere(M)) continue;
        // suspension with two non-adjacent apexes
        if (M.num_vertices() + 2 == L.num_vertices()) {
            for (VertexId b : L.vertices()) {
                if (b == a || M.has_vertex(b)) continue;
                if (2 * M.num_facets() == L.num_facets() && link(Simplex{b}, L) == M) {
                    return "suspension(" + std::to_string(a) + "," + std::to_string(b) + ")";
                }
            }
        }
        for (VertexId v : L.neighbors(a)) {
            if (is_one_vertex_suspension(L, a, v)) {
                return "one_vertex_suspension(" + std::to_string(v) + "," + std::to_string(a) + ")";
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::string> sphere_certificate(const Complex& L) { return certificate_3(L, 0); }

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::NonSingular: return "non-singular";
    case Verdict::Singular: return "singular";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

SingularityVerdict classify_vertex(const Complex& K, VertexId v)
{
    if (!K.has_vertex(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
    const Complex L = link(Simplex{v}, K);
    SingularityVerdict out{v, Verdict::Unknown, {}};
    const int d = L.dimension();
    if (d <= 1) {
        // points and circles: recognised by counting
        const bool sphere = d == 0 ? L.num_facets() == 2
                                   : is_pseudomanifold(L) && connected_facets(L.facets()) &&
                                         L.num_facets() == L.num_vertices();
        out.verdict = sphere ? Verdict::NonSingular : Verdict::Singular;
        out.certificate = sphere ? "circle" : "not a circle";
        return out;
    }
    if (d == 2) {
        const std::int64_t chi = euler_characteristic(L);
        const bool sphere = is_2_sphere(L);
        out.verdict = sphere ? Verdict::NonSingular : Verdict::Singular;
        out.certificate = "chi=" + std::to_string(chi);
        return out;
    }
    if (d != 3) return out;
    for (VertexId w : L.vertices()) {
        const Complex M = link(Simplex{w}, L);
        if (!is_2_sphere(M)) {
            out.verdict = Verdict::Singular;
            out.certificate = "link of " + std::to_string(w) + " has chi=" + std::to_string(euler_characteristic(M));
            return out;
        }
    }
    const HomologyProfile h = homology_gf2(L);
    if (h.betti != std::vector<std::int64_t>{0, 0, 0, 1}) {
        out.verdict = Verdict::Singular;
        out.certificate = "betti=";
        for (std::size_t i = 0; i < h.betti.size(); ++i) {
            out.certificate += (i ? "," : "") + std::to_string(h.betti[i]);
        }
        return out;
    }
    if (auto c = sphere_certificate(L)) {
        out.verdict = Verdict::NonSingular;
        out.certificate = *c;
    }
    return out;
}

std::vector<SingularityVerdict> classify_vertices(const Complex& K)
{
    std::vector<SingularityVerdict> out;
    out.reserve(K.num_vertices());
    for (VertexId v : K.vertices()) out.push_back(classify_vertex(K, v));
    return out;
}

Optimality optimality_check(const Complex& K, VertexId t)
{
    if (!K.has_vertex(t)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(t));
    if (K.dimension() != 4) throw Error(Errc::DimensionMismatch, "optimality is defined for 4-dimensional complexes");
    const Complex L = link(Simplex{t}, K);
    return {g2(K) == g2(L), g3(K) == g3(L)};
}

} // namespace psf
