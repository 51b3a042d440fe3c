#include "oracles.hpp"

#include "psf/constructors.hpp"
#include "psf/enumerative.hpp"
#include "psf/error.hpp"
#include "psf/verify.hpp"

#include <doctest.h>

using namespace psf;

namespace {

Complex rp2()
{
    return from_facets({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                        {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});
}

Complex pinched()
{
    std::vector<Simplex> fs = boundary_simplex(5).facets();
    const Complex other = boundary_of({0, 6, 7, 8, 9, 10});
    fs.insert(fs.end(), other.facets().begin(), other.facets().end());
    return Complex::from_simplices(fs);
}

Complex vertex_folded(std::uint64_t seed, FoldingMap* map = nullptr)
{
    const Complex K = stacked_chain(4, 12, Simplex{0}, seed);
    SplitMix64 rng(seed);
    const auto psi = find_vertex_fold(K, VertexId{0}, rng);
    REQUIRE(psi.has_value());
    if (map) *map = *psi;
    return vertex_fold(K, *psi);
}

Complex edge_folded(std::uint64_t seed)
{
    const Complex K = stacked_chain(4, 10, Simplex{0, 1}, seed);
    SplitMix64 rng(seed);
    const auto psi = find_edge_fold(K, Simplex{0, 1}, rng);
    REQUIRE(psi.has_value());
    return edge_fold(K, *psi);
}

} // namespace

TEST_CASE("purity, ridges and strong connectivity")
{
    const Complex S = boundary_simplex(5);
    CHECK(is_pure(S));
    CHECK(is_pseudomanifold(S));
    CHECK(is_strongly_connected(S));

    const Complex two = Complex::from_simplices([] {
        std::vector<Simplex> fs = boundary_simplex(3).facets();
        const Complex other = boundary_of({10, 11, 12, 13});
        fs.insert(fs.end(), other.facets().begin(), other.facets().end());
        return fs;
    }());
    CHECK_FALSE(is_strongly_connected(two));
    CHECK(is_pseudomanifold(two));

    const Complex solid = from_facets({{0, 1, 2, 3, 4}});
    CHECK_FALSE(is_pseudomanifold(solid));
    const NormalityReport r = is_normal_pseudomanifold(solid);
    CHECK_FALSE(r.ridge_degrees_ok);
    CHECK(r.witnesses.size() == 5);
}

TEST_CASE("normality reports")
{
    CHECK(is_normal_pseudomanifold(boundary_simplex(5)).normal());
    CHECK(is_normal_pseudomanifold(join(boundary_of({0, 1, 2}), boundary_of({3, 4, 5}))).normal());
    for (std::uint64_t s = 0; s < 5; ++s) {
        CHECK(is_normal_pseudomanifold(stacked_sphere(4, 6, s)).normal());
        CHECK(is_normal_pseudomanifold(vertex_folded(s)).normal());
        CHECK(is_normal_pseudomanifold(edge_folded(s)).normal());
    }
    const NormalityReport p = is_normal_pseudomanifold(pinched());
    CHECK(p.ridge_degrees_ok);
    CHECK_FALSE(p.links_connected);
    CHECK_FALSE(p.normal());
    CHECK(std::find(p.witnesses.begin(), p.witnesses.end(), Simplex{0}) != p.witnesses.end());
}

TEST_CASE("GF(2) homology")
{
    CHECK(homology_gf2(boundary_simplex(5)).betti == std::vector<std::int64_t>{0, 0, 0, 0, 1});
    CHECK(homology_gf2(rp2()).betti == oracle::reduced_betti(rp2()));
    CHECK(homology_gf2(rp2()).betti == std::vector<std::int64_t>{0, 1, 1});
    CHECK(homology_gf2(cone(99, rp2())).betti == std::vector<std::int64_t>{0, 0, 0, 0});
    CHECK(homology_gf2(cone(99, boundary_simplex(4))).betti == std::vector<std::int64_t>{0, 0, 0, 0, 0});
    for (std::uint64_t s = 0; s < 4; ++s) {
        const Complex F = vertex_folded(s);
        const Complex L = link(Simplex{0}, F);
        CHECK(homology_gf2(L).betti == oracle::reduced_betti(L));
        CHECK(homology_gf2(L).betti[1] == 1);
    }
}

TEST_CASE("stacked sphere recognition")
{
    for (std::uint64_t s = 0; s < 5; ++s) CHECK(is_stacked_sphere(stacked_sphere(4, 2 + static_cast<int>(s), s)));
    CHECK_FALSE(is_stacked_sphere(vertex_folded(1)));
    CHECK(g2(vertex_folded(1)) == 10);
    CHECK_FALSE(is_stacked_sphere(join(boundary_of({0, 1, 2}), boundary_of({3, 4, 5}))));
    CHECK_THROWS_AS(is_stacked_sphere(boundary_simplex(3)), Error);
}

TEST_CASE("vertex verdicts")
{
    for (const auto& sv : classify_vertices(boundary_simplex(5))) CHECK(sv.verdict == Verdict::NonSingular);
    for (std::uint64_t s = 0; s < 5; ++s) {
        const Complex F = vertex_folded(s);
        for (const auto& sv : classify_vertices(F)) {
            CHECK(sv.verdict == (sv.vertex == 0 ? Verdict::Singular : Verdict::NonSingular));
        }
        const Complex E = edge_folded(s);
        for (const auto& sv : classify_vertices(E)) {
            CHECK(sv.verdict == (sv.vertex <= 1 ? Verdict::Singular : Verdict::NonSingular));
        }
    }
    // 3-dimensional complexes: links are surfaces, χ decides
    const Complex T = cone(99, rp2());
    CHECK(classify_vertex(T, 99).verdict == Verdict::Singular);
    CHECK(classify_vertex(boundary_simplex(4), 2).verdict == Verdict::NonSingular);
}

TEST_CASE("no sphere verdict with nonzero middle homology")
{
    for (std::uint64_t s = 0; s < 6; ++s) {
        for (const Complex& K : {vertex_folded(s), edge_folded(s)}) {
            for (const auto& sv : classify_vertices(K)) {
                const auto b = homology_gf2(link(Simplex{sv.vertex}, K)).betti;
                if (b[1] != 0 || b[2] != 0) CHECK(sv.verdict != Verdict::NonSingular);
            }
        }
    }
}

TEST_CASE("sphere certificates")
{
    CHECK(sphere_certificate(boundary_simplex(4)) == std::optional<std::string>("boundary"));
    CHECK(sphere_certificate(stacked_sphere(3, 5, 2)) == std::optional<std::string>("stacked"));
    const Complex J = join(boundary_of({0, 1, 2}), boundary_of({3, 4, 5}));
    CHECK(sphere_certificate(J).has_value());
    const Complex M = join(boundary_of({6, 7}), J);
    CHECK_FALSE(sphere_certificate(M).has_value()); // dimension 4 is out of reach
    // a suspension of a 2-sphere that is not stacked
    const Complex oct = join(join(boundary_of({0, 1}), boundary_of({2, 3})), boundary_of({4, 5}));
    const Complex susp = join(boundary_of({6, 7}), oct);
    CHECK(g2(susp) > 0);
    CHECK(sphere_certificate(susp).has_value());
}

TEST_CASE("optimality")
{
    const Complex S = boundary_simplex(5);
    for (VertexId v : S.vertices()) CHECK(optimality_check(S, v).both());
    CHECK_THROWS_AS(optimality_check(S, 42), Error);
    for (std::uint64_t s = 0; s < 5; ++s) {
        CHECK(optimality_check(vertex_folded(s), 0).both());
        CHECK(optimality_check(edge_folded(s), 0).both());
        CHECK(optimality_check(edge_folded(s), 1).both());
    }
}

TEST_CASE("vertex links never exceed the complex in g2")
{
    for (std::uint64_t s = 0; s < 6; ++s) {
        for (const Complex& K : {vertex_folded(s), edge_folded(s), stacked_sphere(4, 7, s)}) {
            const std::int64_t g = g2(K);
            for (VertexId v : K.vertices()) CHECK(g2(link(Simplex{v}, K)) <= g);
        }
    }
}
