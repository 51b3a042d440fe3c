#include "oracles.hpp"

#include "psf/constructors.hpp"
#include "psf/enumerative.hpp"
#include "psf/error.hpp"

#include <doctest.h>

using namespace psf;

namespace {

Errc code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::InvalidArgument;
}

std::pair<std::int64_t, std::int64_t> gdelta(const Complex& before, const Complex& after)
{
    return {oracle::g_from_h(after, 2) - oracle::g_from_h(before, 2), oracle::g_from_h(after, 3) - oracle::g_from_h(before, 3)};
}

} // namespace

TEST_CASE("boundary_simplex and cone")
{
    CHECK(boundary_simplex(5).num_facets() == 6);
    CHECK(boundary_simplex(2).num_facets() == 3);
    CHECK(code_of([] { boundary_simplex(0); }) == Errc::InvalidArgument);
    const Complex T = boundary_simplex(3);
    const Complex C = cone(4, T);
    CHECK(C == star(Simplex{4}, boundary_simplex(4)));
    CHECK(link(Simplex{4}, C) == T);
    CHECK(C.num_vertices() == T.num_vertices() + 1);
    CHECK(code_of([&] { cone(0, T); }) == Errc::VertexAlreadyPresent);
}

TEST_CASE("one-vertex suspension")
{
    // expanding the definition on simplex boundaries gives the next simplex boundary
    for (int d = 2; d <= 4; ++d) {
        const Complex S = boundary_simplex(d);
        for (VertexId v : S.vertices()) {
            const Complex Sigma = one_vertex_suspension(S, v);
            CHECK(Sigma == boundary_simplex(d + 1));
            CHECK(is_isomorphic(Sigma, boundary_simplex(d + 1)).has_value());
        }
    }
    const Complex M = stacked_sphere(3, 4, 7);
    const Complex Sigma = one_vertex_suspension(M, 2);
    const VertexId u = M.fresh_vertex();
    CHECK(link(Simplex{u}, Sigma) == M);
    CHECK(is_one_vertex_suspension(Sigma, u, 2));
    CHECK(code_of([&] { one_vertex_suspension(M, 99); }) == Errc::UnknownVertex);
}

TEST_CASE("connected sum")
{
    const Complex A = boundary_simplex(5);
    const Complex B = shift_labels(boundary_simplex(5), 10);
    const std::vector<VertexId> src{0, 1, 2, 3, 4};
    const std::vector<VertexId> dst{12, 10, 14, 11, 13};
    const Complex S = connected_sum(A, B, FoldingMap::from_sequences(src, dst, FoldKind::ConnectedSum));
    CHECK(S.num_vertices() == 7);
    CHECK(S.num_facets() == 10);
    CHECK(g2(S) == 0);
    CHECK(code_of([&] { connected_sum(A, boundary_simplex(4), FoldingMap::from_sequences(src, dst, FoldKind::ConnectedSum)); }) ==
          Errc::DimensionMismatch);
    CHECK(code_of([&] { connected_sum(A, A, FoldingMap::from_sequences(src, src, FoldKind::ConnectedSum)); }) ==
          Errc::VertexOverlap);
    const std::vector<VertexId> nf{10, 11, 12, 13, 99};
    CHECK(code_of([&] { connected_sum(A, B, FoldingMap::from_sequences(src, nf, FoldKind::ConnectedSum)); }) == Errc::NotAFacet);
}

TEST_CASE("handle admissibility and g-change")
{
    const Complex S = boundary_simplex(5);
    const std::vector<VertexId> a{0, 1, 2, 3, 4};
    const std::vector<VertexId> b{0, 5, 1, 2, 3};
    // the two facets share four vertices; a fixed-point-free map still fails
    const std::vector<VertexId> rot{2, 3, 4, 5, 1};
    CHECK_FALSE(check_handle_admissible(S, FoldingMap::from_sequences(a, rot, FoldKind::Handle)));
    CHECK(code_of([&] { handle_addition(S, FoldingMap::from_sequences(a, rot, FoldKind::Handle)); }) ==
          Errc::InadmissibleIdentification);
    CHECK(code_of([&] { check_handle_admissible(S, FoldingMap::from_sequences(a, b, FoldKind::Handle)); }) ==
          Errc::FacetsShareVertices);

    SplitMix64 rng(3);
    const Complex K = stacked_chain(4, 16);
    const auto psi = find_handle(K, rng);
    REQUIRE(psi.has_value());
    const Complex H = handle_addition(K, *psi);
    CHECK(gdelta(K, H) == std::pair<std::int64_t, std::int64_t>{15, -20});
    CHECK(g2(H) == 15);
    CHECK(g3(H) == -20);
}

TEST_CASE("vertex fold admissibility and g-change")
{
    const Complex S = boundary_simplex(5);
    const std::vector<VertexId> a{0, 1, 2, 3, 4};
    const std::vector<VertexId> b{0, 2, 3, 4, 5};
    CHECK(code_of([&] { check_vertex_fold_admissible(S, FoldingMap::from_sequences(a, b, FoldKind::VertexFold)); }) ==
          Errc::IntersectionNotSingleVertex);

    const Complex K = stacked_chain(4, 12, Simplex{0});
    SplitMix64 rng(1);
    const auto psi = find_vertex_fold(K, VertexId{0}, rng);
    REQUIRE(psi.has_value());
    CHECK(psi->fixed() == Simplex{0});
    const Complex F = vertex_fold(K, *psi);
    CHECK(gdelta(K, F) == std::pair<std::int64_t, std::int64_t>{10, -10});

    // an adjacent pair is never admissible
    const Simplex fa = K.facets()[K.facets_containing(VertexId{0})[0]];
    const Simplex fb = K.facets()[K.facets_containing(VertexId{0})[1]];
    if (fa.set_intersection(fb).size() == 1) {
        CHECK_FALSE(check_vertex_fold_admissible(K, FoldingMap::from_sequences(fa.vertices(), fb.vertices(), FoldKind::VertexFold)));
    }
}

TEST_CASE("edge fold admissibility and g-change")
{
    const Complex S = boundary_simplex(5);
    const std::vector<VertexId> a{0, 1, 2, 3, 4};
    const std::vector<VertexId> b{0, 1, 2, 3, 5};
    CHECK(code_of([&] { check_edge_fold_admissible(S, FoldingMap::from_sequences(a, b, FoldKind::EdgeFold)); }) ==
          Errc::IntersectionNotEdge);

    const Complex K = stacked_chain(4, 10, Simplex{0, 1});
    SplitMix64 rng(2);
    const auto psi = find_edge_fold(K, Simplex{0, 1}, rng);
    REQUIRE(psi.has_value());
    const Complex E = edge_fold(K, *psi);
    CHECK(gdelta(K, E) == std::pair<std::int64_t, std::int64_t>{6, -4});
    CHECK(code_of([&] {
              FoldingMap bad = *psi;
              bad.target_facet = bad.source_facet;
              edge_fold(K, bad);
          }) == Errc::IntersectionNotEdge);
}

TEST_CASE("facet subdivision")
{
    const Complex S = boundary_simplex(5);
    const Complex T = facet_subdivision(S, S.facets()[2]);
    CHECK(T.num_vertices() == 7);
    CHECK(g2(T) == 0);
    CHECK(g3(T) == 0);
    CHECK(link(Simplex{6}, T) == boundary_of(S.facets()[2]));
    CHECK(code_of([&] { facet_subdivision(S, Simplex{0, 1, 2, 3, 9}); }) == Errc::NotAFacet);
}

TEST_CASE("stacked spheres are reproducible")
{
    CHECK(stacked_sphere(4, 1, 17) == boundary_simplex(5));
    for (std::uint64_t s = 0; s < 10; ++s) {
        CHECK(stacked_sphere(4, 9, s) == stacked_sphere(4, 9, s));
        CHECK(stacked_sphere(4, 9, s).num_vertices() == 14);
    }
    CHECK(stacked_chain(4, 9).num_vertices() == 14);
    CHECK(g2(stacked_chain(4, 9, Simplex{0})) == 0);
}

TEST_CASE("g-vector laws over random operation sequences")
{
    int counts[4] = {0, 0, 0, 0};
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        SplitMix64 rng(seed);
        Complex K = seed % 2 ? stacked_chain(4, 17, {}, seed) : stacked_chain(4, 14, Simplex{0}, seed);
        for (int step = 0; step < 4; ++step) {
            const int op = static_cast<int>(rng.below(4));
            Complex next;
            std::pair<std::int64_t, std::int64_t> expect;
            if (op == 0) {
                const Complex L = shift_labels(stacked_sphere(4, 1 + static_cast<int>(rng.below(4)), rng.next()), K.fresh_vertex());
                const Simplex& f = K.facets()[rng.below(K.num_facets())];
                const Simplex& g = L.facets()[rng.below(L.num_facets())];
                next = connected_sum(K, L, FoldingMap::from_sequences(f.vertices(), g.vertices(), FoldKind::ConnectedSum));
                const std::int64_t g2s = oracle::g_from_h(K, 2) + oracle::g_from_h(L, 2);
                const std::int64_t g3s = oracle::g_from_h(K, 3) + oracle::g_from_h(L, 3);
                CHECK(oracle::g_from_h(next, 2) == g2s);
                CHECK(oracle::g_from_h(next, 3) == g3s);
                ++counts[0];
                K = next;
                continue;
            }
            std::optional<FoldingMap> psi;
            if (op == 1) {
                psi = find_vertex_fold(K, std::nullopt, rng);
                expect = {10, -10};
            } else if (op == 2) {
                psi = find_edge_fold(K, std::nullopt, rng);
                expect = {6, -4};
            } else {
                psi = find_handle(K, rng);
                expect = {15, -20};
            }
            if (!psi) continue;
            next = op == 1 ? vertex_fold(K, *psi) : op == 2 ? edge_fold(K, *psi) : handle_addition(K, *psi);
            CHECK(gdelta(K, next) == expect);
            ++counts[op];
            K = next;
        }
    }
    CHECK(counts[0] > 0);
    CHECK(counts[1] > 0);
    CHECK(counts[2] > 0);
    CHECK(counts[3] > 0);
}
