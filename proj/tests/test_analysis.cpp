#include "fixtures.hpp"

#include "psf/analysis.hpp"
#include "psf/error.hpp"
#include "psf/verify.hpp"

#include <doctest.h>

using namespace psf;
using fixture::must;

namespace {

void check_partition(const Complex& K, const VertexSeparation& s)
{
    auto lf = link_facets(Simplex{s.x}, K);
    std::sort(lf.begin(), lf.end());
    std::vector<Simplex> all = s.plus;
    all.insert(all.end(), s.minus.begin(), s.minus.end());
    std::sort(all.begin(), all.end());
    CHECK(all == lf);
}

} // namespace

TEST_CASE("missing facet detection")
{
    const auto b = fixture::summed(boundary_simplex(5), boundary_simplex(5));
    CHECK(is_missing_facet(b.K, b.psi.source_facet));
    CHECK_FALSE(is_missing_facet(b.K, b.K.facets()[0]));
    CHECK_FALSE(is_missing_facet(boundary_simplex(5), Simplex{0, 1, 2, 3, 4, 5}));
    try {
        separates_link(boundary_simplex(5), 0, Simplex{0, 1, 2, 3, 4});
        FAIL("expected NotMissingFacet");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotMissingFacet);
    }
}

TEST_CASE("connected sums separate at every vertex")
{
    for (std::uint64_t s = 0; s < 8; ++s) {
        const Complex K1 = stacked_sphere(4, 1 + static_cast<int>(s % 3), s);
        const auto b = fixture::summed(K1, stacked_sphere(4, 2, s + 50), s);
        const Simplex& tau = b.psi.source_facet;
        const SeparationReport r = separation_report(b.K, tau);
        const VertexId cut = K1.max_vertex() + 1;
        for (const auto& vs : r.per_vertex) {
            CHECK(vs.separates);
            check_partition(b.K, vs);
            // one side holds only first-summand vertices, the other only second-summand ones
            for (const auto& side : {vs.plus, vs.minus}) {
                bool low = false, high = false;
                for (const Simplex& f : side) {
                    for (VertexId w : f) {
                        if (tau.contains(w)) continue;
                        (w < cut ? low : high) = true;
                    }
                }
                CHECK(low != high);
            }
        }
        CHECK(classify_missing_facet(b.K, tau).kind == MissingFacetKind::ConnectedSumSplit);
        for (VertexId v : tau) CHECK(two_sided(b.K, tau, v).ok);
    }
}

TEST_CASE("vertex folds fail to separate only at the fold vertex")
{
    for (std::uint64_t s = 0; s < 8; ++s) {
        const auto b = must(fixture::vertex_folded(s));
        const Simplex& tau = b.psi.source_facet;
        REQUIRE(is_missing_facet(b.K, tau));
        for (VertexId x : tau) {
            const VertexSeparation vs = separates_link(b.K, x, tau);
            CHECK(vs.separates == (x != 0));
            check_partition(b.K, vs);
        }
        const MissingFacetClass c = classify_missing_facet(b.K, tau);
        CHECK(c.kind == MissingFacetKind::VertexFoldAt);
        CHECK(c.vertex == 0);
        const TwoSidedResult t = two_sided(b.K, tau, 0);
        CHECK_MESSAGE(t.ok, t.witness);
        CHECK(t.subdivision_needed >= 0);
    }
}

TEST_CASE("edge folds fail to separate at both ends of the edge")
{
    for (std::uint64_t s = 0; s < 8; ++s) {
        const auto b = must(fixture::edge_folded(s));
        const Simplex& tau = b.psi.source_facet;
        REQUIRE(is_missing_facet(b.K, tau));
        for (VertexId x : tau) CHECK(separates_link(b.K, x, tau).separates == (x > 1));
        const MissingFacetClass c = classify_missing_facet(b.K, tau);
        CHECK(c.kind == MissingFacetKind::EdgeFoldAt);
        CHECK(c.edge == Simplex{0, 1});
        try {
            two_sided(b.K, tau, 0);
            FAIL("expected PreconditionUnmet");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::PreconditionUnmet);
        }
    }
}

TEST_CASE("handles separate everywhere but do not split")
{
    int seen = 0;
    for (std::uint64_t s = 0; s < 12 && seen < 4; ++s) {
        const auto b = fixture::handled(s);
        if (!b) continue;
        ++seen;
        const Simplex& tau = b->psi.source_facet;
        for (VertexId x : tau) CHECK(separates_link(b->K, x, tau).separates);
        CHECK(classify_missing_facet(b->K, tau).kind == MissingFacetKind::HandleLike);
    }
    CHECK(seen > 0);
}

TEST_CASE("dual-graph and face-poset separation agree")
{
    std::vector<fixture::Built> corpus;
    for (std::uint64_t s = 0; s < 5; ++s) {
        corpus.push_back(must(fixture::vertex_folded(s)));
        corpus.push_back(must(fixture::edge_folded(s)));
        corpus.push_back(fixture::summed(stacked_sphere(4, 3, s), boundary_simplex(5), s));
    }
    for (const auto& b : corpus) {
        for (const Simplex& tau : missing_simplices(b.K, 4)) {
            for (VertexId x : tau) {
                const int poset = separation_components_poset(b.K, x, tau);
                CHECK((poset == 1 || poset == 2));
                CHECK(separates_link(b.K, x, tau).components == poset);
            }
        }
    }
}

TEST_CASE("swapping the side convention swaps every side and nothing else")
{
    for (std::uint64_t s = 0; s < 5; ++s) {
        for (const auto& b : {must(fixture::vertex_folded(s)), must(fixture::edge_folded(s))}) {
            const Simplex& tau = b.psi.source_facet;
            const SeparationReport a = separation_report(b.K, tau);
            const SeparationReport f = separation_report(b.K, tau, std::nullopt, true);
            for (std::size_t i = 0; i < a.per_vertex.size(); ++i) {
                CHECK(a.per_vertex[i].separates == f.per_vertex[i].separates);
                if (!a.per_vertex[i].separates) continue;
                CHECK(a.per_vertex[i].plus == f.per_vertex[i].minus);
                CHECK(a.per_vertex[i].minus == f.per_vertex[i].plus);
            }
        }
    }
}

TEST_CASE("sides agree across vertices on shared facets")
{
    const auto b = must(fixture::vertex_folded(3));
    const Simplex& tau = b.psi.source_facet;
    const SeparationReport r = separation_report(b.K, tau, VertexId{0});
    const Simplex face = tau.without(0);
    for (const Simplex& f : b.K.facets()) {
        const Simplex meet = f.set_intersection(face);
        if (meet.size() < 2) continue;
        const int first = r.at(meet.front()).side_of(f.without(meet.front()));
        for (VertexId x : meet) CHECK(r.at(x).side_of(f.without(x)) == first);
    }
}
