#pragma once

#include "psf/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace psf {

/// How ∂(τ−x) cuts lk(x) for one vertex x of a missing facet τ.
struct VertexSeparation
{
    VertexId x = 0;
    bool separates = false;
    int components = 0;
    /// Facets of lk(x) on each side; `minus` is empty when nothing separates.
    std::vector<Simplex> plus;
    std::vector<Simplex> minus;

    /// +1 or -1 for a facet of lk(x); 0 if it lies on neither recorded side.
    int side_of(const Simplex& link_facet) const;
};

struct SeparationReport
{
    Simplex missing_facet;
    std::vector<VertexSeparation> per_vertex;

    const VertexSeparation& at(VertexId x) const;
};

/// True if `tau` is absent from K while its whole boundary is present.
bool is_missing_facet(const Complex& K, const Simplex& tau);

/**
 * Cut the dual graph of lk(x) along the ridges of ∂(τ−x).
 *
 * Sides are named through an anchor vertex w of τ other than x: the ridge
 * τ−w has link {p, n} with p < n, and the side holding (τ−w−x)∪p is `plus`.
 * With `flip` the names are exchanged. Throws NotMissingFacet and
 * MoreThanTwoComponents.
 */
VertexSeparation separates_link(const Complex& K, VertexId x, const Simplex& tau,
                                std::optional<VertexId> anchor = std::nullopt, bool flip = false);

/// Component count of lk(x) minus ∂(τ−x), by search over the face poset rather than the dual graph.
int separation_components_poset(const Complex& K, VertexId x, const Simplex& tau);

SeparationReport separation_report(const Complex& K, const Simplex& tau, std::optional<VertexId> anchor = std::nullopt,
                                   bool flip = false);

struct TwoSidedResult
{
    bool ok = false;
    std::string witness;
    /// Vertices outside τ met by link tetrahedra of both colours.
    int subdivision_needed = 0;

    explicit operator bool() const noexcept { return ok; }
};

/// Side-colouring check that ∂(τ−v) is two-sided in lk(v). Throws PreconditionUnmet
/// unless every other vertex of τ separates.
TwoSidedResult two_sided(const Complex& K, const Simplex& tau, VertexId v);

enum class MissingFacetKind { ConnectedSumSplit, VertexFoldAt, EdgeFoldAt, HandleLike, Unclassified };

std::string_view to_string(MissingFacetKind k) noexcept;

struct MissingFacetClass
{
    MissingFacetKind kind = MissingFacetKind::Unclassified;
    Simplex tau;
    VertexId vertex = 0; // VertexFoldAt
    Simplex edge;        // EdgeFoldAt
    SeparationReport report;
};

MissingFacetClass classify_missing_facet(const Complex& K, const Simplex& tau);

} // namespace psf
