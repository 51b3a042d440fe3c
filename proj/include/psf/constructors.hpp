#pragma once

#include "psf/complex.hpp"
#include "psf/rng.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace psf {

enum class FoldKind { VertexFold, EdgeFold, Handle, ConnectedSum };

std::string_view to_string(FoldKind kind) noexcept;

/**
 * A bijection between the vertices of a source facet and a target facet.
 *
 * Quotients by a folding map rename every target vertex to its source
 * partner, so source labels survive the operation.
 */
struct FoldingMap
{
    Simplex source_facet;
    Simplex target_facet;
    std::vector<std::pair<VertexId, VertexId>> pairs; // (source, target), sorted by source
    FoldKind flavor = FoldKind::VertexFold;

    /// Pairs source[i] with target[i]; throws InvalidArgument unless that is a bijection of two simplices.
    static FoldingMap from_sequences(std::span<const VertexId> source, std::span<const VertexId> target, FoldKind flavor);

    VertexId image(VertexId source_vertex) const;
    /// target -> source renaming used by the quotient.
    std::map<VertexId, VertexId> inverse() const;
    /// Vertices fixed by the map.
    Simplex fixed() const;
};

struct Admissibility
{
    bool ok = false;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

Complex boundary_simplex(int n);
/// The boundary complex of the given simplex.
Complex boundary_of(const Simplex& sigma);
Complex cone(VertexId v, const Complex& K);

/// (v * {faces avoiding v}) ∪ (u * K) with u = `apex` or a fresh label.
Complex one_vertex_suspension(const Complex& K, VertexId v, std::optional<VertexId> apex = std::nullopt);
/// True if K equals one_vertex_suspension(lk(apex, K), v, apex) exactly.
bool is_one_vertex_suspension(const Complex& K, VertexId apex, VertexId v);

Complex connected_sum(const Complex& K1, const Complex& K2, const FoldingMap& psi);

Admissibility check_handle_admissible(const Complex& K, const FoldingMap& psi);
Complex handle_addition(const Complex& K, const FoldingMap& psi);

Admissibility check_vertex_fold_admissible(const Complex& K, const FoldingMap& psi);
Complex vertex_fold(const Complex& K, const FoldingMap& psi);

Admissibility check_edge_fold_admissible(const Complex& K, const FoldingMap& psi);
Complex edge_fold(const Complex& K, const FoldingMap& psi);

Complex facet_subdivision(const Complex& K, const Simplex& facet, std::optional<VertexId> fresh = std::nullopt);

/// k-fold connected sum of boundaries of (d+1)-simplices; facet choices drawn from `seed`.
Complex stacked_sphere(int d, int k, std::uint64_t seed);

/// Stacked sphere grown as a path: every step subdivides a facet through the newest
/// vertex and `focus`, preferring facets far from the oldest vertices. `seed` breaks ties.
Complex stacked_chain(int d, int k, const Simplex& focus = {}, std::uint64_t seed = 0);

/// Identify the two facets of `psi` inside K and drop the merged facet (no admissibility check).
Complex identify_facets(const Complex& K, const FoldingMap& psi);

/// Relabel every vertex of K into [first, first + f0) preserving order.
Complex shift_labels(const Complex& K, VertexId first);

// Randomised searches for admissible maps; they return nothing if no admissible choice exists.
std::optional<FoldingMap> find_vertex_fold(const Complex& K, std::optional<VertexId> at, SplitMix64& rng);
std::optional<FoldingMap> find_edge_fold(const Complex& K, std::optional<Simplex> along, SplitMix64& rng);
std::optional<FoldingMap> find_handle(const Complex& K, SplitMix64& rng);

} // namespace psf
