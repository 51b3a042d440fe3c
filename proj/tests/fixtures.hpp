#pragma once

// Seeded instance builders shared by the analysis, decompose and acceptance tests.

#include "psf/constructors.hpp"

#include <optional>
#include <stdexcept>

namespace fixture {

using namespace psf;

struct Built
{
    Complex K;
    FoldingMap psi; // the last identification; psi.source_facet is the missing facet left behind
};

inline std::optional<Built> vertex_folded(std::uint64_t seed, int k = 12)
{
    const Complex S = stacked_chain(4, k, Simplex{0}, seed);
    SplitMix64 rng(seed);
    const auto psi = find_vertex_fold(S, VertexId{0}, rng);
    if (!psi) return std::nullopt;
    return Built{vertex_fold(S, *psi), *psi};
}

inline std::optional<Built> edge_folded(std::uint64_t seed, int k = 10)
{
    const Complex S = stacked_chain(4, k, Simplex{0, 1}, seed);
    SplitMix64 rng(seed);
    const auto psi = find_edge_fold(S, Simplex{0, 1}, rng);
    if (!psi) return std::nullopt;
    return Built{edge_fold(S, *psi), *psi};
}

inline std::optional<Built> handled(std::uint64_t seed, int k = 14)
{
    const Complex S = stacked_chain(4, k, {}, seed);
    SplitMix64 rng(seed);
    const auto psi = find_handle(S, rng);
    if (!psi) return std::nullopt;
    return Built{handle_addition(S, *psi), *psi};
}

/// K1 # K2 along the first facets, with K2 relabelled past K1.
inline Built summed(const Complex& K1, const Complex& K2, std::uint64_t seed = 0)
{
    const Complex B = shift_labels(K2, K1.max_vertex() + 1);
    SplitMix64 rng(seed);
    const Simplex& a = K1.facets()[rng.below(K1.num_facets())];
    const Simplex& b = B.facets()[rng.below(B.num_facets())];
    std::vector<VertexId> dst(b.begin(), b.end());
    rng.shuffle(dst);
    const FoldingMap psi = FoldingMap::from_sequences(std::vector<VertexId>(a.begin(), a.end()), dst, FoldKind::ConnectedSum);
    return Built{connected_sum(K1, B, psi), psi};
}

template <class T> T must(std::optional<T> v)
{
    if (!v) throw std::runtime_error("fixture produced no instance");
    return std::move(*v);
}

} // namespace fixture
