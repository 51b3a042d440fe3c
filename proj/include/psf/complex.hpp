#pragma once

#include "psf/simplex.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace psf {

/**
 * A finite simplicial complex stored by its maximal faces.
 *
 * Complexes built through `from_facets` are pure; `induced` and a few internal
 * routines may produce non-pure complexes, which carry their explicit list of
 * maximal faces. The complex {∅} (dimension -1) is the identity for `join`.
 *
 * Instances are immutable. Face lists, vertex incidences and the 1-skeleton
 * adjacency are computed on first use and shared between copies.
 */
class Complex
{
public:
    /// The complex {∅}.
    Complex();

    /// Validating constructor: all facets non-empty, equal size, no repeats.
    static Complex from_facets(const std::vector<std::vector<VertexId>>& facets);
    /// Equal-dimension simplices; sorted and deduplicated. Throws MixedDimension.
    static Complex from_simplices(std::vector<Simplex> facets);
    /// Arbitrary simplices; non-maximal ones are dropped. May be non-pure.
    static Complex from_maximal_faces(std::vector<Simplex> faces);

    int dimension() const noexcept { return dim_; }
    bool is_pure() const noexcept { return pure_; }
    const std::vector<Simplex>& facets() const noexcept { return facets_; }
    std::size_t num_facets() const noexcept { return facets_.size(); }
    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    std::size_t num_vertices() const noexcept { return vertices_.size(); }
    bool has_vertex(VertexId v) const noexcept;
    VertexId max_vertex() const;
    /// Smallest label strictly larger than every vertex (0 for {∅}).
    VertexId fresh_vertex() const { return vertices_.empty() ? 0 : max_vertex() + 1; }

    bool has_facet(const Simplex& s) const noexcept;
    /// Face membership (closed downward).
    bool contains(const Simplex& s) const;

    /// Sorted list of the k-dimensional faces, -1 <= k <= dim.
    const std::vector<Simplex>& faces_of_dim(int k) const;
    /// Indices into facets() of the facets containing v (empty if v is absent).
    std::span<const std::size_t> facets_containing(VertexId v) const;
    /// Indices of facets containing every vertex of s.
    std::vector<std::size_t> facets_containing(const Simplex& s) const;
    /// Sorted neighbours of v in the 1-skeleton.
    std::span<const VertexId> neighbors(VertexId v) const;
    bool adjacent(VertexId a, VertexId b) const;

    friend bool operator==(const Complex& a, const Complex& b) noexcept { return a.facets_ == b.facets_; }

private:
    struct Cache;

    Complex(std::vector<Simplex> sorted_facets, bool pure);
    const Cache& cache() const;

    std::vector<Simplex> facets_;
    std::vector<VertexId> vertices_;
    int dim_ = -1;
    bool pure_ = true;
    std::shared_ptr<Cache> cache_;
};

/// Bijection between the vertex sets of two isomorphic complexes.
struct IsomorphismMap
{
    std::map<VertexId, VertexId> pairs;

    VertexId operator()(VertexId v) const { return pairs.at(v); }
};

Complex from_facets(const std::vector<std::vector<VertexId>>& facets);

std::vector<Simplex> faces(const Complex& K, int k);
Complex link(const Simplex& sigma, const Complex& K);
Complex star(const Simplex& sigma, const Complex& K);
Complex induced(const Complex& K, std::span<const VertexId> vertices);
Complex skeleton(const Complex& K, int k);
Complex join(const Complex& K1, const Complex& K2);
/// k-simplices on V(K) whose boundary lies in K but which are not faces of K.
std::vector<Simplex> missing_simplices(const Complex& K, int k);
std::optional<IsomorphismMap> is_isomorphic(const Complex& K1, const Complex& K2);

/// Rename vertices; labels absent from `map` are kept.
Complex relabel(const Complex& K, const std::map<VertexId, VertexId>& map);
/// The facets of K that contain `sigma`, with `sigma` removed (the link as a facet list).
std::vector<Simplex> link_facets(const Simplex& sigma, const Complex& K);

} // namespace psf
