#pragma once

#include "psf/complex.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace psf {

bool is_pure(const Complex& K);
/// Pure and every ridge lies in exactly two facets.
bool is_pseudomanifold(const Complex& K);
/// The facet-ridge dual graph is connected.
bool is_strongly_connected(const Complex& K);

struct NormalityReport
{
    bool pure = false;
    bool ridge_degrees_ok = false;
    bool strongly_connected = false;
    bool links_connected = false;
    /// Ridges of bad degree, then faces with disconnected links.
    std::vector<Simplex> witnesses;

    bool normal() const noexcept { return pure && ridge_degrees_ok && strongly_connected && links_connected; }
};

NormalityReport is_normal_pseudomanifold(const Complex& K);

/// Reduced Betti numbers over GF(2), indexed 0..dim.
struct HomologyProfile
{
    std::vector<std::int64_t> betti;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile homology_gf2(const Complex& K);
/// Euler characteristic sum (-1)^i f_i over i >= 0.
std::int64_t euler_characteristic(const Complex& K);

/// Normal and g2 = 0; throws DimensionTooSmall below dimension 3.
bool is_stacked_sphere(const Complex& K);

/// Connected closed surface check via χ = 2.
bool is_2_sphere(const Complex& L);

/**
 * A constructive proof that a 3-dimensional complex is a sphere, or nothing.
 *
 * The certificate is a readable chain of reductions: simplex boundary,
 * stacked (normal with g2 = 0), inverse facet subdivision, split along a
 * separating missing tetrahedron, suspension, or one-vertex suspension over
 * a 2-sphere.
 */
std::optional<std::string> sphere_certificate(const Complex& L);

enum class Verdict { NonSingular, Singular, Unknown };

std::string_view to_string(Verdict v) noexcept;

struct SingularityVerdict
{
    VertexId vertex = 0;
    Verdict verdict = Verdict::Unknown;
    std::string certificate;
};

SingularityVerdict classify_vertex(const Complex& K, VertexId v);
std::vector<SingularityVerdict> classify_vertices(const Complex& K);

struct Optimality
{
    bool g2_optimal = false;
    bool g3_optimal = false;

    bool both() const noexcept { return g2_optimal && g3_optimal; }
};

/// g2 and g3 of K compared with those of lk(t, K); requires dimension 4.
Optimality optimality_check(const Complex& K, VertexId t);

/// Facets grouped into components of the dual graph once adjacencies across `barrier` ridges are cut.
/// Returns a component id per facet and the component count.
std::pair<std::vector<int>, int> dual_components(const std::vector<Simplex>& facets,
                                                 const std::vector<Simplex>& barrier = {});

} // namespace psf
