#pragma once

#include "psf/analysis.hpp"
#include "psf/constructors.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace psf {

/// Hands out vertex labels never used before in one decomposition run.
class LabelPool
{
public:
    explicit LabelPool(VertexId first) : next_(first) {}
    VertexId take() noexcept { return next_++; }
    VertexId peek() const noexcept { return next_; }

private:
    VertexId next_;
};

/// Remove a vertex whose link is ∂σ and put σ back. Throws LinkNotSimplexBoundary,
/// SimplexAlreadyPresent, MinimalComplex.
Complex inverse_facet_subdivision(const Complex& K, VertexId u);

/// `first` keeps the labels of τ; `second` gets fresh copies. connected_sum(first, second, psi) == K.
struct SplitResult
{
    Complex first;
    Complex second;
    FoldingMap psi;
};

SplitResult split_connected_sum(const Complex& K, const Simplex& tau, LabelPool& pool);
SplitResult split_connected_sum(const Complex& K, const Simplex& tau);

/// The unfolded complex and the map that folds it back onto K exactly.
struct UnfoldResult
{
    Complex complex;
    FoldingMap psi;
};

UnfoldResult vertex_unfold(const Complex& K, const Simplex& tau, VertexId v, LabelPool& pool);
UnfoldResult vertex_unfold(const Complex& K, const Simplex& tau, VertexId v);
UnfoldResult edge_unfold(const Complex& K, const Simplex& tau, const Simplex& uv, LabelPool& pool);
UnfoldResult edge_unfold(const Complex& K, const Simplex& tau, const Simplex& uv);

struct SuspensionMatch
{
    Complex base; // lk(apex, K)
    VertexId apex = 0;
    VertexId vertex = 0;
};

/// Tries both t and t1 as the apex.
std::optional<SuspensionMatch> recognize_one_vertex_suspension(const Complex& K, VertexId t, VertexId t1);

enum class Mode { OneSingularity, TwoSingularitySuspension, TwoSingularityEdgeFold };
enum class StepKind { SplitConnectedSum, VertexUnfold, EdgeUnfold, InverseFacetSubdivision, SuspensionBase, Leaf };
enum class LeafKind { BoundarySimplex, StackedSphere, IrreducibleBase };

std::string_view to_string(Mode m) noexcept;
std::string_view to_string(StepKind k) noexcept;
std::string_view to_string(LeafKind k) noexcept;
std::optional<Mode> parse_mode(std::string_view s) noexcept;

struct DecompositionStep
{
    StepKind kind = StepKind::Leaf;
    /// Missing facet for splits and unfolds, restored facet for inverse subdivisions.
    Simplex tau;
    /// Fold vertex, removed vertex, or the suspension's existing apex.
    VertexId vertex = 0;
    Simplex edge;
    /// Forward identification for splits and unfolds.
    FoldingMap psi;
    /// Suspension apex; base complex for suspensions; the complex itself for leaves.
    VertexId apex = 0;
    LeafKind leaf = LeafKind::IrreducibleBase;
    Complex complex;
    /// (g2, f0) of the complex this node stands for.
    std::int64_t g2 = 0;
    std::size_t f0 = 0;
    std::vector<int> children;
};

struct Provenance
{
    int m = 0; // edge folds
    int n = 0; // vertex folds
    int s = 0; // connected sums
    int subdivisions = 0;
    int handles = 0;
    int irreducible = 0;
    std::int64_t leaf_g2 = 0; // sum of g2 over leaves and suspensions
    int two_sided_subdivisions = 0; // from two_sided()
};

struct DecompositionTree
{
    std::vector<DecompositionStep> steps;
    int root = 0;
    Mode mode = Mode::TwoSingularityEdgeFold;
    VertexId t = 0;
    Provenance counters;
    /// Class of every missing facet acted on, in order.
    std::vector<MissingFacetKind> classes;
};

struct DecomposeOptions
{
    Mode mode = Mode::TwoSingularityEdgeFold;
    /// Re-verify normality and the replay of every step; also switched on by PSF_DEBUG_VERIFY=1.
    bool verify = false;
};

/// Throws NotOptimal, UnknownSingularity, ModeMismatch, NoMissingFacetFound.
DecompositionTree decompose(const Complex& K, VertexId t, const DecomposeOptions& opts = {});

/// Forward replay of a tree; throws MalformedTree.
Complex rebuild(const DecompositionTree& tree);

} // namespace psf
