#include "psf/simplex.hpp"

#include "psf/error.hpp"

#include <iterator>

namespace psf {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::MixedDimension: return "MixedDimension";
    case Errc::DuplicateVertexInFacet: return "DuplicateVertexInFacet";
    case Errc::EmptyFacet: return "EmptyFacet";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::FaceNotPresent: return "FaceNotPresent";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::VertexOverlap: return "VertexOverlap";
    case Errc::VertexAlreadyPresent: return "VertexAlreadyPresent";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotAFacet: return "NotAFacet";
    case Errc::FacetsShareVertices: return "FacetsShareVertices";
    case Errc::InadmissibleIdentification: return "InadmissibleIdentification";
    case Errc::IntersectionNotSingleVertex: return "IntersectionNotSingleVertex";
    case Errc::IntersectionNotEdge: return "IntersectionNotEdge";
    case Errc::Inadmissible: return "Inadmissible";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Overflow: return "Overflow";
    case Errc::NotMissingFacet: return "NotMissingFacet";
    case Errc::MoreThanTwoComponents: return "MoreThanTwoComponents";
    case Errc::PreconditionUnmet: return "PreconditionUnmet";
    case Errc::LinkNotSimplexBoundary: return "LinkNotSimplexBoundary";
    case Errc::SimplexAlreadyPresent: return "SimplexAlreadyPresent";
    case Errc::MinimalComplex: return "MinimalComplex";
    case Errc::NotSplit: return "NotSplit";
    case Errc::SideAssignmentInconsistent: return "SideAssignmentInconsistent";
    case Errc::CaseFallthrough: return "CaseFallthrough";
    case Errc::NotOptimal: return "NotOptimal";
    case Errc::UnknownSingularity: return "UnknownSingularity";
    case Errc::NoMissingFacetFound: return "NoMissingFacetFound";
    case Errc::ModeMismatch: return "ModeMismatch";
    case Errc::MalformedTree: return "MalformedTree";
    case Errc::ParseError: return "ParseError";
    case Errc::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::span<const VertexId>(vertices.begin(), vertices.size()))
{}

Simplex::Simplex(std::span<const VertexId> vertices)
    : v_(vertices.begin(), vertices.end())
{
    std::sort(v_.begin(), v_.end());
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end()) {
        throw Error(Errc::DuplicateVertexInFacet, "repeated vertex in simplex");
    }
}

Simplex Simplex::from_sorted(std::span<const VertexId> sorted)
{
    Simplex s;
    s.v_.assign(sorted.begin(), sorted.end());
    return s;
}

bool Simplex::intersects(const Simplex& other) const noexcept
{
    auto a = v_.begin();
    auto b = other.v_.begin();
    while (a != v_.end() && b != other.v_.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
    }
    return false;
}

Simplex Simplex::without(VertexId v) const
{
    Simplex s;
    for (VertexId w : v_) {
        if (w != v) s.v_.push_back(w);
    }
    return s;
}

Simplex Simplex::with(VertexId v) const
{
    Simplex s = *this;
    auto it = std::lower_bound(s.v_.begin(), s.v_.end(), v);
    if (it == s.v_.end() || *it != v) s.v_.insert(it, v);
    return s;
}

Simplex Simplex::set_union(const Simplex& other) const
{
    Simplex s;
    std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(s.v_));
    return s;
}

Simplex Simplex::set_intersection(const Simplex& other) const
{
    Simplex s;
    std::set_intersection(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(s.v_));
    return s;
}

Simplex Simplex::set_difference(const Simplex& other) const
{
    Simplex s;
    std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(s.v_));
    return s;
}

std::vector<Simplex> Simplex::subsets(std::size_t k) const
{
    std::vector<Simplex> out;
    const std::size_t n = v_.size();
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Simplex s;
        for (std::size_t i : idx) s.v_.push_back(v_[i]);
        out.push_back(std::move(s));
        // advance to the next k-combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::string Simplex::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v_[i]);
    }
    s += ']';
    return s;
}

} // namespace psf
