#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace psf {

using VertexId = std::uint32_t;

/**
 * A simplex stored as its strictly increasing vertex list. The default
 * constructed simplex is the empty face (dimension -1).
 */
class Simplex
{
public:
    using storage_type = boost::container::small_vector<VertexId, 6>;
    using const_iterator = storage_type::const_iterator;

    Simplex() = default;
    Simplex(std::initializer_list<VertexId> vertices);
    explicit Simplex(std::span<const VertexId> vertices);

    /// Caller guarantees `sorted` is strictly increasing.
    static Simplex from_sorted(std::span<const VertexId> sorted);

    int dimension() const noexcept { return static_cast<int>(v_.size()) - 1; }
    std::size_t size() const noexcept { return v_.size(); }
    bool empty() const noexcept { return v_.empty(); }

    VertexId operator[](std::size_t i) const noexcept { return v_[i]; }
    VertexId front() const noexcept { return v_.front(); }
    VertexId back() const noexcept { return v_.back(); }
    const_iterator begin() const noexcept { return v_.begin(); }
    const_iterator end() const noexcept { return v_.end(); }
    std::span<const VertexId> vertices() const noexcept { return {v_.data(), v_.size()}; }

    bool contains(VertexId v) const noexcept { return std::binary_search(v_.begin(), v_.end(), v); }
    /// True if every vertex of this simplex is a vertex of `other`.
    bool is_face_of(const Simplex& other) const noexcept
    {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }
    bool intersects(const Simplex& other) const noexcept;

    Simplex without(VertexId v) const;
    Simplex with(VertexId v) const;
    Simplex set_union(const Simplex& other) const;
    Simplex set_intersection(const Simplex& other) const;
    Simplex set_difference(const Simplex& other) const;

    /// All faces with exactly `k` vertices, in lexicographic order.
    std::vector<Simplex> subsets(std::size_t k) const;
    /// The codimension-one faces.
    std::vector<Simplex> boundary() const { return v_.empty() ? std::vector<Simplex>{} : subsets(v_.size() - 1); }

    std::string to_string() const;

    friend bool operator==(const Simplex& a, const Simplex& b) noexcept { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) noexcept
    {
        return std::lexicographical_compare_three_way(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end());
    }

private:
    storage_type v_;
};

struct SimplexHash
{
    std::size_t operator()(const Simplex& s) const noexcept
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.size();
        for (VertexId v : s) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace psf
