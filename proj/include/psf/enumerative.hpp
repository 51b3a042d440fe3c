#pragma once

#include "psf/complex.hpp"

#include <cstdint>
#include <vector>

namespace psf {

/// Face numbers f_{-1}, f_0, ..., f_d. `entries[0]` is f_{-1} = 1.
struct FVector
{
    std::vector<std::int64_t> entries;

    int dimension() const noexcept { return static_cast<int>(entries.size()) - 2; }
    /// f_i for -1 <= i <= d (0 outside that range).
    std::int64_t operator[](int i) const noexcept
    {
        const int k = i + 1;
        return (k < 0 || k >= static_cast<int>(entries.size())) ? 0 : entries[static_cast<std::size_t>(k)];
    }

    friend bool operator==(const FVector&, const FVector&) = default;
};

/// h-vector h_0..h_{d+1} of a d-dimensional complex; g_i = h_i - h_{i-1}.
struct GVector
{
    int d = -1;
    std::vector<std::int64_t> h;

    std::int64_t g(int i) const;
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

FVector f_vector(const Complex& K);
GVector h_vector(const Complex& K);

/// g_1 = f_0 - (d + 2).
std::int64_t g1(const Complex& K);
/// Closed form f_1 - (d+1) f_0 + C(d+2, 2); requires d >= 2.
std::int64_t g2(const Complex& K);
/// Closed form f_2 - d f_1 + C(d+1, 2) f_0 - C(d+2, 3); requires d >= 3.
std::int64_t g3(const Complex& K);

/// The same closed forms evaluated on a given face-number prefix at dimension d.
std::int64_t g2_from(int d, std::int64_t f0, std::int64_t f1);
std::int64_t g3_from(int d, std::int64_t f0, std::int64_t f1, std::int64_t f2);

} // namespace psf
