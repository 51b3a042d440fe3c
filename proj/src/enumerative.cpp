#include "psf/enumerative.hpp"

#include "psf/error.hpp"

namespace psf {
namespace {

std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer addition");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer multiplication");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer subtraction");
    return r;
}

} // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // exact at every step: r * (n - k + i) is divisible by i
        r = mul(r, n - k + i) / i;
    }
    return r;
}

std::int64_t GVector::g(int i) const
{
    if (i < 1 || i > d + 1) throw Error(Errc::OutOfRange, "g index " + std::to_string(i));
    return sub(h[static_cast<std::size_t>(i)], h[static_cast<std::size_t>(i - 1)]);
}

FVector f_vector(const Complex& K)
{
    FVector f;
    for (int k = -1; k <= K.dimension(); ++k) {
        f.entries.push_back(static_cast<std::int64_t>(K.faces_of_dim(k).size()));
    }
    return f;
}

GVector h_vector(const Complex& K)
{
    const FVector f = f_vector(K);
    const int d = K.dimension();
    GVector out;
    out.d = d;
    for (int i = 0; i <= d + 1; ++i) {
        std::int64_t h = 0;
        for (int j = 0; j <= i; ++j) {
            std::int64_t term = mul(binomial(d + 1 - j, i - j), f[j - 1]);
            h = ((i - j) % 2 == 0) ? add(h, term) : sub(h, term);
        }
        out.h.push_back(h);
    }
    return out;
}

std::int64_t g1(const Complex& K)
{
    return sub(static_cast<std::int64_t>(K.num_vertices()), K.dimension() + 2);
}

std::int64_t g2_from(int d, std::int64_t f0, std::int64_t f1)
{
    return add(sub(f1, mul(d + 1, f0)), binomial(d + 2, 2));
}

std::int64_t g3_from(int d, std::int64_t f0, std::int64_t f1, std::int64_t f2)
{
    return sub(add(sub(f2, mul(d, f1)), mul(binomial(d + 1, 2), f0)), binomial(d + 2, 3));
}

std::int64_t g2(const Complex& K)
{
    const int d = K.dimension();
    if (d < 2) throw Error(Errc::DimensionTooSmall, "g2 needs dimension >= 2");
    return g2_from(d, static_cast<std::int64_t>(K.num_vertices()), static_cast<std::int64_t>(K.faces_of_dim(1).size()));
}

std::int64_t g3(const Complex& K)
{
    const int d = K.dimension();
    if (d < 3) throw Error(Errc::DimensionTooSmall, "g3 needs dimension >= 3");
    return g3_from(d, static_cast<std::int64_t>(K.num_vertices()), static_cast<std::int64_t>(K.faces_of_dim(1).size()),
                   static_cast<std::int64_t>(K.faces_of_dim(2).size()));
}

} // namespace psf
