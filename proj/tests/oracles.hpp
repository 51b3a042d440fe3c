#pragma once

// Independent brute-force oracles. Nothing here calls the library's face,
// link or invariant machinery; complexes are read only through facets().

#include "psf/complex.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Face = std::vector<std::uint32_t>;
using FaceSet = std::set<Face>;

inline std::vector<Face> facet_lists(const psf::Complex& K)
{
    std::vector<Face> out;
    for (const auto& f : K.facets()) out.emplace_back(f.begin(), f.end());
    return out;
}

/// Every face (including the empty one) by bitmask expansion of each facet.
inline FaceSet all_faces(const std::vector<Face>& facets)
{
    FaceSet out;
    out.insert(Face{});
    for (const Face& f : facets) {
        const std::size_t n = f.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Face g;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) g.push_back(f[i]);
            }
            out.insert(g);
        }
    }
    return out;
}

inline FaceSet all_faces(const psf::Complex& K) { return all_faces(facet_lists(K)); }

/// f_{-1}, f_0, ..., f_d.
inline std::vector<std::int64_t> f_vector(const psf::Complex& K)
{
    const FaceSet fs = all_faces(K);
    std::size_t top = 0;
    for (const Face& f : fs) top = std::max(top, f.size());
    std::vector<std::int64_t> f(top + 1, 0);
    for (const Face& g : fs) ++f[g.size()];
    return f;
}

inline std::int64_t choose(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    // Pascal's triangle, no multiplicative shortcut
    std::vector<std::vector<std::int64_t>> t(static_cast<std::size_t>(n) + 1);
    for (std::int64_t i = 0; i <= n; ++i) {
        t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (std::int64_t j = 1; j < i; ++j) {
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
        }
    }
    return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// g_i from the h-vector definition, computed from the oracle f-vector.
inline std::int64_t g_from_h(const psf::Complex& K, int i)
{
    const auto f = f_vector(K);
    const int d = static_cast<int>(f.size()) - 2;
    auto h = [&](int k) {
        std::int64_t s = 0;
        for (int j = 0; j <= k; ++j) {
            const std::int64_t term = choose(d + 1 - j, k - j) * f[static_cast<std::size_t>(j)];
            s += ((k - j) % 2 == 0) ? term : -term;
        }
        return s;
    };
    return h(i) - h(i - 1);
}

inline std::set<std::uint32_t> vertex_set(const psf::Complex& K)
{
    std::set<std::uint32_t> v;
    for (const auto& f : K.facets()) v.insert(f.begin(), f.end());
    return v;
}

/// Link as a sorted facet list, straight from the definition.
inline std::vector<Face> link_facets(const psf::Complex& K, const Face& sigma)
{
    std::vector<Face> out;
    for (const Face& f : facet_lists(K)) {
        if (!std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) continue;
        Face g;
        std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(g));
        out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Missing k-simplices by checking every (k+1)-subset of the vertex set.
inline std::vector<Face> missing(const psf::Complex& K, int k)
{
    const FaceSet fs = all_faces(K);
    const auto vs = vertex_set(K);
    const std::vector<std::uint32_t> v(vs.begin(), vs.end());
    std::vector<Face> out;
    const std::size_t size = static_cast<std::size_t>(k) + 1;
    std::vector<bool> pick(v.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(std::min(size, v.size())), true);
    if (size > v.size()) return out;
    do {
        Face s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (pick[i]) s.push_back(v[i]);
        }
        if (fs.count(s)) continue;
        bool boundary = true;
        for (std::size_t drop = 0; drop < s.size() && boundary; ++drop) {
            Face r = s;
            r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
            boundary = fs.count(r) > 0;
        }
        if (boundary) out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of connected components of the graph on facets joined when they share `shared` vertices.
inline int facet_components(const std::vector<Face>& facets, std::size_t shared)
{
    std::vector<int> comp(facets.size(), -1);
    int c = 0;
    for (std::size_t s = 0; s < facets.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            const std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < facets.size(); ++j) {
                if (comp[j] >= 0) continue;
                Face m;
                std::set_intersection(facets[i].begin(), facets[i].end(), facets[j].begin(), facets[j].end(),
                                      std::back_inserter(m));
                if (m.size() >= shared) {
                    comp[j] = c;
                    stack.push_back(j);
                }
            }
        }
        ++c;
    }
    return c;
}

} // namespace oracle

namespace oracle {

/// Rank over GF(2) of a dense 0/1 matrix, by plain row reduction.
inline std::int64_t rank_gf2(std::vector<std::vector<int>> m)
{
    std::int64_t rank = 0;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && m[i][c]) {
                for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
            }
        }
        ++r;
        ++rank;
    }
    return rank;
}

/// Reduced GF(2) Betti numbers from dense boundary matrices.
inline std::vector<std::int64_t> reduced_betti(const psf::Complex& K)
{
    const FaceSet fs = all_faces(K);
    std::map<std::size_t, std::vector<Face>> by_size;
    for (const Face& f : fs) by_size[f.size()].push_back(f);
    const std::size_t top = by_size.rbegin()->first;
    std::vector<std::int64_t> rank(top + 2, 0);
    for (std::size_t s = 1; s <= top; ++s) {
        const auto& rows = by_size[s - 1];
        const auto& cols = by_size[s];
        std::vector<std::vector<int>> m(rows.size(), std::vector<int>(cols.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            for (std::size_t drop = 0; drop < cols[j].size(); ++drop) {
                Face r = cols[j];
                r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
                const auto i = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), r) - rows.begin());
                m[i][j] = 1;
            }
        }
        rank[s] = rank_gf2(m);
    }
    std::vector<std::int64_t> betti;
    for (std::size_t s = 1; s <= top; ++s) {
        betti.push_back(static_cast<std::int64_t>(by_size[s].size()) - rank[s] - rank[s + 1]);
    }
    return betti;
}

} // namespace oracle
