#include "psf/complex.hpp"

#include <map>
#include <numeric>

namespace psf {
namespace {

struct Indexed
{
    std::vector<VertexId> labels;
    std::vector<std::vector<int>> facets;         // vertex indices
    std::vector<std::vector<int>> vertex_facets;  // facet indices
    std::vector<int> degree;                      // 1-skeleton degree
};

Indexed index_complex(const Complex& K)
{
    Indexed ix;
    ix.labels = K.vertices();
    auto pos = [&](VertexId v) {
        return static_cast<int>(std::lower_bound(ix.labels.begin(), ix.labels.end(), v) - ix.labels.begin());
    };
    ix.vertex_facets.assign(ix.labels.size(), {});
    for (const Simplex& f : K.facets()) {
        std::vector<int> idx;
        for (VertexId v : f) idx.push_back(pos(v));
        for (int i : idx) ix.vertex_facets[static_cast<std::size_t>(i)].push_back(static_cast<int>(ix.facets.size()));
        ix.facets.push_back(std::move(idx));
    }
    for (VertexId v : ix.labels) ix.degree.push_back(static_cast<int>(K.neighbors(v).size()));
    return ix;
}

using Coloring = std::vector<int>;

std::size_t count_classes(const Coloring& c)
{
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

std::vector<int> histogram(const Coloring& c)
{
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    return s;
}

/// One joint refinement round; both sides share the signature dictionary so colours stay comparable.
std::pair<Coloring, Coloring> refine_once(const Indexed& a, const Coloring& ca, const Indexed& b, const Coloring& cb)
{
    std::map<std::vector<int>, int> facet_dict;
    std::map<std::vector<int>, int> vertex_dict;
    auto facet_colors = [&](const Indexed& ix, const Coloring& c) {
        std::vector<int> out;
        out.reserve(ix.facets.size());
        for (const auto& f : ix.facets) {
            std::vector<int> sig;
            for (int v : f) sig.push_back(c[static_cast<std::size_t>(v)]);
            std::sort(sig.begin(), sig.end());
            auto [it, inserted] = facet_dict.emplace(std::move(sig), static_cast<int>(facet_dict.size()));
            out.push_back(it->second);
        }
        return out;
    };
    const auto fa = facet_colors(a, ca);
    const auto fb = facet_colors(b, cb);
    auto vertex_colors = [&](const Indexed& ix, const Coloring& c, const std::vector<int>& fc) {
        Coloring out;
        out.reserve(c.size());
        for (std::size_t v = 0; v < c.size(); ++v) {
            std::vector<int> sig{c[v]};
            std::vector<int> around;
            for (int f : ix.vertex_facets[v]) around.push_back(fc[static_cast<std::size_t>(f)]);
            std::sort(around.begin(), around.end());
            sig.insert(sig.end(), around.begin(), around.end());
            auto [it, inserted] = vertex_dict.emplace(std::move(sig), static_cast<int>(vertex_dict.size()));
            out.push_back(it->second);
        }
        return out;
    };
    return {vertex_colors(a, ca, fa), vertex_colors(b, cb, fb)};
}

bool refine(const Indexed& a, Coloring& ca, const Indexed& b, Coloring& cb)
{
    std::size_t classes = count_classes(ca);
    while (true) {
        auto [na, nb] = refine_once(a, ca, b, cb);
        ca = std::move(na);
        cb = std::move(nb);
        if (histogram(ca) != histogram(cb)) return false;
        const std::size_t next = count_classes(ca);
        if (next == classes) return true;
        classes = next;
    }
}

bool facets_match(const Indexed& a, const Indexed& b, const std::vector<int>& map)
{
    std::vector<std::vector<int>> fb = b.facets;
    for (auto& f : fb) std::sort(f.begin(), f.end());
    std::sort(fb.begin(), fb.end());
    std::vector<std::vector<int>> image;
    image.reserve(a.facets.size());
    for (const auto& f : a.facets) {
        std::vector<int> g;
        for (int v : f) g.push_back(map[static_cast<std::size_t>(v)]);
        std::sort(g.begin(), g.end());
        image.push_back(std::move(g));
    }
    std::sort(image.begin(), image.end());
    return image == fb;
}

bool search(const Indexed& a, Coloring ca, const Indexed& b, Coloring cb, std::vector<int>& out)
{
    if (!refine(a, ca, b, cb)) return false;
    // smallest non-singleton class drives the branching
    std::map<int, int> sizes;
    for (int c : ca) ++sizes[c];
    int branch_color = -1;
    int best = 0;
    for (auto [c, n] : sizes) {
        if (n > 1 && (branch_color < 0 || n < best)) {
            branch_color = c;
            best = n;
        }
    }
    if (branch_color < 0) {
        std::vector<int> map(ca.size());
        for (std::size_t v = 0; v < ca.size(); ++v) {
            auto it = std::find(cb.begin(), cb.end(), ca[v]);
            map[v] = static_cast<int>(it - cb.begin());
        }
        if (!facets_match(a, b, map)) return false;
        out = std::move(map);
        return true;
    }
    const int fresh = std::max(*std::max_element(ca.begin(), ca.end()), *std::max_element(cb.begin(), cb.end())) + 1;
    const auto v = static_cast<std::size_t>(std::find(ca.begin(), ca.end(), branch_color) - ca.begin());
    for (std::size_t w = 0; w < cb.size(); ++w) {
        if (cb[w] != branch_color) continue;
        Coloring na = ca;
        Coloring nb = cb;
        na[v] = fresh;
        nb[w] = fresh;
        if (search(a, std::move(na), b, std::move(nb), out)) return true;
    }
    return false;
}

} // namespace

std::optional<IsomorphismMap> is_isomorphic(const Complex& K1, const Complex& K2)
{
    if (K1.dimension() != K2.dimension() || K1.num_facets() != K2.num_facets() ||
        K1.num_vertices() != K2.num_vertices()) {
        return std::nullopt;
    }
    const Indexed a = index_complex(K1);
    const Indexed b = index_complex(K2);
    auto seed = [](const Indexed& ix) {
        Coloring c;
        for (std::size_t v = 0; v < ix.labels.size(); ++v) {
            c.push_back(ix.degree[v] * 100003 + static_cast<int>(ix.vertex_facets[v].size()));
        }
        return c;
    };
    Coloring ca = seed(a);
    Coloring cb = seed(b);
    // compress seeds to small shared ids
    std::map<int, int> dict;
    for (int& c : ca) c = dict.emplace(c, static_cast<int>(dict.size())).first->second;
    for (int& c : cb) c = dict.emplace(c, static_cast<int>(dict.size())).first->second;

    std::vector<int> map;
    if (!search(a, std::move(ca), b, std::move(cb), map)) return std::nullopt;
    IsomorphismMap iso;
    for (std::size_t v = 0; v < map.size(); ++v) {
        iso.pairs.emplace(a.labels[v], b.labels[static_cast<std::size_t>(map[v])]);
    }
    return iso;
}

} // namespace psf
