#include "psf/complex.hpp"

#include "psf/error.hpp"

#include <mutex>
#include <set>

namespace psf {

struct Complex::Cache
{
    std::once_flag faces_once;
    std::vector<std::vector<Simplex>> faces; // faces[k + 1] holds the k-faces

    std::once_flag incidence_once;
    std::vector<std::vector<std::size_t>> incidence; // by position in vertices_

    std::once_flag adjacency_once;
    std::vector<std::vector<VertexId>> adjacency; // by position in vertices_
};

Complex::Complex()
    : Complex(std::vector<Simplex>{Simplex{}}, true)
{}

Complex::Complex(std::vector<Simplex> sorted_facets, bool pure)
    : facets_(std::move(sorted_facets)), pure_(pure), cache_(std::make_shared<Cache>())
{
    std::vector<VertexId> vs;
    for (const Simplex& f : facets_) {
        dim_ = std::max(dim_, f.dimension());
        vs.insert(vs.end(), f.begin(), f.end());
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    vertices_ = std::move(vs);
}

Complex Complex::from_facets(const std::vector<std::vector<VertexId>>& facets)
{
    if (facets.empty()) {
        throw Error(Errc::EmptyFacet, "a complex needs at least one facet");
    }
    std::vector<Simplex> simplices;
    simplices.reserve(facets.size());
    const std::size_t n = facets.front().size();
    for (const auto& f : facets) {
        if (f.empty()) throw Error(Errc::EmptyFacet, "facet with no vertices");
        if (f.size() != n) {
            throw Error(Errc::MixedDimension, "facets of sizes " + std::to_string(n) + " and " + std::to_string(f.size()));
        }
        simplices.emplace_back(std::span<const VertexId>(f));
    }
    return from_simplices(std::move(simplices));
}

Complex Complex::from_simplices(std::vector<Simplex> facets)
{
    if (facets.empty()) return Complex();
    const std::size_t n = facets.front().size();
    for (const Simplex& f : facets) {
        if (f.size() != n) {
            throw Error(Errc::MixedDimension, "facets of sizes " + std::to_string(n) + " and " + std::to_string(f.size()));
        }
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return Complex(std::move(facets), true);
}

Complex Complex::from_maximal_faces(std::vector<Simplex> faces)
{
    if (faces.empty()) return Complex();
    std::sort(faces.begin(), faces.end(), [](const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Simplex> kept;
    for (Simplex& f : faces) {
        bool covered = false;
        for (const Simplex& g : kept) {
            if (g.size() > f.size() && f.is_face_of(g)) {
                covered = true;
                break;
            }
        }
        if (!covered) kept.push_back(std::move(f));
    }
    const bool pure = kept.front().size() == kept.back().size();
    std::sort(kept.begin(), kept.end());
    return Complex(std::move(kept), pure);
}

Complex from_facets(const std::vector<std::vector<VertexId>>& facets) { return Complex::from_facets(facets); }

bool Complex::has_vertex(VertexId v) const noexcept { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

VertexId Complex::max_vertex() const
{
    if (vertices_.empty()) throw Error(Errc::OutOfRange, "complex has no vertices");
    return vertices_.back();
}

bool Complex::has_facet(const Simplex& s) const noexcept { return std::binary_search(facets_.begin(), facets_.end(), s); }

const Complex::Cache& Complex::cache() const { return *cache_; }

const std::vector<Simplex>& Complex::faces_of_dim(int k) const
{
    if (k < -1 || k > dim_) {
        throw Error(Errc::OutOfRange, "face dimension " + std::to_string(k) + " outside [-1, " + std::to_string(dim_) + "]");
    }
    Cache& c = *cache_;
    std::call_once(c.faces_once, [&] {
        c.faces.assign(static_cast<std::size_t>(dim_ + 2), {});
        for (const Simplex& f : facets_) {
            for (std::size_t size = 0; size <= f.size(); ++size) {
                auto subs = f.subsets(size);
                auto& bucket = c.faces[size];
                bucket.insert(bucket.end(), std::make_move_iterator(subs.begin()), std::make_move_iterator(subs.end()));
            }
        }
        for (auto& bucket : c.faces) {
            std::sort(bucket.begin(), bucket.end());
            bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
        }
    });
    return c.faces[static_cast<std::size_t>(k + 1)];
}

std::span<const std::size_t> Complex::facets_containing(VertexId v) const
{
    Cache& c = *cache_;
    std::call_once(c.incidence_once, [&] {
        c.incidence.assign(vertices_.size(), {});
        for (std::size_t i = 0; i < facets_.size(); ++i) {
            for (VertexId w : facets_[i]) {
                auto pos = std::lower_bound(vertices_.begin(), vertices_.end(), w) - vertices_.begin();
                c.incidence[static_cast<std::size_t>(pos)].push_back(i);
            }
        }
    });
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return {};
    const auto& list = c.incidence[static_cast<std::size_t>(it - vertices_.begin())];
    return {list.data(), list.size()};
}

std::vector<std::size_t> Complex::facets_containing(const Simplex& s) const
{
    std::vector<std::size_t> out;
    if (s.empty()) {
        out.resize(facets_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
        return out;
    }
    // scan the incidence list of the rarest vertex
    std::span<const std::size_t> best = facets_containing(s[0]);
    for (VertexId v : s) {
        auto cand = facets_containing(v);
        if (cand.size() < best.size()) best = cand;
    }
    for (std::size_t i : best) {
        if (s.is_face_of(facets_[i])) out.push_back(i);
    }
    return out;
}

bool Complex::contains(const Simplex& s) const
{
    if (s.empty()) return true;
    std::span<const std::size_t> best = facets_containing(s[0]);
    for (VertexId v : s) {
        auto cand = facets_containing(v);
        if (cand.size() < best.size()) best = cand;
    }
    for (std::size_t i : best) {
        if (s.is_face_of(facets_[i])) return true;
    }
    return false;
}

std::span<const VertexId> Complex::neighbors(VertexId v) const
{
    Cache& c = *cache_;
    std::call_once(c.adjacency_once, [&] {
        c.adjacency.assign(vertices_.size(), {});
        for (const Simplex& f : facets_) {
            for (VertexId a : f) {
                auto pos = static_cast<std::size_t>(std::lower_bound(vertices_.begin(), vertices_.end(), a) - vertices_.begin());
                for (VertexId b : f) {
                    if (a != b) c.adjacency[pos].push_back(b);
                }
            }
        }
        for (auto& list : c.adjacency) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    });
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return {};
    const auto& list = c.adjacency[static_cast<std::size_t>(it - vertices_.begin())];
    return {list.data(), list.size()};
}

bool Complex::adjacent(VertexId a, VertexId b) const
{
    auto n = neighbors(a);
    return std::binary_search(n.begin(), n.end(), b);
}

std::vector<Simplex> faces(const Complex& K, int k) { return K.faces_of_dim(k); }

std::vector<Simplex> link_facets(const Simplex& sigma, const Complex& K)
{
    std::vector<Simplex> out;
    for (std::size_t i : K.facets_containing(sigma)) {
        out.push_back(K.facets()[i].set_difference(sigma));
    }
    return out;
}

Complex link(const Simplex& sigma, const Complex& K)
{
    auto lf = link_facets(sigma, K);
    if (lf.empty()) throw Error(Errc::FaceNotPresent, "link of " + sigma.to_string());
    if (K.is_pure()) return Complex::from_simplices(std::move(lf));
    return Complex::from_maximal_faces(std::move(lf));
}

Complex star(const Simplex& sigma, const Complex& K)
{
    std::vector<Simplex> fs;
    for (std::size_t i : K.facets_containing(sigma)) fs.push_back(K.facets()[i]);
    if (fs.empty()) throw Error(Errc::FaceNotPresent, "star of " + sigma.to_string());
    if (K.is_pure()) return Complex::from_simplices(std::move(fs));
    return Complex::from_maximal_faces(std::move(fs));
}

Complex induced(const Complex& K, std::span<const VertexId> vertices)
{
    std::vector<VertexId> vs(vertices.begin(), vertices.end());
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (VertexId v : vs) {
        if (!K.has_vertex(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
    }
    const Simplex keep = Simplex::from_sorted(vs);
    std::vector<Simplex> parts;
    parts.reserve(K.num_facets());
    for (const Simplex& f : K.facets()) parts.push_back(f.set_intersection(keep));
    return Complex::from_maximal_faces(std::move(parts));
}

Complex skeleton(const Complex& K, int k)
{
    if (k < 0 || k > K.dimension()) {
        throw Error(Errc::OutOfRange, "skeleton dimension " + std::to_string(k));
    }
    if (k == K.dimension()) return K;
    std::vector<Simplex> parts;
    for (const Simplex& f : K.facets()) {
        if (f.dimension() <= k) {
            parts.push_back(f);
        } else {
            auto subs = f.subsets(static_cast<std::size_t>(k + 1));
            parts.insert(parts.end(), subs.begin(), subs.end());
        }
    }
    if (K.is_pure()) return Complex::from_simplices(std::move(parts));
    return Complex::from_maximal_faces(std::move(parts));
}

Complex join(const Complex& K1, const Complex& K2)
{
    for (VertexId v : K1.vertices()) {
        if (K2.has_vertex(v)) throw Error(Errc::VertexOverlap, "vertex " + std::to_string(v) + " in both complexes");
    }
    std::vector<Simplex> fs;
    fs.reserve(K1.num_facets() * K2.num_facets());
    for (const Simplex& a : K1.facets()) {
        for (const Simplex& b : K2.facets()) fs.push_back(a.set_union(b));
    }
    if (K1.is_pure() && K2.is_pure()) return Complex::from_simplices(std::move(fs));
    return Complex::from_maximal_faces(std::move(fs));
}

std::vector<Simplex> missing_simplices(const Complex& K, int k)
{
    if (k < 1 || k > K.dimension() + 1) {
        throw Error(Errc::OutOfRange, "missing simplex dimension " + std::to_string(k));
    }
    std::vector<Simplex> out;
    if (k == 1) {
        const auto& vs = K.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (!K.adjacent(vs[i], vs[j])) out.push_back(Simplex{vs[i], vs[j]});
            }
        }
        return out;
    }
    // candidates are a (k-1)-face plus a larger neighbour of all its vertices
    for (const Simplex& rho : K.faces_of_dim(k - 1)) {
        const VertexId top = rho.back();
        std::vector<VertexId> common(K.neighbors(rho[0]).begin(), K.neighbors(rho[0]).end());
        for (std::size_t i = 1; i < rho.size() && !common.empty(); ++i) {
            auto n = K.neighbors(rho[i]);
            std::vector<VertexId> next;
            std::set_intersection(common.begin(), common.end(), n.begin(), n.end(), std::back_inserter(next));
            common = std::move(next);
        }
        for (VertexId w : common) {
            if (w <= top) continue;
            Simplex cand = rho.with(w);
            if (K.contains(cand)) continue;
            bool boundary_present = true;
            for (VertexId x : rho) {
                if (!K.contains(cand.without(x))) {
                    boundary_present = false;
                    break;
                }
            }
            if (boundary_present) out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Complex relabel(const Complex& K, const std::map<VertexId, VertexId>& map)
{
    std::vector<Simplex> fs;
    fs.reserve(K.num_facets());
    std::vector<VertexId> buf;
    for (const Simplex& f : K.facets()) {
        buf.clear();
        for (VertexId v : f) {
            auto it = map.find(v);
            buf.push_back(it == map.end() ? v : it->second);
        }
        fs.emplace_back(std::span<const VertexId>(buf));
    }
    if (K.is_pure()) return Complex::from_simplices(std::move(fs));
    return Complex::from_maximal_faces(std::move(fs));
}

} // namespace psf
