/**
 * Abstract simplicial complexes with labeled vertices: order complexes,
 * links, joins, face counts and the plain-text facet format.
 */
#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "aom/error.hpp"
#include "aom/poset.hpp"

namespace aom {

/// Sorted vertex ids.
using Simplex = std::vector<int>;

/**
 * A complex stored by its facets. Two degenerate complexes are distinct:
 * the void complex (no faces at all) and {empty set}, the (-1)-sphere.
 * Vertex ids are positions in `labels()`; ids are ordered like the labels.
 */
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    static SimplicialComplex from_labeled_facets(const std::vector<std::vector<std::string>>& facets) {
        std::set<std::string> names;
        for (const auto& f : facets) names.insert(f.begin(), f.end());
        SimplicialComplex k;
        k.labels_.assign(names.begin(), names.end());
        for (std::size_t i = 0; i < k.labels_.size(); ++i) k.index_[k.labels_[i]] = static_cast<int>(i);
        for (const auto& f : facets) {
            Simplex s;
            for (const auto& v : f) s.push_back(k.index_.at(v));
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw ValidationError("facet lists a vertex twice");
            k.facets_.push_back(std::move(s));
        }
        k.normalize();
        return k;
    }

    /// {empty set}: the join identity and the sphere of dimension -1.
    static SimplicialComplex empty_sphere() {
        SimplicialComplex k;
        k.facets_.push_back({});
        return k;
    }

    static SimplicialComplex simplex(const std::vector<std::string>& vertices) { return from_labeled_facets({vertices}); }

    /// Boundary of the simplex on `vertices`.
    static SimplicialComplex simplex_boundary(const std::vector<std::string>& vertices) {
        std::vector<std::vector<std::string>> facets;
        for (std::size_t skip = 0; skip < vertices.size(); ++skip) {
            std::vector<std::string> f;
            for (std::size_t i = 0; i < vertices.size(); ++i)
                if (i != skip) f.push_back(vertices[i]);
            facets.push_back(std::move(f));
        }
        if (vertices.size() == 1) return empty_sphere();
        return from_labeled_facets(facets);
    }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
    std::size_t vertex_count() const { return labels_.size(); }
    bool has_vertex(const std::string& name) const { return index_.count(name) != 0; }
    int vertex(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw DomainError("unknown vertex '" + name + "'");
        return it->second;
    }

    const std::vector<Simplex>& facets() const { return facets_; }
    std::vector<std::vector<std::string>> labeled_facets() const {
        std::vector<std::vector<std::string>> out;
        for (const auto& f : facets_) out.push_back(names(f));
        return out;
    }
    std::vector<std::string> names(const Simplex& s) const {
        std::vector<std::string> out;
        for (int v : s) out.push_back(label(v));
        return out;
    }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_sphere() const { return facets_.size() == 1 && facets_.front().empty(); }

    /// -1 for {empty set}, -2 for the void complex.
    int dimension() const {
        if (facets_.empty()) return -2;
        std::size_t m = 0;
        for (const auto& f : facets_) m = std::max(m, f.size());
        return static_cast<int>(m) - 1;
    }

    bool is_pure() const {
        return std::all_of(facets_.begin(), facets_.end(),
                           [&](const Simplex& f) { return static_cast<int>(f.size()) - 1 == dimension(); });
    }

    /// Nonempty faces grouped by dimension, each group sorted.
    std::vector<std::vector<Simplex>> faces_by_dimension() const {
        const int d = dimension();
        if (d < 0) return {};
        std::vector<std::set<Simplex>> acc(static_cast<std::size_t>(d) + 1);
        for (const auto& f : facets_) {
            const std::size_t m = f.size();
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
                Simplex s;
                for (std::size_t i = 0; i < m; ++i)
                    if ((mask >> i) & 1U) s.push_back(f[i]);
                acc[s.size() - 1].insert(std::move(s));
            }
        }
        std::vector<std::vector<Simplex>> out;
        for (auto& a : acc) out.emplace_back(a.begin(), a.end());
        return out;
    }

    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> out;
        for (const auto& group : faces_by_dimension()) out.push_back(group.size());
        return out;
    }

    /// Unreduced Euler characteristic.
    long euler_characteristic() const {
        long chi = 0, sign = 1;
        for (auto f : f_vector()) {
            chi += sign * static_cast<long>(f);
            sign = -sign;
        }
        return chi;
    }

    bool contains_face(const std::vector<std::string>& face) const {
        Simplex s;
        for (const auto& v : face) {
            if (!has_vertex(v)) return false;
            s.push_back(vertex(v));
        }
        std::sort(s.begin(), s.end());
        return std::any_of(facets_.begin(), facets_.end(),
                           [&](const Simplex& f) { return std::includes(f.begin(), f.end(), s.begin(), s.end()); });
    }

    bool operator==(const SimplicialComplex& o) const {
        auto a = labeled_facets(), b = o.labeled_facets();
        for (auto& f : a) std::sort(f.begin(), f.end());
        for (auto& f : b) std::sort(f.begin(), f.end());
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

  private:
    void normalize() {
        std::sort(facets_.begin(), facets_.end(), [](const Simplex& a, const Simplex& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
        std::vector<Simplex> kept;
        for (auto& f : facets_) {
            bool covered = std::any_of(kept.begin(), kept.end(), [&](const Simplex& g) {
                return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
            });
            if (!covered) kept.push_back(std::move(f));
        }
        std::sort(kept.begin(), kept.end());
        facets_ = std::move(kept);
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<Simplex> facets_;
};

/// Facets are the maximal chains. The empty poset gives {empty set}.
inline SimplicialComplex order_complex(const Poset& p) {
    if (p.size() == 0) return SimplicialComplex::empty_sphere();
    std::vector<std::vector<std::string>> chains;
    std::vector<std::string> chain;
    auto walk = [&](auto&& self, std::size_t x) -> void {
        chain.push_back(p.label(x));
        if (p.upper_covers(x).empty()) chains.push_back(chain);
        for (auto y : p.upper_covers(x)) self(self, y);
        chain.pop_back();
    };
    for (auto m : p.minimal()) walk(walk, m);
    return SimplicialComplex::from_labeled_facets(chains);
}

/// {sigma : v not in sigma, sigma + v in K}.
inline SimplicialComplex link(const SimplicialComplex& k, const std::string& vertex) {
    const int v = k.vertex(vertex);
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : k.facets()) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        std::vector<std::string> rest;
        for (int u : f)
            if (u != v) rest.push_back(k.label(u));
        facets.push_back(std::move(rest));
    }
    if (facets.size() == 1 && facets.front().empty()) return SimplicialComplex::empty_sphere();
    bool has_empty = std::any_of(facets.begin(), facets.end(), [](const auto& f) { return f.empty(); });
    if (has_empty) {
        // An isolated vertex: only the empty face survives beside larger ones.
        std::vector<std::vector<std::string>> nonempty;
        for (auto& f : facets)
            if (!f.empty()) nonempty.push_back(std::move(f));
        if (nonempty.empty()) return SimplicialComplex::empty_sphere();
        facets = std::move(nonempty);
    }
    return SimplicialComplex::from_labeled_facets(facets);
}

/// Faces {s1 u s2}. Shared vertex labels are an error unless
/// `disambiguate` is set, in which case labels get "a:" / "b:" prefixes.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b, bool disambiguate = false) {
    if (a.is_void() || b.is_void()) return SimplicialComplex();
    std::string pa, pb;
    for (const auto& name : a.labels()) {
        if (b.has_vertex(name)) {
            if (!disambiguate) throw ValidationError("join: vertex '" + name + "' occurs in both complexes");
            pa = "a:";
            pb = "b:";
            break;
        }
    }
    std::vector<std::vector<std::string>> facets;
    for (const auto& fa : a.labeled_facets())
        for (const auto& fb : b.labeled_facets()) {
            std::vector<std::string> f;
            for (const auto& v : fa) f.push_back(pa + v);
            for (const auto& v : fb) f.push_back(pb + v);
            facets.push_back(std::move(f));
        }
    if (facets.size() == 1 && facets.front().empty()) return SimplicialComplex::empty_sphere();
    return SimplicialComplex::from_labeled_facets(facets);
}

/// Face poset (nonempty faces, inclusion). Face labels join vertex labels with '|'.
inline Poset face_poset(const SimplicialComplex& k) {
    std::vector<Simplex> faces;
    for (const auto& group : k.faces_by_dimension()) faces.insert(faces.end(), group.begin(), group.end());
    std::vector<std::string> labels;
    for (const auto& f : faces) {
        std::string s;
        for (int v : f) s += (s.empty() ? "" : "|") + k.label(v);
        labels.push_back(s);
    }
    return Poset(std::move(labels), [&](std::size_t i, std::size_t j) {
        return std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end());
    });
}

inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) { return order_complex(face_poset(k)); }

struct RidgeCensus {
    std::size_t interior = 0;   ///< ridges in exactly two facets
    std::size_t boundary = 0;   ///< ridges in exactly one facet
    std::size_t singular = 0;   ///< ridges in three or more facets
    std::vector<Simplex> boundary_ridges;
};

/// Counts codimension-one faces of a pure complex by the number of facets containing them.
inline RidgeCensus ridge_census(const SimplicialComplex& k) {
    RidgeCensus c;
    std::map<Simplex, std::size_t> count;
    for (const auto& f : k.facets())
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
            Simplex r;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != skip) r.push_back(f[i]);
            ++count[r];
        }
    for (const auto& [r, n] : count) {
        if (n == 1) {
            ++c.boundary;
            c.boundary_ridges.push_back(r);
        } else if (n == 2) {
            ++c.interior;
        } else {
            ++c.singular;
        }
    }
    return c;
}

/// Subcomplex generated by the ridges lying in exactly one facet.
inline SimplicialComplex boundary_complex(const SimplicialComplex& k) {
    auto census = ridge_census(k);
    if (census.boundary_ridges.empty()) return SimplicialComplex();
    std::vector<std::vector<std::string>> facets;
    for (const auto& r : census.boundary_ridges) facets.push_back(k.names(r));
    if (facets.size() == 1 && facets.front().empty()) return SimplicialComplex::empty_sphere();
    return SimplicialComplex::from_labeled_facets(facets);
}

// ---------------------------------------------------------------------------
// Text format: one facet per line, whitespace-separated vertices, '#' comments.
// ---------------------------------------------------------------------------

inline SimplicialComplex parse_complex(std::istream& in, const std::string& source = "<input>") {
    std::vector<std::vector<std::string>> facets;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> f;
        for (std::string t; ls >> t;) f.push_back(t);
        if (f.empty()) continue;
        std::vector<std::string> sorted = f;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError(source, lineno, "facet lists a vertex twice");
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_labeled_facets(facets);
}

inline std::string format_complex(const SimplicialComplex& k) {
    std::ostringstream out;
    for (const auto& f : k.labeled_facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << "\n";
    }
    return out.str();
}

}  // namespace aom
