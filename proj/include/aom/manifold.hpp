/**
 * Sphere/ball certification and per-vertex link classification.
 *
 * Strength vocabulary:
 *   certified     sphere: closed pseudomanifold + sphere homology + (shelling
 *                 found or every vertex link certified as a sphere);
 *                 ball: collapse certificate + ball homology + boundary
 *                 certified as a sphere.
 *   evidence-only homology and pseudomanifold conditions hold but a
 *                 certificate was not found within budget.
 *   refuted       an exact obstruction: wrong dimension, impurity, a ridge in
 *                 three or more facets, or homology of neither shape.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aom/collapse.hpp"
#include "aom/homology.hpp"
#include "aom/shelling.hpp"
#include "aom/simplicial.hpp"

namespace aom {

enum class Shape { Sphere, Ball, Other };
enum class Strength { Certified, EvidenceOnly, Refuted };

inline const char* to_string(Shape s) {
    switch (s) {
        case Shape::Sphere: return "sphere-like";
        case Shape::Ball: return "ball-like";
        default: return "other";
    }
}
inline const char* to_string(Strength s) {
    switch (s) {
        case Strength::Certified: return "certified";
        case Strength::EvidenceOnly: return "evidence-only";
        default: return "refuted";
    }
}

struct CertifyOptions {
    std::size_t collapse_budget = 1'000'000;
    std::size_t shelling_budget = 100'000;
};

struct ShapeEvidence {
    Shape shape = Shape::Other;
    Strength strength = Strength::Refuted;
    int dimension = -2;
    HomologyTable homology;
    bool pseudomanifold = false;
    std::size_t boundary_ridges = 0;
    std::optional<CollapseCertificate> collapse;
    /// Facet order of a shelling, as vertex-label lists.
    std::optional<std::vector<std::vector<std::string>>> shelling;
    bool links_checked = false;
    std::string reason;
};

inline ShapeEvidence certify_shape(const SimplicialComplex& k, int expected_dim, const CertifyOptions& opts = {});

namespace detail {

inline ShapeEvidence refute(ShapeEvidence e, std::string why) {
    e.shape = Shape::Other;
    e.strength = Strength::Refuted;
    e.reason = std::move(why);
    return e;
}

inline ShapeEvidence certify_sphere(ShapeEvidence e, const SimplicialComplex& k, const CertifyOptions& opts) {
    e.shape = Shape::Sphere;
    const int d = e.dimension;
    if (d == 0) {
        e.strength = Strength::Certified;
        e.reason = "two points";
        return e;
    }
    if (auto order = find_shelling(k, opts.shelling_budget); order && verify_shelling(k, *order).holds) {
        std::vector<std::vector<std::string>> named;
        for (auto f : *order) named.push_back(k.names(k.facets()[f]));
        e.shelling = std::move(named);
        e.strength = Strength::Certified;
        e.reason = "shelling found";
        return e;
    }
    e.links_checked = true;
    for (const auto& v : k.labels()) {
        auto sub = certify_shape(link(k, v), d - 1, opts);
        if (sub.shape != Shape::Sphere || sub.strength != Strength::Certified) {
            e.strength = Strength::EvidenceOnly;
            e.reason = "no shelling within budget; link of " + v + " not certified";
            return e;
        }
    }
    e.strength = Strength::Certified;
    e.reason = "every vertex link certified as a sphere";
    return e;
}

inline ShapeEvidence certify_ball(ShapeEvidence e, const SimplicialComplex& k, const CertifyOptions& opts) {
    e.shape = Shape::Ball;
    const int d = e.dimension;
    if (d == 0) {
        e.strength = Strength::Certified;
        e.reason = "single point";
        return e;
    }
    auto bd = certify_shape(boundary_complex(k), d - 1, opts);
    if (bd.strength == Strength::Refuted || bd.shape != Shape::Sphere)
        return refute(std::move(e), "boundary is not a sphere: " + bd.reason);
    auto collapse = find_collapse(k, opts.collapse_budget);
    if (!collapse.certificate) {
        e.strength = Strength::EvidenceOnly;
        e.reason = "collapse budget exhausted";
        return e;
    }
    e.collapse = std::move(collapse.certificate);
    if (bd.strength != Strength::Certified) {
        e.strength = Strength::EvidenceOnly;
        e.reason = "boundary sphere not certified";
        return e;
    }
    e.strength = Strength::Certified;
    e.reason = "collapsible with sphere boundary";
    return e;
}

}  // namespace detail

/// Decides sphere-like / ball-like / other for a complex expected to have
/// dimension `expected_dim`.
inline ShapeEvidence certify_shape(const SimplicialComplex& k, int expected_dim, const CertifyOptions& opts) {
    ShapeEvidence e;
    e.dimension = k.dimension();
    if (expected_dim == -1) {
        if (k.is_empty_sphere()) {
            e.shape = Shape::Sphere;
            e.strength = Strength::Certified;
            e.pseudomanifold = true;
            e.reason = "(-1)-sphere";
            return e;
        }
        return detail::refute(std::move(e), "expected the (-1)-sphere");
    }
    if (e.dimension != expected_dim)
        return detail::refute(std::move(e), "dimension " + std::to_string(e.dimension) + ", expected " +
                                                std::to_string(expected_dim));
    if (!k.is_pure()) return detail::refute(std::move(e), "not pure");

    e.homology = homology(k);
    if (expected_dim == 0) {
        e.pseudomanifold = k.vertex_count() <= 2;
        if (k.vertex_count() == 1) return detail::certify_ball(std::move(e), k, opts);
        if (k.vertex_count() == 2) return detail::certify_sphere(std::move(e), k, opts);
        return detail::refute(std::move(e), std::to_string(k.vertex_count()) + " points");
    }

    const auto census = ridge_census(k);
    e.boundary_ridges = census.boundary;
    e.pseudomanifold = census.singular == 0;
    if (!e.pseudomanifold) return detail::refute(std::move(e), "a ridge lies in three or more facets");

    const bool sphere_h = e.homology.is_sphere_like(expected_dim);
    const bool ball_h = e.homology.is_point_like();
    if (sphere_h && census.boundary == 0) return detail::certify_sphere(std::move(e), k, opts);
    if (ball_h && census.boundary > 0) return detail::certify_ball(std::move(e), k, opts);
    if (sphere_h) return detail::refute(std::move(e), "sphere homology but nonempty boundary");
    if (ball_h) return detail::refute(std::move(e), "ball homology but empty boundary");
    return detail::refute(std::move(e), "homology of neither a sphere nor a ball");
}

struct VertexLink {
    std::string vertex;
    ShapeEvidence evidence;
};

struct LinkClassification {
    std::vector<VertexLink> vertices;
    bool manifold = true;       ///< no vertex classified "other"
    bool all_certified = true;  ///< every vertex sphere-like or ball-like with certificates

    std::vector<std::string> refuted_vertices() const {
        std::vector<std::string> out;
        for (const auto& v : vertices)
            if (v.evidence.shape == Shape::Other) out.push_back(v.vertex);
        return out;
    }
};

/// Classifies the link of every vertex of a pure complex of dimension D as a
/// (D-1)-sphere, a (D-1)-ball, or neither.
inline LinkClassification classify_links(const SimplicialComplex& k, const CertifyOptions& opts = {}) {
    if (!k.is_pure()) throw PreconditionError("classify_links: complex is not pure");
    LinkClassification out;
    const int d = k.dimension();
    for (const auto& v : k.labels()) {
        VertexLink vl{v, certify_shape(link(k, v), d - 1, opts)};
        if (vl.evidence.shape == Shape::Other) out.manifold = false;
        if (vl.evidence.shape == Shape::Other || vl.evidence.strength != Strength::Certified) out.all_certified = false;
        out.vertices.push_back(std::move(vl));
    }
    return out;
}

}  // namespace aom
