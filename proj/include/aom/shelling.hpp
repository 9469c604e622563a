/**
 * Shelling verification and search.
 *
 * The coatom form of the shelling condition works on a face poset P with a
 * bottom and top adjoined: an order c_1..c_t of the coatoms is a shelling if
 * for all i < j some k < j has  c_i ^ c_j <= c_k ^ c_j  covered by c_j.
 * On simplicial posets this is exactly shellability; on other cell posets it
 * is only a necessary condition, and results say which mode applied.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aom/error.hpp"
#include "aom/poset.hpp"
#include "aom/simplicial.hpp"

namespace aom {

struct ShellingCheck {
    bool holds = true;
    /// True when the poset is simplicial, so `holds` decides shellability.
    bool exact = true;
    /// Positions (i, j) in the order for which no k was found.
    std::vector<std::pair<std::size_t, std::size_t>> failures;
};

/// Every lower interval [0, p] is boolean.
inline bool is_simplicial(const Poset& p) {
    for (std::size_t x = 0; x < p.size(); ++x) {
        std::size_t below = 0, atoms = 0;
        for (std::size_t y = 0; y < p.size(); ++y) {
            if (!p.leq(y, x)) continue;
            ++below;
            if (p.rank(y) == 1) ++atoms;
        }
        if (atoms != p.rank(x) || below + 1 != (std::size_t{1} << p.rank(x))) return false;
    }
    return true;
}

/// `order` lists poset indices of the maximal elements. The bottom element
/// is implicit and is returned as nullopt by meets.
inline ShellingCheck verify_shelling(const Poset& p, const std::vector<std::size_t>& order) {
    auto maxes = p.maximal();
    if (maxes.empty()) return {};
    for (auto m : maxes)
        if (p.rank(m) != p.rank(maxes.front())) throw PreconditionError("verify_shelling: face poset is not pure");
    {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != maxes) throw PreconditionError("verify_shelling: order is not a permutation of the coatoms");
    }
    ShellingCheck out;
    out.exact = is_simplicial(p);

    const std::size_t n = p.size();
    auto meet = [&](std::size_t a, std::size_t b) -> std::optional<std::size_t> {
        std::optional<std::size_t> best;
        for (std::size_t z = 0; z < n; ++z)
            if (p.leq(z, a) && p.leq(z, b) && (!best || p.rank(z) > p.rank(*best))) best = z;
        if (!best) return std::nullopt;
        for (std::size_t z = 0; z < n; ++z)
            if (p.leq(z, a) && p.leq(z, b) && !p.leq(z, *best))
                throw PreconditionError("verify_shelling: augmented face poset is not a lattice");
        return best;
    };
    auto covered_by = [&](const std::optional<std::size_t>& m, std::size_t c) {
        return m ? p.covers(*m, c) : p.rank(c) == 1;
    };
    auto le = [&](const std::optional<std::size_t>& a, const std::optional<std::size_t>& b) {
        if (!a) return true;
        if (!b) return false;
        return p.leq(*a, *b);
    };

    for (std::size_t j = 1; j < order.size(); ++j) {
        std::vector<std::optional<std::size_t>> meets(j);
        std::vector<std::size_t> good;
        for (std::size_t k = 0; k < j; ++k) {
            meets[k] = meet(order[k], order[j]);
            if (covered_by(meets[k], order[j])) good.push_back(k);
        }
        for (std::size_t i = 0; i < j; ++i) {
            bool found = false;
            for (auto k : good)
                if (le(meets[i], meets[k])) {
                    found = true;
                    break;
                }
            if (!found) {
                out.holds = false;
                out.failures.emplace_back(i, j);
            }
        }
    }
    return out;
}

/// Direct simplicial route: facet intersections instead of poset meets.
inline ShellingCheck verify_shelling(const SimplicialComplex& k, const std::vector<std::size_t>& facet_order) {
    const auto& facets = k.facets();
    if (!k.is_pure()) throw PreconditionError("verify_shelling: complex is not pure");
    {
        auto sorted = facet_order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != i || sorted.size() != facets.size())
                throw PreconditionError("verify_shelling: order is not a permutation of the facets");
    }
    auto intersect = [](const Simplex& a, const Simplex& b) {
        Simplex out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };
    ShellingCheck out;
    for (std::size_t j = 1; j < facet_order.size(); ++j) {
        const auto& cj = facets[facet_order[j]];
        std::vector<Simplex> ridges;
        for (std::size_t k2 = 0; k2 < j; ++k2) {
            auto m = intersect(facets[facet_order[k2]], cj);
            if (m.size() + 1 == cj.size()) ridges.push_back(std::move(m));
        }
        for (std::size_t i = 0; i < j; ++i) {
            auto m = intersect(facets[facet_order[i]], cj);
            bool found = std::any_of(ridges.begin(), ridges.end(), [&](const Simplex& r) {
                return std::includes(r.begin(), r.end(), m.begin(), m.end());
            });
            if (!found) {
                out.holds = false;
                out.failures.emplace_back(i, j);
            }
        }
    }
    return out;
}

/// Depth-first search for a facet shelling order of a pure complex; `budget`
/// bounds the number of placements. Candidates are tried in facet order.
inline std::optional<std::vector<std::size_t>> find_shelling(const SimplicialComplex& k, std::size_t budget = 100'000) {
    const auto& facets = k.facets();
    if (facets.empty() || !k.is_pure()) return std::nullopt;
    const std::size_t t = facets.size();

    auto attaches = [&](const std::vector<std::size_t>& placed, std::size_t cand) {
        const auto& c = facets[cand];
        std::vector<Simplex> ridges, meets;
        for (auto p : placed) {
            Simplex m;
            std::set_intersection(facets[p].begin(), facets[p].end(), c.begin(), c.end(), std::back_inserter(m));
            if (m.size() + 1 == c.size()) ridges.push_back(m);
            meets.push_back(std::move(m));
        }
        if (ridges.empty()) return false;
        for (const auto& m : meets)
            if (!std::any_of(ridges.begin(), ridges.end(), [&](const Simplex& r) {
                    return std::includes(r.begin(), r.end(), m.begin(), m.end());
                }))
                return false;
        return true;
    };

    std::vector<std::size_t> placed;
    std::vector<bool> used(t, false);
    std::vector<std::size_t> resume;  // next candidate to try per depth
    std::size_t nodes = 0;
    for (std::size_t first = 0; first < t; ++first) {
        placed = {first};
        used.assign(t, false);
        used[first] = true;
        resume = {0};
        while (!placed.empty()) {
            if (placed.size() == t) return placed;
            if (++nodes > budget) return std::nullopt;
            std::size_t& from = resume.back();
            std::size_t cand = from;
            while (cand < t && (used[cand] || !attaches(placed, cand))) ++cand;
            if (cand < t) {
                from = cand + 1;
                placed.push_back(cand);
                used[cand] = true;
                resume.push_back(0);
            } else {
                resume.pop_back();
                used[placed.back()] = false;
                placed.pop_back();
            }
        }
    }
    return std::nullopt;
}

}  // namespace aom
