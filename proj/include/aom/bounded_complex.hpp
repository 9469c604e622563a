/**
 * Affine oriented matroids, the positive part L+ and the bounded complex L++.
 */
#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

#include "aom/error.hpp"
#include "aom/oriented_matroid.hpp"
#include "aom/poset.hpp"
#include "aom/signvec.hpp"
#include "aom/simplicial.hpp"

namespace aom {

/// (E, L, g) with L satisfying the covector axioms and g not a loop.
class AffineOM {
  public:
    AffineOM(CovectorSet om, std::size_t g) : AffineOM(std::move(om), g, nullptr) {}

    AffineOM(CovectorSet om, std::string_view g_label)
        : AffineOM(CovectorSet(om), om.ground().index_of(g_label), nullptr) {}

    /// Skips re-verifying the axioms when a passing report is already at hand.
    AffineOM(CovectorSet om, std::size_t g, const AxiomReport& verified) : AffineOM(std::move(om), g, &verified) {}

    const CovectorSet& om() const { return om_; }
    std::size_t g() const { return g_; }
    const GroundSet& ground() const { return om_.ground(); }

    /// L / g over E \ {g}.
    CovectorSet contraction() const { return contract(om_, ElementSet::of({g_})); }

  private:
    AffineOM(CovectorSet om, std::size_t g, const AxiomReport* verified) : g_(g) {
        const auto n = om.ground().size();
        if (g >= n) throw DomainError("distinguished element index out of range");
        if (n <= 1) throw PreconditionError("an affine oriented matroid needs |E| > 1");
        if (verified) {
            if (!verified->all_ok()) throw PreconditionError("covector axioms fail");
        } else {
            auto rep = verify_covector_axioms(om);
            if (!rep.all_ok())
                throw PreconditionError(std::string("covector axiom ") + to_string(rep.witnesses.front().clause) +
                                        " fails");
        }
        if (loops(om).contains(g)) throw PreconditionError("distinguished element " + om.ground().label(g) + " is a loop");
        om_ = CovectorSet(om.ground().with_g(g), om.covectors());
    }

    CovectorSet om_;
    std::size_t g_;
};

/// L+ = { X in L : X_g = + }.
inline std::vector<SignVector> positive_part(const AffineOM& m) {
    std::vector<SignVector> out;
    for (const auto& x : m.om())
        if (x[m.g()] == Sign::Plus) out.push_back(x);
    return out;
}

struct BoundedComplex {
    std::vector<SignVector> covectors;  ///< L++, in covector-set order
    std::vector<std::size_t> ranks;     ///< covector rank of each element
    std::vector<SignVector> maximal;
    int dim = -1;                       ///< max rank - 1
    bool pure = false;
    bool common_support = false;
    ElementSet support;                 ///< E1 = support of the maximal cells (when common)
    std::vector<std::size_t> f_vector;  ///< cells by dimension (rank - 1)

    std::unordered_set<SignVector> members;

    bool contains(const SignVector& x) const { return members.count(x) != 0; }
    long euler_characteristic() const {
        long chi = 0, sign = 1;
        for (auto f : f_vector) {
            chi += sign * static_cast<long>(f);
            sign = -sign;
        }
        return chi;
    }
    /// Face poset labelled by sign strings.
    Poset face_poset() const {
        std::vector<std::string> labels;
        for (const auto& x : covectors) labels.push_back(x.str());
        return Poset(std::move(labels), [&](std::size_t i, std::size_t j) { return below(covectors[i], covectors[j]); });
    }
    /// Barycentric subdivision.
    SimplicialComplex order_complex() const { return aom::order_complex(face_poset()); }
};

/// L++ = { X in L+ : every nonzero Y <= X has Y_g = + }.
inline BoundedComplex bounded_complex(const AffineOM& m) {
    const auto& om = m.om();
    const auto g = m.g();
    BoundedComplex bc;
    for (std::size_t i = 0; i < om.size(); ++i) {
        const auto& x = om[i];
        if (x[g] != Sign::Plus) continue;
        bool bounded = true;
        for (const auto& y : om)
            if (!y.is_zero() && y[g] != Sign::Plus && below(y, x)) {
                bounded = false;
                break;
            }
        if (!bounded) continue;
        bc.covectors.push_back(x);
        bc.members.insert(x);
        bc.ranks.push_back(om.height(i));
    }
    for (std::size_t i = 0; i < bc.covectors.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < bc.covectors.size() && maximal; ++j)
            if (strictly_below(bc.covectors[i], bc.covectors[j])) maximal = false;
        if (!maximal) continue;
        bc.maximal.push_back(bc.covectors[i]);
        bc.dim = std::max(bc.dim, static_cast<int>(bc.ranks[i]) - 1);
    }
    bc.pure = true;
    bc.common_support = true;
    for (const auto& x : bc.maximal) {
        if (static_cast<int>(om.height(*om.index_of(x))) - 1 != bc.dim) bc.pure = false;
        if (x.support() != bc.maximal.front().support()) bc.common_support = false;
    }
    if (!bc.maximal.empty()) bc.support = bc.maximal.front().support();
    bc.f_vector.assign(bc.dim >= 0 ? static_cast<std::size_t>(bc.dim) + 1 : 0, 0);
    for (auto r : bc.ranks) ++bc.f_vector.at(r - 1);
    return bc;
}

/// Deletion to the support E1 of the maximal bounded cells.
inline AffineOM restrict_to_support(const AffineOM& m, ElementSet support) {
    if (!support.contains(m.g())) throw PreconditionError("support does not contain g");
    const auto removed = ElementSet::all(m.ground().size()) - support;
    std::size_t g = 0;
    for (std::size_t i = 0; i < m.g(); ++i)
        if (!removed.contains(i)) ++g;
    return AffineOM(delete_minor(m.om(), removed), g);
}

/// Checks that X -> X restricted to E1 maps `full` bijectively and
/// order-isomorphically onto `restricted`.
inline bool bounded_complexes_isomorphic(const BoundedComplex& full, const BoundedComplex& restricted,
                                         ElementSet removed) {
    if (full.covectors.size() != restricted.covectors.size()) return false;
    std::vector<SignVector> image;
    for (const auto& x : full.covectors) {
        auto y = delete_elements(x, removed);
        if (!restricted.contains(y)) return false;
        image.push_back(y);
    }
    std::unordered_set<SignVector> distinct(image.begin(), image.end());
    if (distinct.size() != image.size()) return false;
    for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = 0; j < image.size(); ++j)
            if (below(full.covectors[i], full.covectors[j]) != below(image[i], image[j])) return false;
    return true;
}

struct BoundaryCriterionCheck {
    bool holds = true;
    std::size_t checked = 0;
    std::vector<SignVector> counterexamples;
};

/// For X in L+ with X\g != 0:  X\g in L/g  <=>  X not in L++.
inline BoundaryCriterionCheck check_boundary_criterion(const AffineOM& m, const BoundedComplex& bc) {
    BoundaryCriterionCheck out;
    const auto contraction = m.contraction();
    const auto gset = ElementSet::of({m.g()});
    for (const auto& x : positive_part(m)) {
        auto rest = delete_elements(x, gset);
        if (rest.is_zero()) continue;
        ++out.checked;
        if (contraction.contains(rest) == bc.contains(x)) {
            out.holds = false;
            out.counterexamples.push_back(x);
        }
    }
    return out;
}

}  // namespace aom
