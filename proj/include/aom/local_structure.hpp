/**
 * Local structure of the bounded complex around a cell X.
 *
 * For X in L++ these routines build
 *   C_X  topes above X that are not bounded,
 *   D_X  topes of L/g that agree with X on supp(X \ g),
 * the bijection r(T) = T \ g with inverse h(T) = i(T) o X, a shelling of
 * [D_X] read off the tope poset of L/g, the induced order c_i = h(d_i) on
 * [C_X] together with its coatom shelling check, and the split of the link
 * of X into the parts below and above X.
 *
 * LocalStructure first restricts to the common support E1 of the maximal
 * bounded cells, so that the maximal cells are topes.
 */
#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "aom/bounded_complex.hpp"
#include "aom/error.hpp"
#include "aom/oriented_matroid.hpp"
#include "aom/poset.hpp"
#include "aom/shelling.hpp"
#include "aom/simplicial.hpp"

namespace aom {

struct CubeCheck {
    bool ok = false;
    std::size_t expected = 0;  ///< 3^{|z(X)|}
    std::size_t actual = 0;    ///< |L_{>=X}|
    /// (Y, Y \ supp(X)) for every Y >= X.
    std::vector<std::pair<SignVector, SignVector>> pairing;
    std::string failure;
};

/// Census and order-isomorphism check of L_{>=X} against {+,-,0}^{z(X)}.
inline CubeCheck check_cube(const CovectorSet& set, const SignVector& x) {
    if (!set.contains(x)) throw MembershipError(x.str() + " is not a covector");
    CubeCheck out;
    const auto supp = x.support();
    const auto z = x.zero_set().size();
    out.expected = 1;
    for (std::size_t i = 0; i < z; ++i) out.expected *= 3;
    std::unordered_set<SignVector> images;
    for (const auto& y : set) {
        if (!below(x, y)) continue;
        auto img = delete_elements(y, supp);
        images.insert(img);
        out.pairing.emplace_back(y, std::move(img));
    }
    out.actual = out.pairing.size();
    if (out.actual != out.expected) {
        out.failure = "|L_{>=X}| = " + std::to_string(out.actual) + ", expected " + std::to_string(out.expected);
        return out;
    }
    if (images.size() != out.actual) {
        out.failure = "deletion of supp(X) is not injective";
        return out;
    }
    for (const auto& [a, da] : out.pairing)
        for (const auto& [b, db] : out.pairing)
            if (below(a, b) != below(da, db)) {
                out.failure = "order not preserved between " + a.str() + " and " + b.str();
                return out;
            }
    out.ok = true;
    return out;
}

/// As check_cube, for uniform L and X != 0 only.
inline CubeCheck cube_isomorphism(const CovectorSet& set, const SignVector& x) {
    if (x.is_zero()) throw PreconditionError("cube isomorphism needs X != 0");
    if (!is_uniform(set).uniform) throw PreconditionError("cube isomorphism needs a uniform oriented matroid");
    return check_cube(set, x);
}

struct BijectionCheck {
    bool ok = false;
    /// (T in C_X, T \ g in D_X)
    std::vector<std::pair<SignVector, SignVector>> pairing;
    std::string failure;
};

struct InducedShelling {
    std::vector<SignVector> order;  ///< c_i = h(d_i)
    ShellingCheck check;
    bool simplicial = false;        ///< [C_X] passed the boolean-interval test
};

enum class UpperCase { Empty, Full, Proper };

inline const char* to_string(UpperCase c) {
    switch (c) {
        case UpperCase::Empty: return "empty";
        case UpperCase::Full: return "full";
        default: return "proper";
    }
}

struct LinkDecomposition {
    Poset lower;  ///< (0, X) in L
    Poset upper;  ///< L++_{>X}
    UpperCase upper_case = UpperCase::Proper;
};

class LocalStructure {
  public:
    explicit LocalStructure(const AffineOM& m) : original_(m) {
        const auto bc = bounded_complex(m);
        if (!bc.common_support) throw PreconditionError("maximal bounded cells do not share a support");
        removed_ = ElementSet::all(m.ground().size()) - bc.support;
        affine_.emplace(removed_.empty() ? m : restrict_to_support(m, bc.support));
        bounded_ = bounded_complex(*affine_);
        contraction_ = affine_->contraction();
        topes_ = topes(affine_->om());
        contraction_topes_ = topes(contraction_);
    }

    const AffineOM& affine() const { return *affine_; }
    const BoundedComplex& bounded() const { return bounded_; }
    const CovectorSet& contraction() const { return contraction_; }
    /// Elements deleted by the full-dimensionality reduction.
    ElementSet removed() const { return removed_; }

    /// Maps a sign vector of the original ground set to the working one.
    SignVector localize(const SignVector& x) const {
        if (x.size() == affine_->ground().size()) return x;
        if (x.size() != original_.ground().size())
            throw DimensionError("sign vector " + x.str() + " does not match the ground set");
        return delete_elements(x, removed_);
    }

    /// C_X: topes T > X with T not in L++.
    std::vector<SignVector> unbounded_topes_above(const SignVector& x_in) const {
        const auto x = require_bounded(x_in);
        std::vector<SignVector> out;
        for (const auto& t : topes_)
            if (strictly_below(x, t) && !bounded_.contains(t)) out.push_back(t);
        return out;
    }

    /// D_X: topes T of L/g with T_e = X_e on supp(X \ g).
    std::vector<SignVector> contraction_topes_above(const SignVector& x_in) const {
        const auto x = require_bounded(x_in);
        const auto xg = without_g(x);
        std::vector<SignVector> out;
        for (const auto& t : contraction_topes_)
            if (below(xg, t)) out.push_back(t);
        return out;
    }

    /// h(T) = i(T) o X, where i(T) puts 0 at g.
    SignVector lift(const SignVector& t, const SignVector& x) const {
        return compose(insert_element(t, affine_->g(), Sign::Zero), x);
    }

    BijectionCheck check_bijection(const SignVector& x_in) const {
        const auto x = require_bounded(x_in);
        const auto cx = unbounded_topes_above(x);
        const auto dx = contraction_topes_above(x);
        BijectionCheck out;
        std::unordered_set<SignVector> cset(cx.begin(), cx.end()), dset(dx.begin(), dx.end());
        if (cx.size() != dx.size()) {
            out.failure = "|C_X| = " + std::to_string(cx.size()) + " but |D_X| = " + std::to_string(dx.size());
            return out;
        }
        std::unordered_set<SignVector> hit;
        for (const auto& t : cx) {
            auto r = without_g(t);
            if (!dset.count(r)) {
                out.failure = "r(" + t.str() + ") = " + r.str() + " is not in D_X";
                return out;
            }
            if (lift(r, x) != t) {
                out.failure = "h(r(" + t.str() + ")) != " + t.str();
                return out;
            }
            hit.insert(r);
            out.pairing.emplace_back(t, std::move(r));
        }
        if (hit.size() != dx.size()) {
            out.failure = "r is not injective";
            return out;
        }
        for (const auto& d : dx) {
            auto h = lift(d, x);
            if (!cset.count(h) || without_g(h) != d) {
                out.failure = "h(" + d.str() + ") = " + h.str() + " is not in C_X";
                return out;
            }
        }
        out.ok = true;
        return out;
    }

    /// D_X listed by the deterministic linear extension of T(L/g, B).
    /// B defaults to the least sign string in D_X.
    std::vector<SignVector> shelling_of_DX(const SignVector& x_in, std::optional<SignVector> base = std::nullopt) const {
        const auto dx = contraction_topes_above(x_in);
        if (dx.empty()) throw PreconditionError("D_X is empty");
        if (!base) base = *std::min_element(dx.begin(), dx.end(), sign_string_less);
        if (std::find(dx.begin(), dx.end(), *base) == dx.end())
            throw MembershipError("base " + base->str() + " is not in D_X");
        const std::unordered_set<SignVector> members(dx.begin(), dx.end());
        std::vector<SignVector> out;
        for (auto& t : linear_extension(TopePoset(*base, contraction_topes_)))
            if (members.count(t)) out.push_back(std::move(t));
        return out;
    }

    TopePoset contraction_tope_poset(const SignVector& base) const { return TopePoset(base, contraction_topes_); }

    /// [C_X] = { Y > X : Y <= T for some T in C_X }, bottom identified with X.
    Poset closed_unbounded_region(const SignVector& x_in) const {
        const auto x = require_bounded(x_in);
        const auto cx = unbounded_topes_above(x);
        std::vector<SignVector> elems;
        for (const auto& y : affine_->om()) {
            if (!strictly_below(x, y)) continue;
            if (std::any_of(cx.begin(), cx.end(), [&](const SignVector& t) { return below(y, t); })) elems.push_back(y);
        }
        std::vector<std::string> labels;
        for (const auto& y : elems) labels.push_back(y.str());
        return Poset(std::move(labels), [&](std::size_t i, std::size_t j) { return below(elems[i], elems[j]); });
    }

    /// [C_X] as a simplicial complex: vertices are the atoms of L_{>X}, one
    /// facet per tope of C_X.
    SimplicialComplex closed_unbounded_complex(const SignVector& x_in) const {
        const auto x = require_bounded(x_in);
        const auto region = closed_unbounded_region(x);
        std::vector<std::vector<std::string>> facets;
        for (auto t : region.maximal()) {
            std::vector<std::string> f;
            for (std::size_t a = 0; a < region.size(); ++a)
                if (region.rank(a) == 1 && region.leq(a, t)) f.push_back(region.label(a));
            facets.push_back(std::move(f));
        }
        return SimplicialComplex::from_labeled_facets(facets);
    }

    InducedShelling induced_shelling_of_CX(const SignVector& x_in, const std::vector<SignVector>& dx_order) const {
        const auto x = require_bounded(x_in);
        InducedShelling out;
        for (const auto& d : dx_order) out.order.push_back(lift(d, x));
        if (out.order.empty()) return out;
        const auto region = closed_unbounded_region(x);
        std::vector<std::size_t> idx;
        for (const auto& c : out.order) idx.push_back(region.index_of(c.str()));
        out.simplicial = is_simplicial(region);
        out.check = verify_shelling(region, idx);
        return out;
    }

    LinkDecomposition link_decomposition(const SignVector& x_in) const {
        const auto x = require_bounded(x_in);
        std::vector<SignVector> lower, upper;
        std::size_t above_in_l = 0;
        for (const auto& y : affine_->om()) {
            if (!y.is_zero() && strictly_below(y, x)) lower.push_back(y);
            if (strictly_below(x, y)) {
                ++above_in_l;
                if (bounded_.contains(y)) upper.push_back(y);
            }
        }
        auto make = [](const std::vector<SignVector>& v) {
            std::vector<std::string> labels;
            for (const auto& y : v) labels.push_back(y.str());
            return Poset(std::move(labels), [&](std::size_t i, std::size_t j) { return below(v[i], v[j]); });
        };
        LinkDecomposition out{make(lower), make(upper), UpperCase::Proper};
        if (upper.empty()) out.upper_case = UpperCase::Empty;
        else if (upper.size() == above_in_l) out.upper_case = UpperCase::Full;
        return out;
    }

  private:
    SignVector without_g(const SignVector& x) const { return delete_elements(x, ElementSet::of({affine_->g()})); }

    SignVector require_bounded(const SignVector& x_in) const {
        const auto x = localize(x_in);
        if (!bounded_.contains(x)) throw MembershipError(x.str() + " is not in the bounded complex");
        if (without_g(x).is_zero()) throw PreconditionError("X \\ g = 0 is excluded");
        return x;
    }

    AffineOM original_;
    std::optional<AffineOM> affine_;
    ElementSet removed_;
    BoundedComplex bounded_;
    CovectorSet contraction_;
    std::vector<SignVector> topes_;
    std::vector<SignVector> contraction_topes_;
};

}  // namespace aom
