/**
 * Covector sets: axiom verification, rank, uniformity, topes, minors and
 * tope posets.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "aom/error.hpp"
#include "aom/signvec.hpp"

namespace aom {

/// Finite set of sign vectors over one ground set. Immutable.
class CovectorSet {
  public:
    CovectorSet() = default;
    CovectorSet(GroundSet ground, std::vector<SignVector> covectors) : ground_(std::move(ground)) {
        for (const auto& x : covectors)
            if (x.size() != ground_.size())
                throw DimensionError("covector " + x.str() + " does not match a ground set of size " +
                                     std::to_string(ground_.size()));
        std::sort(covectors.begin(), covectors.end(), sign_string_less);
        covectors.erase(std::unique(covectors.begin(), covectors.end()), covectors.end());
        covectors_ = std::move(covectors);
        index_.reserve(covectors_.size());
        for (std::size_t i = 0; i < covectors_.size(); ++i) index_.emplace(covectors_[i], i);
        compute_heights();
    }

    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return covectors_.size(); }
    const std::vector<SignVector>& covectors() const { return covectors_; }
    auto begin() const { return covectors_.begin(); }
    auto end() const { return covectors_.end(); }
    const SignVector& operator[](std::size_t i) const { return covectors_[i]; }

    bool contains(const SignVector& x) const { return index_.count(x) != 0; }
    std::optional<std::size_t> index_of(const SignVector& x) const {
        auto it = index_.find(x);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Length of a longest chain 0 < X1 < ... < X (0 counts as bottom even if absent).
    std::size_t height(std::size_t i) const { return heights_.at(i); }

    /// Largest height over all covectors.
    std::size_t rank() const { return rank_; }

    bool operator==(const CovectorSet& o) const { return ground_ == o.ground_ && covectors_ == o.covectors_; }

  private:
    void compute_heights() {
        std::vector<std::size_t> order(covectors_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return covectors_[a].support().size() < covectors_[b].support().size();
        });
        heights_.assign(covectors_.size(), 0);
        rank_ = 0;
        for (std::size_t k = 0; k < order.size(); ++k) {
            const auto& x = covectors_[order[k]];
            if (x.is_zero()) continue;
            std::size_t best = 0;
            for (std::size_t m = 0; m < k; ++m) {
                const auto& y = covectors_[order[m]];
                if (!y.is_zero() && y.support().size() < x.support().size() && below(y, x))
                    best = std::max(best, heights_[order[m]]);
            }
            heights_[order[k]] = best + 1;
            rank_ = std::max(rank_, best + 1);
        }
    }

    GroundSet ground_;
    std::vector<SignVector> covectors_;
    std::unordered_map<SignVector, std::size_t> index_;
    std::vector<std::size_t> heights_;
    std::size_t rank_ = 0;
};

enum class Axiom { L0, L1, L2, L3 };

inline const char* to_string(Axiom a) {
    switch (a) {
        case Axiom::L0: return "L0";
        case Axiom::L1: return "L1";
        case Axiom::L2: return "L2";
        default: return "L3";
    }
}

/// One failing instance of a covector axiom. For L0 `x` is the missing zero
/// vector; for L1 `x` is the covector whose opposite is missing.
struct AxiomWitness {
    Axiom clause;
    SignVector x;
    std::optional<SignVector> y;
    std::optional<std::size_t> element;
};

struct AxiomReport {
    bool l0_ok = true;
    bool l1_ok = true;
    bool l2_ok = true;
    bool l3_ok = true;
    std::vector<AxiomWitness> witnesses;

    bool all_ok() const { return l0_ok && l1_ok && l2_ok && l3_ok; }
};

namespace detail {

struct MaskedKey {
    std::uint64_t plus, minus;
    bool operator==(const MaskedKey&) const = default;
};
struct MaskedKeyHash {
    std::size_t operator()(const MaskedKey& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.plus * 0x9E3779B97F4A7C15ULL ^ (k.minus + 0x632BE59BD9B4E019ULL));
    }
};

}  // namespace detail

/// Checks (L0)-(L3) exhaustively. Every failing witness is recorded.
inline AxiomReport verify_covector_axioms(const CovectorSet& set) {
    AxiomReport report;
    const std::size_t n = set.ground().size();
    const auto& vs = set.covectors();

    if (!set.contains(SignVector(n))) {
        report.l0_ok = false;
        report.witnesses.push_back({Axiom::L0, SignVector(n), std::nullopt, std::nullopt});
    }
    for (const auto& x : vs) {
        if (!set.contains(-x)) {
            report.l1_ok = false;
            report.witnesses.push_back({Axiom::L1, x, std::nullopt, std::nullopt});
        }
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (i == j) continue;
            if (!set.contains(compose(vs[i], vs[j]))) {
                report.l2_ok = false;
                report.witnesses.push_back({Axiom::L2, vs[i], vs[j], std::nullopt});
            }
        }
    }

    // L3: for the mask K = (E \ S(X,Y)) + {e}, some Z must agree with X o Y on
    // K \ {e} and vanish at e. Projections of the whole set onto K are cached.
    std::unordered_map<std::uint64_t, std::unordered_set<detail::MaskedKey, detail::MaskedKeyHash>> projections;
    auto projected = [&](std::uint64_t mask) -> const auto& {
        auto it = projections.find(mask);
        if (it != projections.end()) return it->second;
        auto& bucket = projections[mask];
        bucket.reserve(vs.size());
        for (const auto& z : vs) bucket.insert({z.plus_mask() & mask, z.minus_mask() & mask});
        return bucket;
    };
    const auto everything = ElementSet::all(n).bits();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const auto sep = separation_set(vs[i], vs[j]);
            if (sep.empty()) continue;
            const auto xy = compose(vs[i], vs[j]);
            for (auto e : sep.indices()) {
                const std::uint64_t ebit = std::uint64_t{1} << e;
                const std::uint64_t mask = (everything & ~sep.bits()) | ebit;
                const detail::MaskedKey want{xy.plus_mask() & mask & ~ebit, xy.minus_mask() & mask & ~ebit};
                if (!projected(mask).count(want)) {
                    report.l3_ok = false;
                    report.witnesses.push_back({Axiom::L3, vs[i], vs[j], e});
                }
            }
        }
    }
    return report;
}

/// Elements e with X_e = 0 for every covector.
inline ElementSet loops(const CovectorSet& set) {
    std::uint64_t used = 0;
    for (const auto& x : set) used |= x.support().bits();
    return ElementSet::all(set.ground().size()) - ElementSet(used);
}

/// Rank of X as poset height in the covector order.
inline std::size_t covector_rank(const CovectorSet& set, const SignVector& x) {
    auto idx = set.index_of(x);
    if (!idx) throw MembershipError("sign vector " + x.str() + " is not a covector");
    return set.height(*idx);
}

inline std::vector<SignVector> topes(const CovectorSet& set) {
    std::vector<SignVector> out;
    for (const auto& x : set) {
        bool maximal = true;
        for (const auto& y : set)
            if (strictly_below(x, y)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(x);
    }
    return out;
}

/// Minimal nonzero covectors.
inline std::vector<SignVector> atoms(const CovectorSet& set) {
    std::vector<SignVector> out;
    for (const auto& x : set) {
        if (x.is_zero()) continue;
        bool minimal = true;
        for (const auto& y : set)
            if (!y.is_zero() && strictly_below(y, x)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(x);
    }
    return out;
}

struct UniformityReport {
    bool uniform = false;
    bool zero_set_criterion = false;  ///< every F with |F| <= r-1 is some z(X)
    bool rank_criterion = false;      ///< rank(X) = r - |z(X)| for X != 0
    std::size_t rank = 0;
    std::optional<ElementSet> missing_zero_set;
    std::optional<SignVector> rank_witness;
};

/// Computes both uniformity criteria independently; `uniform` requires both.
inline UniformityReport is_uniform(const CovectorSet& set) {
    UniformityReport rep;
    const std::size_t n = set.ground().size();
    const std::size_t r = set.rank();
    rep.rank = r;

    std::unordered_set<std::uint64_t> zero_sets;
    for (const auto& x : set) zero_sets.insert(x.zero_set().bits());

    // Subsets of size <= r-1 in order of size, then lexicographically by
    // their sorted element lists.
    rep.zero_set_criterion = true;
    const std::size_t limit = r == 0 ? 0 : std::min(r - 1, n);
    for (std::size_t k = 0; k <= limit && rep.zero_set_criterion; ++k) {
        std::vector<std::size_t> comb(k);
        for (std::size_t i = 0; i < k; ++i) comb[i] = i;
        while (true) {
            std::uint64_t bits = 0;
            for (auto c : comb) bits |= std::uint64_t{1} << c;
            if (!zero_sets.count(bits)) {
                rep.zero_set_criterion = false;
                rep.missing_zero_set = ElementSet(bits);
                break;
            }
            std::size_t i = k;
            while (i > 0 && comb[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }

    rep.rank_criterion = true;
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto& x = set[i];
        if (x.is_zero()) continue;
        const auto z = x.zero_set().size();
        if (z > r || set.height(i) != r - z) {
            rep.rank_criterion = false;
            rep.rank_witness = x;
            break;
        }
    }
    rep.uniform = rep.zero_set_criterion && rep.rank_criterion;
    return rep;
}

/// Deletion L \ A = { X restricted to E \ A : X in L }.
inline CovectorSet delete_minor(const CovectorSet& set, ElementSet removed) {
    auto ground = set.ground().without(removed);
    std::vector<SignVector> out;
    out.reserve(set.size());
    for (const auto& x : set) out.push_back(delete_elements(x, removed));
    return CovectorSet(std::move(ground), std::move(out));
}

/// Contraction L / A = { X restricted to E \ A : X in L, X_A = 0 }.
inline CovectorSet contract(const CovectorSet& set, ElementSet removed) {
    auto ground = set.ground().without(removed);
    std::vector<SignVector> out;
    for (const auto& x : set)
        if ((x.support() & removed).empty()) out.push_back(delete_elements(x, removed));
    return CovectorSet(std::move(ground), std::move(out));
}

/// Topes ordered by inclusion of separation sets from a base tope.
class TopePoset {
  public:
    TopePoset(SignVector base, std::vector<SignVector> topes) : base_(std::move(base)), topes_(std::move(topes)) {
        sep_.reserve(topes_.size());
        for (const auto& t : topes_) sep_.push_back(separation_set(base_, t));
        for (std::size_t i = 0; i < topes_.size(); ++i)
            for (std::size_t j = 0; j < topes_.size(); ++j)
                if (i != j && leq(i, j)) pairs_.emplace_back(i, j);
    }

    const SignVector& base() const { return base_; }
    const std::vector<SignVector>& topes() const { return topes_; }
    std::size_t size() const { return topes_.size(); }
    ElementSet separation(std::size_t i) const { return sep_.at(i); }
    bool leq(std::size_t i, std::size_t j) const { return sep_[i].subset_of(sep_[j]); }
    /// Strictly comparable pairs (i, j) with T_i < T_j.
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }

    std::optional<std::size_t> index_of(const SignVector& t) const {
        auto it = std::find(topes_.begin(), topes_.end(), t);
        if (it == topes_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - topes_.begin());
    }

  private:
    SignVector base_;
    std::vector<SignVector> topes_;
    std::vector<ElementSet> sep_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

inline TopePoset tope_poset(const CovectorSet& set, const SignVector& base) {
    auto ts = topes(set);
    if (std::find(ts.begin(), ts.end(), base) == ts.end())
        throw MembershipError("base " + base.str() + " is not a tope");
    return TopePoset(base, std::move(ts));
}

namespace detail {

/// (|S(B,T)|, sorted S(B,T), sign string)
inline bool extension_key_less(const TopePoset& p, std::size_t a, std::size_t b) {
    const auto sa = p.separation(a), sb = p.separation(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    const auto ia = sa.indices(), ib = sb.indices();
    if (ia != ib) return ia < ib;
    return sign_string_less(p.topes()[a], p.topes()[b]);
}

}  // namespace detail

/// Deterministic linear extension of a tope poset.
inline std::vector<SignVector> linear_extension(const TopePoset& poset) {
    std::vector<std::size_t> order(poset.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return detail::extension_key_less(poset, a, b); });
    std::vector<SignVector> out;
    out.reserve(order.size());
    for (auto i : order) out.push_back(poset.topes()[i]);
    return out;
}

/// Uniformly picks among the currently minimal topes at every step.
inline std::vector<SignVector> random_linear_extension(const TopePoset& poset, std::mt19937_64& rng) {
    const std::size_t n = poset.size();
    std::vector<std::size_t> pending_below(n, 0);
    for (auto [i, j] : poset.pairs()) ++pending_below[j];
    std::vector<bool> used(n, false);
    std::vector<SignVector> out;
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<std::size_t> ready;
        for (std::size_t i = 0; i < n; ++i)
            if (!used[i] && pending_below[i] == 0) ready.push_back(i);
        const auto pick = ready[rng() % ready.size()];
        used[pick] = true;
        out.push_back(poset.topes()[pick]);
        for (std::size_t j = 0; j < n; ++j)
            if (j != pick && !used[j] && poset.leq(pick, j)) --pending_below[j];
    }
    return out;
}

/// True iff `subset` is closed downward in the tope poset.
inline bool is_order_ideal(const TopePoset& poset, const std::vector<SignVector>& subset) {
    std::unordered_set<SignVector> members(subset.begin(), subset.end());
    for (auto [i, j] : poset.pairs())
        if (members.count(poset.topes()[j]) && !members.count(poset.topes()[i])) return false;
    return true;
}

inline bool is_linear_extension(const TopePoset& poset, const std::vector<SignVector>& seq) {
    if (seq.size() != poset.size()) return false;
    std::unordered_map<SignVector, std::size_t> pos;
    for (std::size_t k = 0; k < seq.size(); ++k)
        if (!poset.index_of(seq[k]) || !pos.emplace(seq[k], k).second) return false;
    for (auto [i, j] : poset.pairs())
        if (pos.at(poset.topes()[i]) > pos.at(poset.topes()[j])) return false;
    return true;
}

/// The closed interval [lo, hi] of the tope poset, in poset order.
inline std::vector<std::size_t> tope_interval(const TopePoset& poset, std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < poset.size(); ++k)
        if (poset.leq(lo, k) && poset.leq(k, hi)) out.push_back(k);
    return out;
}

}  // namespace aom
