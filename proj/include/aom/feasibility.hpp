/**
 * Exact feasibility of mixed linear systems over the rationals.
 *
 * A system is a list of constraints  a.x + c  (>, >=, =)  0  with integer
 * coefficients. Equalities are substituted out by fraction-free Gaussian
 * elimination; the remaining inequalities go through Fourier-Motzkin
 * elimination, where a combination is strict as soon as one of its parents is.
 * The system is infeasible iff some variable-free constraint is violated,
 * e.g. 0 > 0.
 */
#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <vector>

namespace aom {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Relation { Greater, GreaterEqual, Equal };

struct Constraint {
    std::vector<Integer> coeffs;
    Integer constant = 0;
    Relation rel = Relation::Greater;
};

namespace detail {

inline bool all_zero(const std::vector<Integer>& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& a) { return a == 0; });
}

/// Divides by the positive gcd of all entries; keeps the direction.
inline void normalize(Constraint& c) {
    Integer g = abs(c.constant);
    for (const auto& a : c.coeffs) g = gcd(g, abs(a));
    if (g > 1) {
        for (auto& a : c.coeffs) a /= g;
        c.constant /= g;
    }
}

/// Variable-free constraint holds?
inline bool trivially_satisfied(const Constraint& c) {
    switch (c.rel) {
        case Relation::Greater: return c.constant > 0;
        case Relation::GreaterEqual: return c.constant >= 0;
        default: return c.constant == 0;
    }
}

struct ConstraintLess {
    bool operator()(const Constraint& a, const Constraint& b) const {
        if (a.rel != b.rel) return a.rel < b.rel;
        if (a.constant != b.constant) return a.constant < b.constant;
        return a.coeffs < b.coeffs;
    }
};

}  // namespace detail

/// Decides whether some real (equivalently rational) point satisfies every constraint.
inline bool feasible(std::vector<Constraint> system) {
    using detail::all_zero;

    // Equalities first.
    while (true) {
        auto eq = std::find_if(system.begin(), system.end(), [](const Constraint& c) {
            return c.rel == Relation::Equal && !all_zero(c.coeffs);
        });
        if (eq == system.end()) break;
        Constraint pivot = *eq;
        system.erase(eq);
        std::size_t k = 0;
        while (pivot.coeffs[k] == 0) ++k;
        if (pivot.coeffs[k] < 0) {
            for (auto& a : pivot.coeffs) a = -a;
            pivot.constant = -pivot.constant;
        }
        const Integer p = pivot.coeffs[k];
        for (auto& c : system) {
            if (c.coeffs[k] == 0) continue;
            const Integer f = c.coeffs[k];
            for (std::size_t v = 0; v < c.coeffs.size(); ++v) c.coeffs[v] = p * c.coeffs[v] - f * pivot.coeffs[v];
            c.constant = p * c.constant - f * pivot.constant;
            detail::normalize(c);
        }
    }

    std::vector<Constraint> rows;
    for (auto& c : system) {
        if (all_zero(c.coeffs)) {
            if (!detail::trivially_satisfied(c)) return false;
            continue;
        }
        detail::normalize(c);
        rows.push_back(std::move(c));
    }
    if (rows.empty()) return true;
    const std::size_t nvars = rows.front().coeffs.size();

    std::vector<bool> eliminated(nvars, false);
    for (std::size_t round = 0; round < nvars; ++round) {
        // Pick the variable producing the fewest combinations.
        std::size_t best = nvars;
        std::size_t best_cost = 0;
        for (std::size_t v = 0; v < nvars; ++v) {
            if (eliminated[v]) continue;
            std::size_t pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r.coeffs[v] > 0) ++pos;
                else if (r.coeffs[v] < 0) ++neg;
            }
            const std::size_t cost = pos * neg;
            if (best == nvars || cost < best_cost) {
                best = v;
                best_cost = cost;
            }
        }
        if (best == nvars) break;
        eliminated[best] = true;

        std::vector<const Constraint*> pos, neg;
        std::set<Constraint, detail::ConstraintLess> next;
        for (const auto& r : rows) {
            if (r.coeffs[best] > 0) pos.push_back(&r);
            else if (r.coeffs[best] < 0) neg.push_back(&r);
            else next.insert(r);
        }
        for (const auto* p : pos) {
            for (const auto* q : neg) {
                const Integer a = -q->coeffs[best];
                const Integer b = p->coeffs[best];
                Constraint c;
                c.coeffs.resize(nvars);
                for (std::size_t v = 0; v < nvars; ++v) c.coeffs[v] = a * p->coeffs[v] + b * q->coeffs[v];
                c.constant = a * p->constant + b * q->constant;
                c.rel = (p->rel == Relation::Greater || q->rel == Relation::Greater) ? Relation::Greater
                                                                                       : Relation::GreaterEqual;
                if (all_zero(c.coeffs)) {
                    if (!detail::trivially_satisfied(c)) return false;
                    continue;
                }
                detail::normalize(c);
                next.insert(std::move(c));
            }
        }
        rows.assign(next.begin(), next.end());
        if (rows.empty()) return true;
    }
    for (const auto& r : rows)
        if (!detail::trivially_satisfied(r)) return false;
    return true;
}

/// Scales a rational row to integers with the same direction.
inline std::vector<Integer> clear_denominators(const std::vector<Rational>& row) {
    Integer l = 1;
    for (const auto& q : row) l = lcm(l, denominator(q));
    std::vector<Integer> out;
    out.reserve(row.size());
    for (const auto& q : row) out.push_back(numerator(q) * (l / denominator(q)));
    return out;
}

}  // namespace aom
