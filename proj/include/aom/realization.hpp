/**
 * Rational affine hyperplane arrangements and the affine oriented matroids
 * they realize.
 *
 * The arrangement {a_i . x = b_i} in R^d is homogenized to the linear forms
 * (a_i, -b_i) on R^{d+1}; the homogenizing coordinate t is appended as the
 * last form and plays the role of g. Covectors are the sign patterns of
 * points y in R^{d+1}, decided exactly.
 */
#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "aom/error.hpp"
#include "aom/feasibility.hpp"
#include "aom/oriented_matroid.hpp"
#include "aom/signvec.hpp"

namespace aom {

struct Hyperplane {
    std::string label;
    std::vector<Rational> normal;
    Rational offset;
};

/// Hyperplanes normal . x = offset in R^dim.
class Arrangement {
  public:
    /// Label reserved for the homogenizing element.
    static constexpr const char* kGLabel = "g";

    Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes) : dim_(dim), planes_(std::move(hyperplanes)) {
        if (dim_ == 0) throw ValidationError("arrangement dimension must be positive");
        for (std::size_t i = 0; i < planes_.size(); ++i) {
            const auto& h = planes_[i];
            if (h.normal.size() != dim_)
                throw ValidationError("hyperplane '" + h.label + "' has " + std::to_string(h.normal.size()) +
                                      " coefficients, expected " + std::to_string(dim_));
            if (h.label == kGLabel) throw ValidationError("label 'g' is reserved for the homogenizing element");
            if (std::all_of(h.normal.begin(), h.normal.end(), [](const Rational& a) { return a == 0; }))
                throw ValidationError("hyperplane '" + h.label + "' has a zero normal");
            for (std::size_t j = 0; j < i; ++j) {
                if (planes_[j].label == h.label) throw ValidationError("duplicate hyperplane label '" + h.label + "'");
                if (same_hyperplane(planes_[j], h))
                    throw ValidationError("hyperplanes '" + planes_[j].label + "' and '" + h.label + "' coincide");
            }
        }
    }

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return planes_.size(); }
    const std::vector<Hyperplane>& hyperplanes() const { return planes_; }

    /// Labels of the homogenized ground set: hyperplanes, then g.
    GroundSet ground_set() const {
        std::vector<std::string> labels;
        for (const auto& h : planes_) labels.push_back(h.label);
        labels.emplace_back(kGLabel);
        return GroundSet(std::move(labels), planes_.size());
    }

  private:
    static bool same_hyperplane(const Hyperplane& a, const Hyperplane& b) {
        // (a, alpha) and (b, beta) proportional?
        std::vector<Rational> u = a.normal, v = b.normal;
        u.push_back(a.offset);
        v.push_back(b.offset);
        std::optional<Rational> ratio;
        for (std::size_t i = 0; i < u.size(); ++i) {
            if ((u[i] == 0) != (v[i] == 0)) return false;
            if (u[i] == 0) continue;
            Rational r = v[i] / u[i];
            if (ratio && *ratio != r) return false;
            ratio = r;
        }
        return true;
    }

    std::size_t dim_;
    std::vector<Hyperplane> planes_;
};

/// Linear forms on d+1 variables; the last form is t = (0,...,0,1).
struct VectorConfiguration {
    std::size_t variables = 0;
    std::vector<std::vector<Integer>> forms;
    GroundSet ground;

    std::size_t size() const { return forms.size(); }
};

inline VectorConfiguration homogenize(const Arrangement& arr) {
    VectorConfiguration vc;
    vc.variables = arr.dim() + 1;
    for (const auto& h : arr.hyperplanes()) {
        std::vector<Rational> row = h.normal;
        row.push_back(-h.offset);
        vc.forms.push_back(clear_denominators(row));
    }
    std::vector<Integer> t(vc.variables, 0);
    t.back() = 1;
    vc.forms.push_back(std::move(t));
    vc.ground = arr.ground_set();
    return vc;
}

namespace detail {

inline Constraint sign_constraint(const std::vector<Integer>& form, Sign s) {
    Constraint c;
    c.coeffs = form;
    switch (s) {
        case Sign::Plus: c.rel = Relation::Greater; break;
        case Sign::Minus:
            for (auto& a : c.coeffs) a = -a;
            c.rel = Relation::Greater;
            break;
        default: c.rel = Relation::Equal;
    }
    return c;
}

}  // namespace detail

/// Is there y with sign(form_i(y)) = P_i for every i?
inline bool pattern_feasible(const VectorConfiguration& vc, const SignVector& pattern) {
    if (pattern.size() != vc.size())
        throw DimensionError("pattern of length " + std::to_string(pattern.size()) + " for " +
                             std::to_string(vc.size()) + " forms");
    std::vector<Constraint> sys;
    for (std::size_t i = 0; i < vc.size(); ++i) sys.push_back(detail::sign_constraint(vc.forms[i], pattern[i]));
    return feasible(std::move(sys));
}

struct EnumerationOptions {
    std::size_t max_forms = 12;
    bool prune_prefixes = true;
};

/// All feasible sign patterns. Patterns are explored coordinate by coordinate
/// in the order (0,+,-); with pruning, an infeasible prefix cuts its subtree.
inline CovectorSet enumerate_covectors(const VectorConfiguration& vc, EnumerationOptions opts = {}) {
    const std::size_t n = vc.size();
    if (n > opts.max_forms)
        throw ResourceError("configuration has " + std::to_string(n) + " forms; enumeration cap is " +
                            std::to_string(opts.max_forms));
    std::vector<SignVector> found;
    std::vector<Sign> prefix;
    std::vector<Constraint> sys;
    constexpr Sign kOrder[3] = {Sign::Zero, Sign::Plus, Sign::Minus};

    auto recurse = [&](auto&& self) -> void {
        const std::size_t k = prefix.size();
        if (k == n) {
            if (opts.prune_prefixes || feasible(sys)) found.emplace_back(prefix);
            return;
        }
        for (Sign s : kOrder) {
            prefix.push_back(s);
            sys.push_back(detail::sign_constraint(vc.forms[k], s));
            if (!opts.prune_prefixes || feasible(sys)) self(self);
            sys.pop_back();
            prefix.pop_back();
        }
    };
    recurse(recurse);
    return CovectorSet(vc.ground, std::move(found));
}

inline CovectorSet realize(const Arrangement& arr, EnumerationOptions opts = {}) {
    return enumerate_covectors(homogenize(arr), opts);
}

/// Normals span R^d (otherwise no face is metrically bounded).
inline bool is_essential(const Arrangement& arr) {
    std::vector<std::vector<Rational>> m;
    for (const auto& h : arr.hyperplanes()) m.push_back(h.normal);
    std::size_t rank = 0;
    const std::size_t cols = arr.dim();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank == cols;
}

/// Metric boundedness of the face of `arr` with sign vector `face` (one entry
/// per hyperplane, g excluded). The face is assumed nonempty; it is bounded iff
/// the recession cone of its closure is {0}.
inline bool face_is_bounded(const Arrangement& arr, const SignVector& face) {
    if (face.size() != arr.size())
        throw DimensionError("face pattern of length " + std::to_string(face.size()) + " for " +
                             std::to_string(arr.size()) + " hyperplanes");
    const std::size_t d = arr.dim();
    std::vector<Constraint> cone;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        Constraint c;
        c.coeffs = clear_denominators(arr.hyperplanes()[i].normal);
        switch (face[i]) {
            case Sign::Plus: c.rel = Relation::GreaterEqual; break;
            case Sign::Minus:
                for (auto& a : c.coeffs) a = -a;
                c.rel = Relation::GreaterEqual;
                break;
            default: c.rel = Relation::Equal;
        }
        cone.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < d; ++j) {
        for (int s : {1, -1}) {
            auto sys = cone;
            Constraint dir;
            dir.coeffs.assign(d, 0);
            dir.coeffs[j] = s;
            dir.rel = Relation::Greater;
            sys.push_back(std::move(dir));
            if (feasible(std::move(sys))) return false;
        }
    }
    return true;
}

/// Unique point on the hyperplanes in `zero` (a vertex of the arrangement).
/// Returns nullopt if the solution set is not a single point.
inline std::optional<std::vector<Rational>> vertex_point(const Arrangement& arr, ElementSet zero) {
    const std::size_t d = arr.dim();
    std::vector<std::vector<Rational>> m;
    for (auto i : zero.indices()) {
        if (i >= arr.size()) continue;
        auto row = arr.hyperplanes()[i].normal;
        row.push_back(arr.hyperplanes()[i].offset);
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < d && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        Rational inv = 1 / m[rank][c];
        for (auto& a : m[rank]) a *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = 0; k <= d; ++k) m[r][k] -= f * m[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t r = rank; r < m.size(); ++r)
        if (m[r][d] != 0) return std::nullopt;
    if (rank != d) return std::nullopt;
    std::vector<Rational> x(d);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = m[r][d];
    return x;
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

inline Rational parse_rational(const std::string& token, const std::string& source, std::size_t line) {
    static const std::regex kRational(R"(^([+-]?[0-9]+)(/([0-9]+))?$)");
    std::smatch m;
    if (!std::regex_match(token, m, kRational))
        throw ParseError(source, line, "'" + token + "' is not an integer or p/q rational");
    std::string num = m[1].str();
    if (num[0] == '+') num.erase(0, 1);
    Integer p(num);
    Integer q = m[3].matched ? Integer(m[3].str()) : Integer(1);
    if (q == 0) throw ParseError(source, line, "zero denominator in '" + token + "'");
    return Rational(p, q);
}

inline std::string format_rational(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// `dim d` header, then `label a1 ... ad b` per hyperplane; `#` comments.
inline Arrangement parse_arrangement(std::istream& in, const std::string& source = "<input>") {
    std::optional<std::size_t> dim;
    std::vector<Hyperplane> planes;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (!dim) {
            if (tok.size() != 2 || tok[0] != "dim") throw ParseError(source, lineno, "expected 'dim <d>' header");
            try {
                std::size_t pos = 0;
                long v = std::stol(tok[1], &pos);
                if (pos != tok[1].size() || v <= 0) throw std::invalid_argument("dim");
                dim = static_cast<std::size_t>(v);
            } catch (const std::exception&) {
                throw ParseError(source, lineno, "dimension must be a positive integer");
            }
            continue;
        }
        if (tok.size() != *dim + 2)
            throw ParseError(source, lineno,
                             "expected a label, " + std::to_string(*dim) + " coefficients and an offset");
        Hyperplane h;
        h.label = tok[0];
        for (std::size_t i = 0; i < *dim; ++i) h.normal.push_back(parse_rational(tok[1 + i], source, lineno));
        h.offset = parse_rational(tok.back(), source, lineno);
        planes.push_back(std::move(h));
        try {
            Arrangement probe(*dim, planes);
        } catch (const ValidationError& e) {
            throw ParseError(source, lineno, e.what());
        }
    }
    if (!dim) throw ParseError(source, lineno, "missing 'dim <d>' header");
    return Arrangement(*dim, std::move(planes));
}

inline std::string format_arrangement(const Arrangement& arr) {
    std::ostringstream out;
    out << "dim " << arr.dim() << "\n";
    for (const auto& h : arr.hyperplanes()) {
        out << h.label;
        for (const auto& a : h.normal) out << " " << format_rational(a);
        out << " " << format_rational(h.offset) << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Random simple arrangements
// ---------------------------------------------------------------------------

struct GenerateOptions {
    std::int64_t coefficient_bound = 9;
    std::size_t max_attempts = 1000;
};

/// Integer hyperplanes drawn from a seeded mt19937_64 and re-drawn until the
/// realized oriented matroid is uniform. The value mapping avoids
/// std::uniform_int_distribution so that output is identical across
/// standard libraries.
inline Arrangement generate_arrangement(std::uint64_t seed, std::size_t n, std::size_t d, GenerateOptions opts = {}) {
    if (d == 0) throw PreconditionError("dimension must be positive");
    if (n < d + 1) throw PreconditionError("need at least d+1 hyperplanes");
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(2 * opts.coefficient_bound + 1);
    auto draw = [&] { return static_cast<std::int64_t>(rng() % span) - opts.coefficient_bound; };
    for (std::size_t attempt = 0; attempt < opts.max_attempts; ++attempt) {
        std::vector<Hyperplane> planes;
        for (std::size_t i = 0; i < n; ++i) {
            Hyperplane h;
            h.label = "h" + std::to_string(i + 1);
            for (std::size_t j = 0; j < d; ++j) h.normal.emplace_back(draw());
            h.offset = Rational(draw());
            planes.push_back(std::move(h));
        }
        try {
            Arrangement arr(d, std::move(planes));
            if (is_uniform(realize(arr)).uniform) return arr;
        } catch (const ValidationError&) {
        }
    }
    throw ResourceError("no uniform arrangement found after " + std::to_string(opts.max_attempts) + " attempts");
}

}  // namespace aom
