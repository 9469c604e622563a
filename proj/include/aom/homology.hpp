/**
 * Integral simplicial homology via Smith normal form of boundary matrices.
 */
#pragma once

#include <map>
#include <set>
#include <vector>

#include "aom/feasibility.hpp"
#include "aom/simplicial.hpp"

namespace aom {

/// Sparse integer matrix, rows stored as ordered maps column -> value.
struct SparseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::map<std::size_t, Integer>> entries;

    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r) {}
};

namespace detail {

/// Dense Smith normal form; returns the nonzero invariant factors.
inline std::vector<Integer> dense_invariant_factors(std::vector<std::vector<Integer>> a) {
    std::vector<Integer> out;
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : 0;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            // Smallest nonzero entry in the trailing block becomes the pivot.
            std::size_t pr = m, pc = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (pr == m || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == m) return out;
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        out.push_back(abs(a[t][t]));
    }
    return out;
}

}  // namespace detail

/// Nonzero invariant factors (with multiplicity) of an integer matrix.
/// Unit pivots are eliminated sparsely; whatever is left is finished densely.
inline std::vector<Integer> invariant_factors(SparseMatrix m) {
    std::vector<Integer> factors;
    std::vector<std::set<std::size_t>> col_rows(m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (const auto& [c, v] : m.entries[r]) col_rows[c].insert(r);
    std::vector<bool> row_alive(m.rows, true);

    while (true) {
        std::size_t pr = m.rows, pc = m.cols, best = 0;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (!row_alive[r]) continue;
            for (const auto& [c, v] : m.entries[r]) {
                if (v != 1 && v != -1) continue;
                const std::size_t cost = (m.entries[r].size() - 1) * (col_rows[c].size() - 1);
                if (pr == m.rows || cost < best) {
                    pr = r;
                    pc = c;
                    best = cost;
                }
                if (best == 0) break;
            }
            if (pr != m.rows && best == 0) break;
        }
        if (pr == m.rows) break;

        const Integer pivot = m.entries[pr].at(pc);
        const auto pivot_row = m.entries[pr];
        std::vector<std::size_t> targets(col_rows[pc].begin(), col_rows[pc].end());
        for (auto r : targets) {
            if (r == pr) continue;
            auto& row = m.entries[r];
            const Integer f = row.at(pc) * pivot;
            for (const auto& [c, v] : pivot_row) {
                auto it = row.find(c);
                Integer nv = (it == row.end() ? Integer(0) : it->second) - f * v;
                if (nv == 0) {
                    if (it != row.end()) row.erase(it);
                    col_rows[c].erase(r);
                } else {
                    row[c] = nv;
                    col_rows[c].insert(r);
                }
            }
        }
        for (const auto& [c, v] : pivot_row) col_rows[c].erase(pr);
        m.entries[pr].clear();
        row_alive[pr] = false;
        factors.emplace_back(1);
    }

    std::vector<std::size_t> rows, cols;
    std::map<std::size_t, std::size_t> col_pos;
    for (std::size_t r = 0; r < m.rows; ++r)
        if (row_alive[r] && !m.entries[r].empty()) {
            rows.push_back(r);
            for (const auto& [c, v] : m.entries[r])
                if (!col_pos.count(c)) col_pos[c] = 0;
        }
    if (!rows.empty()) {
        std::size_t k = 0;
        for (auto& [c, pos] : col_pos) pos = k++;
        std::vector<std::vector<Integer>> dense(rows.size(), std::vector<Integer>(col_pos.size(), 0));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto& [c, v] : m.entries[rows[i]]) dense[i][col_pos.at(c)] = v;
        for (auto& f : detail::dense_invariant_factors(std::move(dense))) factors.push_back(std::move(f));
    }
    return factors;
}

/// Unreduced integral homology H_0 .. H_dim.
struct HomologyTable {
    std::vector<std::size_t> betti;
    std::vector<std::vector<Integer>> torsion;
    bool reduced = false;

    std::size_t dimension_count() const { return betti.size(); }
    bool torsion_free() const {
        for (const auto& t : torsion)
            if (!t.empty()) return false;
        return true;
    }
    /// H_0 = Z, nothing else.
    bool is_point_like() const {
        if (betti.empty() || betti[0] != 1 || !torsion_free()) return false;
        for (std::size_t i = 1; i < betti.size(); ++i)
            if (betti[i] != 0) return false;
        return true;
    }
    /// Homology of the d-sphere (d >= 0); a 0-sphere has H_0 = Z^2.
    bool is_sphere_like(int d) const {
        if (d < 0 || betti.size() != static_cast<std::size_t>(d) + 1 || !torsion_free()) return false;
        if (d == 0) return betti[0] == 2;
        for (std::size_t i = 0; i < betti.size(); ++i) {
            std::size_t want = (i == 0 || i == static_cast<std::size_t>(d)) ? 1 : 0;
            if (betti[i] != want) return false;
        }
        return true;
    }
    long euler_characteristic() const {
        long chi = 0, sign = 1;
        for (auto b : betti) {
            chi += sign * static_cast<long>(b);
            sign = -sign;
        }
        return chi;
    }
};

/// Boundary map from k-faces to (k-1)-faces with the usual alternating signs.
inline SparseMatrix boundary_matrix(const std::vector<Simplex>& lower, const std::vector<Simplex>& upper) {
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
    SparseMatrix m(lower.size(), upper.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
        const auto& s = upper[j];
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            Simplex face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != skip) face.push_back(s[i]);
            m.entries[index.at(face)][j] = (skip % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

inline HomologyTable homology(const SimplicialComplex& k) {
    HomologyTable h;
    const auto faces = k.faces_by_dimension();
    const std::size_t top = faces.size();
    if (top == 0) return h;
    std::vector<std::size_t> rank(top + 1, 0);
    std::vector<std::vector<Integer>> factors(top + 1);
    for (std::size_t d = 1; d < top; ++d) {
        auto f = invariant_factors(boundary_matrix(faces[d - 1], faces[d]));
        rank[d] = f.size();
        factors[d] = std::move(f);
    }
    h.betti.resize(top);
    h.torsion.resize(top);
    for (std::size_t d = 0; d < top; ++d) {
        h.betti[d] = faces[d].size() - rank[d] - rank[d + 1];
        for (const auto& f : factors[d + 1])
            if (f > 1) h.torsion[d].push_back(f);
    }
    return h;
}

}  // namespace aom
