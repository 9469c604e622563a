/**
 * Elementary collapses: search with bounded backtracking, and an independent
 * replay checker for the certificates it produces.
 */
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aom/error.hpp"
#include "aom/simplicial.hpp"

namespace aom {

struct CollapseStep {
    std::vector<std::string> free_face;
    std::vector<std::string> coface;
};

struct CollapseCertificate {
    std::vector<CollapseStep> steps;
    std::string terminal;
};

struct CollapseResult {
    std::optional<CollapseCertificate> certificate;  ///< nullopt means the budget ran out
    std::size_t nodes = 0;
};

/**
 * Greedy search that always removes the free pair whose free face has the
 * highest dimension, ties broken by the lexicographically least face. On a
 * dead end the search backtracks and tries the next candidate; `budget`
 * bounds the total number of collapse applications.
 */
inline CollapseResult find_collapse(const SimplicialComplex& k, std::size_t budget = 1'000'000) {
    if (k.dimension() < 0) throw PreconditionError("cannot collapse an empty complex");

    std::vector<Simplex> faces;
    std::vector<int> dim;
    for (const auto& group : k.faces_by_dimension())
        for (const auto& s : group) {
            faces.push_back(s);
            dim.push_back(static_cast<int>(s.size()) - 1);
        }
    std::map<Simplex, std::size_t> id;
    for (std::size_t i = 0; i < faces.size(); ++i) id[faces[i]] = i;
    // Ids follow (dimension, lexicographic vertex ids) order, and vertex ids
    // follow label order, so id order is the tie-break order.
    std::vector<std::vector<std::size_t>> facets_of(faces.size()), cofaces(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const auto& s = faces[i];
        if (s.size() < 2) continue;
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            Simplex r;
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != skip) r.push_back(s[j]);
            const auto f = id.at(r);
            facets_of[i].push_back(f);
            cofaces[f].push_back(i);
        }
    }

    std::vector<bool> alive(faces.size(), true);
    std::vector<std::size_t> live_cofaces(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) live_cofaces[i] = cofaces[i].size();
    std::size_t alive_count = faces.size();

    using Key = std::pair<int, std::size_t>;  // (-dim, id)
    std::set<Key> candidates;
    auto refresh = [&](std::size_t f) {
        const Key key{-dim[f], f};
        if (alive[f] && live_cofaces[f] == 1) candidates.insert(key);
        else candidates.erase(key);
    };
    for (std::size_t i = 0; i < faces.size(); ++i) refresh(i);

    auto coface_of = [&](std::size_t f) {
        for (auto c : cofaces[f])
            if (alive[c]) return c;
        return faces.size();
    };
    auto apply = [&](std::size_t sigma, std::size_t tau, int delta) {
        const bool removing = delta < 0;
        alive[sigma] = alive[tau] = !removing;
        alive_count = removing ? alive_count - 2 : alive_count + 2;
        for (auto f : facets_of[tau]) live_cofaces[f] = removing ? live_cofaces[f] - 1 : live_cofaces[f] + 1;
        for (auto f : facets_of[sigma]) live_cofaces[f] = removing ? live_cofaces[f] - 1 : live_cofaces[f] + 1;
        refresh(sigma);
        refresh(tau);
        for (auto f : facets_of[tau]) refresh(f);
        for (auto f : facets_of[sigma]) refresh(f);
    };

    CollapseResult result;
    struct Frame {
        std::size_t choice;
        std::size_t sigma, tau;
    };
    std::vector<Frame> stack;
    std::size_t next_choice = 0;
    while (true) {
        if (alive_count == 1) break;
        if (next_choice < candidates.size() && result.nodes < budget) {
            auto it = std::next(candidates.begin(), static_cast<std::ptrdiff_t>(next_choice));
            const auto sigma = it->second;
            const auto tau = coface_of(sigma);
            apply(sigma, tau, -1);
            stack.push_back({next_choice, sigma, tau});
            ++result.nodes;
            next_choice = 0;
            continue;
        }
        if (stack.empty() || result.nodes >= budget) return result;
        const auto last = stack.back();
        stack.pop_back();
        apply(last.sigma, last.tau, +1);
        next_choice = last.choice + 1;
    }

    CollapseCertificate cert;
    for (const auto& f : stack) cert.steps.push_back({k.names(faces[f.sigma]), k.names(faces[f.tau])});
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (alive[i]) cert.terminal = k.label(faces[i].front());
    result.certificate = std::move(cert);
    return result;
}

struct ReplayResult {
    bool ok = false;
    std::size_t failed_step = 0;
    std::string message;
};

/// Replays a certificate on the full face set of `k`, checking at every step
/// that the free face lies in exactly one other face, the given coface.
inline ReplayResult replay_collapse(const SimplicialComplex& k, const CollapseCertificate& cert) {
    std::set<std::vector<std::string>> live;
    for (const auto& group : k.faces_by_dimension())
        for (const auto& s : group) {
            auto names = k.names(s);
            std::sort(names.begin(), names.end());
            live.insert(std::move(names));
        }
    auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto sigma = sorted(cert.steps[i].free_face);
        const auto tau = sorted(cert.steps[i].coface);
        if (!live.count(sigma) || !live.count(tau))
            return {false, i, "step " + std::to_string(i) + ": face not present"};
        std::size_t containing = 0;
        bool tau_contains = false;
        for (const auto& f : live) {
            if (f.size() <= sigma.size() || !std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) continue;
            ++containing;
            if (f == tau) tau_contains = true;
        }
        if (containing != 1 || !tau_contains)
            return {false, i, "step " + std::to_string(i) + ": free face lies in " + std::to_string(containing) + " faces"};
        live.erase(sigma);
        live.erase(tau);
    }
    if (live.size() != 1 || live.begin()->size() != 1)
        return {false, cert.steps.size(), std::to_string(live.size()) + " faces remain after the last step"};
    if (live.begin()->front() != cert.terminal)
        return {false, cert.steps.size(), "terminal vertex mismatch"};
    return {true, cert.steps.size(), "ok"};
}

}  // namespace aom
