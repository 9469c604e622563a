/**
 * Finite posets with an explicit order matrix.
 */
#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "aom/error.hpp"

namespace aom {

class Poset {
  public:
    Poset() = default;

    /// `leq(i, j)` must be a partial order on 0..labels.size()-1.
    Poset(std::vector<std::string> labels, const std::function<bool(std::size_t, std::size_t)>& leq)
        : labels_(std::move(labels)), n_(labels_.size()), leq_(n_ * n_, 0) {
        for (std::size_t i = 0; i < n_; ++i) {
            if (!index_.emplace(labels_[i], i).second) throw DomainError("duplicate poset label '" + labels_[i] + "'");
            for (std::size_t j = 0; j < n_; ++j) leq_[i * n_ + j] = (i == j || leq(i, j)) ? 1 : 0;
        }
        compute_covers_and_ranks();
    }

    std::size_t size() const { return n_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t index_of(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw DomainError("unknown poset element '" + label + "'");
        return it->second;
    }

    bool leq(std::size_t i, std::size_t j) const { return leq_[i * n_ + j] != 0; }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
    bool covers(std::size_t lo, std::size_t hi) const {
        const auto& up = upper_covers_[lo];
        return std::find(up.begin(), up.end(), hi) != up.end();
    }
    const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_covers_[i]; }

    /// Length of a longest chain ending at i, counting i; minimal elements have rank 1.
    std::size_t rank(std::size_t i) const { return rank_[i]; }

    std::vector<std::size_t> minimal() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (rank_[i] == 1) out.push_back(i);
        return out;
    }
    std::vector<std::size_t> maximal() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (upper_covers_[i].empty()) out.push_back(i);
        return out;
    }

    std::vector<std::size_t> strictly_below(std::size_t x) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (less(i, x)) out.push_back(i);
        return out;
    }
    std::vector<std::size_t> strictly_above(std::size_t x) const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (less(x, i)) out.push_back(i);
        return out;
    }

    Poset induced(const std::vector<std::size_t>& keep) const {
        std::vector<std::string> labels;
        for (auto k : keep) labels.push_back(labels_.at(k));
        return Poset(std::move(labels), [&](std::size_t a, std::size_t b) { return leq(keep[a], keep[b]); });
    }

  private:
    void compute_covers_and_ranks() {
        upper_covers_.assign(n_, {});
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (!less(i, j)) continue;
                bool direct = true;
                for (std::size_t k = 0; k < n_ && direct; ++k)
                    if (less(i, k) && less(k, j)) direct = false;
                if (direct) upper_covers_[i].push_back(j);
            }
        // Longest-chain ranks by a topological pass on the number of elements below.
        std::vector<std::size_t> order(n_);
        std::vector<std::size_t> below(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            order[i] = i;
            for (std::size_t j = 0; j < n_; ++j)
                if (less(j, i)) ++below[i];
        }
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
        rank_.assign(n_, 1);
        for (auto i : order)
            for (auto j : upper_covers_[i]) rank_[j] = std::max(rank_[j], rank_[i] + 1);
    }

    std::vector<std::string> labels_;
    std::size_t n_ = 0;
    std::vector<char> leq_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> upper_covers_;
    std::vector<std::size_t> rank_;
};

}  // namespace aom
