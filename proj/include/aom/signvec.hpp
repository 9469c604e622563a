/**
 * Sign vectors over an ordered ground set.
 *
 * A SignVector stores its entries as two bitmasks (positive and negative
 * coordinates). Ground sets are limited to 64 elements, which is far above
 * anything the enumeration and topology layers can handle anyway.
 */
#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aom/error.hpp"

namespace aom {

enum class Sign : std::int8_t { Zero = 0, Plus = 1, Minus = -1 };

inline char to_char(Sign s) {
    switch (s) {
        case Sign::Plus: return '+';
        case Sign::Minus: return '-';
        default: return '0';
    }
}

inline Sign opposite(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

/// Subset of ground-set positions.
class ElementSet {
  public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

    static ElementSet of(std::initializer_list<std::size_t> positions) {
        ElementSet s;
        for (auto p : positions) s.bits_ |= std::uint64_t{1} << p;
        return s;
    }
    static constexpr ElementSet all(std::size_t n) {
        return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1U) != 0; }
    constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        return out;
    }

    constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
    constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
    constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const ElementSet&) const = default;

  private:
    std::uint64_t bits_ = 0;
};

/// Ordered ground set E with an optional distinguished element g.
class GroundSet {
  public:
    static constexpr std::size_t kMaxSize = 64;

    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> labels, std::optional<std::size_t> g_index = std::nullopt)
        : labels_(std::move(labels)), g_(g_index) {
        if (labels_.size() > kMaxSize)
            throw DomainError("ground sets larger than 64 elements are not supported");
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i].empty()) throw DomainError("empty element label");
            if (!index_.emplace(labels_[i], i).second)
                throw DomainError("duplicate element label '" + labels_[i] + "'");
        }
        if (g_ && *g_ >= labels_.size()) throw DomainError("distinguished element index out of range");
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::optional<std::size_t> g_index() const { return g_; }

    std::size_t index_of(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) throw DomainError("unknown element '" + std::string(label) + "'");
        return it->second;
    }

    GroundSet with_g(std::optional<std::size_t> g) const { return GroundSet(labels_, g); }

    /// The ground set E \ A, keeping g if it survives.
    GroundSet without(ElementSet removed) const {
        if (!removed.subset_of(ElementSet::all(size()))) throw DomainError("element subset outside the ground set");
        std::vector<std::string> kept;
        std::optional<std::size_t> g;
        for (std::size_t i = 0; i < size(); ++i) {
            if (removed.contains(i)) continue;
            if (g_ && *g_ == i) g = kept.size();
            kept.push_back(labels_[i]);
        }
        return GroundSet(std::move(kept), g);
    }

    std::string describe(ElementSet s) const {
        std::string out = "{";
        bool first = true;
        for (auto i : s.indices()) {
            if (!first) out += ",";
            out += labels_.at(i);
            first = false;
        }
        return out + "}";
    }

    bool operator==(const GroundSet& o) const { return labels_ == o.labels_ && g_ == o.g_; }

  private:
    std::vector<std::string> labels_;
    std::optional<std::size_t> g_;
    std::unordered_map<std::string, std::size_t> index_;
};

class SignVector {
  public:
    SignVector() = default;
    explicit SignVector(std::size_t n) : size_(check_size(n)) {}
    SignVector(std::initializer_list<Sign> signs) : size_(check_size(signs.size())) {
        std::size_t i = 0;
        for (Sign s : signs) assign(i++, s);
    }
    explicit SignVector(const std::vector<Sign>& signs) : size_(check_size(signs.size())) {
        for (std::size_t i = 0; i < signs.size(); ++i) assign(i, signs[i]);
    }
    static SignVector from_masks(std::size_t n, std::uint64_t plus, std::uint64_t minus) {
        SignVector v(n);
        auto m = ElementSet::all(n).bits();
        v.plus_ = plus & m;
        v.minus_ = minus & m & ~v.plus_;
        return v;
    }

    /// Parses `[+\-0]+`; `expected` of 0 accepts any length.
    static SignVector parse(std::string_view text, std::size_t expected = 0) {
        if (text.empty()) throw DomainError("empty sign string");
        if (expected != 0 && text.size() != expected)
            throw DimensionError("sign string '" + std::string(text) + "' has length " + std::to_string(text.size()) +
                                 ", expected " + std::to_string(expected));
        SignVector v(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            switch (text[i]) {
                case '+': v.plus_ |= bit(i); break;
                case '-': v.minus_ |= bit(i); break;
                case '0': break;
                default: throw DomainError("invalid sign character '" + std::string(1, text[i]) + "' in '" + std::string(text) + "'");
            }
        }
        return v;
    }

    std::size_t size() const { return size_; }
    Sign operator[](std::size_t i) const {
        if ((plus_ >> i) & 1U) return Sign::Plus;
        if ((minus_ >> i) & 1U) return Sign::Minus;
        return Sign::Zero;
    }
    Sign at(std::size_t i) const {
        if (i >= size_) throw DomainError("sign vector index " + std::to_string(i) + " out of range");
        return (*this)[i];
    }

    SignVector with(std::size_t i, Sign s) const {
        if (i >= size_) throw DomainError("sign vector index " + std::to_string(i) + " out of range");
        SignVector v = *this;
        v.assign(i, s);
        return v;
    }

    std::uint64_t plus_mask() const { return plus_; }
    std::uint64_t minus_mask() const { return minus_; }
    ElementSet support() const { return ElementSet(plus_ | minus_); }
    ElementSet zero_set() const { return ElementSet::all(size_) - support(); }
    bool is_zero() const { return (plus_ | minus_) == 0; }

    SignVector operator-() const { return from_masks(size_, minus_, plus_); }

    std::string str() const {
        std::string s(size_, '0');
        for (std::size_t i = 0; i < size_; ++i) s[i] = to_char((*this)[i]);
        return s;
    }

    bool operator==(const SignVector&) const = default;
    /// Container order only; use sign_string_less for the textual order.
    bool operator<(const SignVector& o) const {
        if (size_ != o.size_) return size_ < o.size_;
        if (plus_ != o.plus_) return plus_ < o.plus_;
        return minus_ < o.minus_;
    }

  private:
    static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }
    static std::uint32_t check_size(std::size_t n) {
        if (n > GroundSet::kMaxSize) throw DomainError("sign vectors longer than 64 entries are not supported");
        return static_cast<std::uint32_t>(n);
    }
    void assign(std::size_t i, Sign s) {
        plus_ &= ~bit(i);
        minus_ &= ~bit(i);
        if (s == Sign::Plus) plus_ |= bit(i);
        if (s == Sign::Minus) minus_ |= bit(i);
    }

    std::uint64_t plus_ = 0;
    std::uint64_t minus_ = 0;
    std::uint32_t size_ = 0;
};

/// ASCII order of the display strings ('+' < '-' < '0').
inline bool sign_string_less(const SignVector& a, const SignVector& b) { return a.str() < b.str(); }

namespace detail {
inline void require_same_size(const SignVector& x, const SignVector& y) {
    if (x.size() != y.size())
        throw DimensionError("sign vectors of length " + std::to_string(x.size()) + " and " + std::to_string(y.size()));
}
}  // namespace detail

/// (X o Y)_e = X_e if X_e != 0, else Y_e.
inline SignVector compose(const SignVector& x, const SignVector& y) {
    detail::require_same_size(x, y);
    const auto free = ~(x.plus_mask() | x.minus_mask());
    return SignVector::from_masks(x.size(), x.plus_mask() | (y.plus_mask() & free),
                                  x.minus_mask() | (y.minus_mask() & free));
}

inline ElementSet separation_set(const SignVector& x, const SignVector& y) {
    detail::require_same_size(x, y);
    return ElementSet((x.plus_mask() & y.minus_mask()) | (x.minus_mask() & y.plus_mask()));
}

inline bool conformal(const SignVector& x, const SignVector& y) { return separation_set(x, y).empty(); }

/// Y <= X iff Y_e in {0, X_e} for every e.
inline bool below(const SignVector& y, const SignVector& x) {
    detail::require_same_size(x, y);
    return (y.plus_mask() & ~x.plus_mask()) == 0 && (y.minus_mask() & ~x.minus_mask()) == 0;
}

inline bool strictly_below(const SignVector& y, const SignVector& x) { return y != x && below(y, x); }

/// Drops the coordinates in `removed`, keeping the remaining ones in order.
inline SignVector delete_elements(const SignVector& x, ElementSet removed) {
    if (!removed.subset_of(ElementSet::all(x.size()))) throw DomainError("element subset outside the ground set");
    std::uint64_t plus = 0, minus = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (removed.contains(i)) continue;
        if (x[i] == Sign::Plus) plus |= std::uint64_t{1} << j;
        if (x[i] == Sign::Minus) minus |= std::uint64_t{1} << j;
        ++j;
    }
    return SignVector::from_masks(j, plus, minus);
}

/// Inverse of delete_elements for a single position: inserts `s` at `pos`.
inline SignVector insert_element(const SignVector& x, std::size_t pos, Sign s) {
    if (pos > x.size()) throw DomainError("insert position out of range");
    std::vector<Sign> signs;
    signs.reserve(x.size() + 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i == pos) signs.push_back(s);
        signs.push_back(x[i]);
    }
    if (pos == x.size()) signs.push_back(s);
    return SignVector(signs);
}

}  // namespace aom

template <>
struct std::hash<aom::SignVector> {
    std::size_t operator()(const aom::SignVector& v) const noexcept {
        std::uint64_t h = v.plus_mask() * 0x9E3779B97F4A7C15ULL;
        h ^= v.minus_mask() + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ v.size());
    }
};
