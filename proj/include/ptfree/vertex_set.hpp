#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#include "errors.hpp"

namespace ptfree {

/// Fixed-universe bit set over vertex ids 0..universe-1.
///
/// All binary operations require both operands to share the same universe.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}
    VertexSet(std::size_t universe, std::initializer_list<VertexId> members) : VertexSet(universe) {
        for (VertexId v : members) insert(v);
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    template <typename Range>
    static VertexSet from(std::size_t universe, const Range& members) {
        VertexSet s(universe);
        for (auto v : members) s.insert(static_cast<VertexId>(v));
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(VertexId v) const noexcept {
        return v < universe_ && ((words_[v / word_bits] >> (v % word_bits)) & 1U) != 0;
    }
    void insert(VertexId v) noexcept {
        assert(v < universe_);
        words_[v / word_bits] |= Word{1} << (v % word_bits);
    }
    void erase(VertexId v) noexcept {
        assert(v < universe_);
        words_[v / word_bits] &= ~(Word{1} << (v % word_bits));
    }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }

    bool intersects(const VertexSet& o) const noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & o.words_[i]) != 0) return true;
        }
        return false;
    }
    bool is_subset_of(const VertexSet& o) const noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        }
        return true;
    }

    /// Smallest member, or universe() when empty.
    VertexId first() const noexcept { return next(0); }

    /// Smallest member >= from, or universe() when there is none.
    VertexId next(VertexId from) const noexcept {
        std::size_t wi = from / word_bits;
        if (wi >= words_.size()) return static_cast<VertexId>(universe_);
        Word w = words_[wi] & (~Word{0} << (from % word_bits));
        while (true) {
            if (w != 0) {
                return static_cast<VertexId>(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
            }
            if (++wi >= words_.size()) return static_cast<VertexId>(universe_);
            w = words_[wi];
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            Word w = words_[wi];
            while (w != 0) {
                fn(static_cast<VertexId>(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        out.reserve(size());
        for_each([&](VertexId v) { out.push_back(v); });
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) noexcept {
        assert(universe_ == o.universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::size_t hash() const noexcept {
        std::size_t h = universe_;
        for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() noexcept {
        if (universe_ % word_bits != 0 && !words_.empty()) {
            words_.back() &= (Word{1} << (universe_ % word_bits)) - 1;
        }
    }

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace ptfree
