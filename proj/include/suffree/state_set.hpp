#pragma once

/**
 * @file state_set.hpp
 * @brief Bit-set of automaton states.
 *
 * The capacity is chosen at construction and is unbounded in principle;
 * subsets of up to 64 states occupy a single word, which is the common case
 * for the subset constructions in this library.
 */

#include <suffree/transformation.hpp>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace suffree {

class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
    StateSet(std::size_t capacity, std::initializer_list<State> members) : StateSet(capacity) {
        for (State q : members) insert(q);
    }
    StateSet(std::size_t capacity, const std::vector<State>& members) : StateSet(capacity) {
        for (State q : members) insert(q);
    }

    static StateSet full(std::size_t capacity) {
        StateSet s(capacity);
        for (State q = 0; q < capacity; ++q) s.insert(q);
        return s;
    }

    /// Low bits of `mask` as members; capacity must not exceed 64.
    static StateSet from_mask(std::size_t capacity, std::uint64_t mask) {
        if (capacity > 64) throw InvalidInput("from_mask supports at most 64 states");
        StateSet s(capacity);
        if (capacity) s.words_[0] = capacity == 64 ? mask : (mask & ((std::uint64_t{1} << capacity) - 1));
        return s;
    }

    std::size_t capacity() const noexcept { return capacity_; }

    void insert(State q) {
        if (q >= capacity_)
            throw InvalidInput("state " + std::to_string(q) + " exceeds set capacity " + std::to_string(capacity_));
        words_[q / 64] |= std::uint64_t{1} << (q % 64);
    }
    void erase(State q) {
        if (q < capacity_) words_[q / 64] &= ~(std::uint64_t{1} << (q % 64));
    }
    bool contains(State q) const noexcept {
        return q < capacity_ && ((words_[q / 64] >> (q % 64)) & 1U);
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool intersects(const StateSet& o) const noexcept {
        for (std::size_t i = 0; i < std::min(words_.size(), o.words_.size()); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const StateSet& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
            if (words_[i] & ~other) return false;
        }
        return true;
    }

    StateSet& operator|=(const StateSet& o) {
        for (std::size_t i = 0; i < std::min(words_.size(), o.words_.size()); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// Complement within the capacity.
    StateSet complement() const {
        StateSet s = full(capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] &= ~words_[i];
        return s;
    }

    /// Image under a transformation of the same degree.
    StateSet image(const Transformation& t) const {
        StateSet s(capacity_);
        for_each([&](State q) { s.insert(t[q]); });
        return s;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<State>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

    std::vector<State> members() const {
        std::vector<State> out;
        for_each([&](State q) { out.push_back(q); });
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](State q) {
            if (!first) s += ',';
            first = false;
            s += std::to_string(q);
        });
        return s + "}";
    }

    std::size_t hash() const noexcept {
        std::size_t h = capacity_;
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    friend bool operator==(const StateSet&, const StateSet&) = default;
    friend auto operator<=>(const StateSet&, const StateSet&) = default;

private:
    std::size_t capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

struct StateSetHash {
    std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

}  // namespace suffree
