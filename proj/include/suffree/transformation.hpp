#pragma once

/**
 * @file transformation.hpp
 * @brief Total self-maps of the state set {0,...,n-1}.
 *
 * Composition follows the left-to-right convention used for transition
 * semigroups: q(s * t) = (qs)t, so the transformation of a word a1...ak is
 * delta(a1) * ... * delta(ak).
 */

#include <suffree/error.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace suffree {

using State = std::uint32_t;

class Transformation {
public:
    Transformation() = default;

    explicit Transformation(std::vector<State> image) : image_(std::move(image)) {
        if (image_.empty()) throw InvalidInput("transformation degree must be at least 1");
        for (State q : image_) {
            if (q >= image_.size())
                throw InvalidInput("image entry " + std::to_string(q) + " out of range for degree " +
                                   std::to_string(image_.size()));
        }
    }

    Transformation(std::initializer_list<State> image) : Transformation(std::vector<State>(image)) {}

    static Transformation identity(std::size_t n) {
        std::vector<State> img(n);
        std::iota(img.begin(), img.end(), State{0});
        return Transformation(std::move(img));
    }

    static Transformation constant(std::size_t n, State target) {
        return Transformation(std::vector<State>(n, target));
    }

    std::size_t degree() const noexcept { return image_.size(); }
    State operator()(State q) const { return image_[q]; }
    State operator[](State q) const { return image_[q]; }
    std::span<const State> image() const noexcept { return image_; }

    /// rng(t) as a sorted list of distinct states.
    std::vector<State> range() const {
        std::vector<bool> hit(degree(), false);
        for (State q : image_) hit[q] = true;
        std::vector<State> out;
        for (State q = 0; q < degree(); ++q)
            if (hit[q]) out.push_back(q);
        return out;
    }

    bool is_identity() const noexcept {
        for (State q = 0; q < degree(); ++q)
            if (image_[q] != q) return false;
        return true;
    }

    /// Bracket notation [q0,...,q_{n-1}].
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < image_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(image_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Transformation&, const Transformation&) = default;
    friend auto operator<=>(const Transformation&, const Transformation&) = default;

    // Builders for the cycle notation. Each returns a modified copy so that
    // notations compose left to right: id.cycle({1,2,3}).send(0, n-1).

    /// (q0,...,q_{k-1}); a one-element list is the identity on that state.
    Transformation cycle(std::initializer_list<State> states) const {
        return cycle(std::vector<State>(states));
    }
    Transformation cycle(const std::vector<State>& states) const {
        Transformation out = *this;
        for (std::size_t i = 0; i < states.size(); ++i) {
            check(states[i]);
            out.image_[states[i]] = states[(i + 1) % states.size()];
        }
        return out;
    }

    /// (p -> q)
    Transformation send(State p, State q) const {
        check(p);
        check(q);
        Transformation out = *this;
        out.image_[p] = q;
        return out;
    }

    /// (P -> q)
    Transformation send_all(const std::vector<State>& ps, State q) const {
        Transformation out = *this;
        for (State p : ps) out = out.send(p, q);
        return out;
    }

private:
    void check(State q) const {
        if (q >= degree())
            throw InvalidInput("state " + std::to_string(q) + " out of range for degree " +
                               std::to_string(degree()));
    }

    std::vector<State> image_;
};

/// q(s * t) = (qs)t
inline Transformation compose(const Transformation& s, const Transformation& t) {
    if (s.degree() != t.degree())
        throw InvalidInput("cannot compose transformations of degree " + std::to_string(s.degree()) +
                           " and " + std::to_string(t.degree()));
    std::vector<State> img(s.degree());
    for (State q = 0; q < s.degree(); ++q) img[q] = t[s[q]];
    return Transformation(std::move(img));
}

inline Transformation operator*(const Transformation& s, const Transformation& t) { return compose(s, t); }

/// t^k for k >= 1.
inline Transformation power(const Transformation& t, std::size_t k) {
    if (k == 0) throw InvalidInput("power exponent must be at least 1");
    Transformation r = t;
    for (std::size_t i = 1; i < k; ++i) r = compose(r, t);
    return r;
}

struct TransformationHash {
    std::size_t operator()(const Transformation& t) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (State q : t.image()) {
            h ^= q + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

}  // namespace suffree
