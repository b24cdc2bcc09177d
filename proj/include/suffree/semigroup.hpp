#pragma once

/**
 * @file semigroup.hpp
 * @brief Transformation semigroups: closure, the suffix-free classes
 *        Bsf(n) ⊇ Vsf(n), Wsf(n), 0-paths, colliding and focused pairs.
 *
 * Throughout, state 0 is the initial state and n-1 the empty (sink) state;
 * the "middle" states are 1..n-2.
 */

#include <suffree/dfa.hpp>
#include <suffree/error.hpp>
#include <suffree/transformation.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace suffree {

struct NamedTransformation {
    std::string name;
    Transformation t;
};

/// A finite composition-closed set of transformations. Elements are kept
/// sorted lexicographically by image.
class TransitionSemigroup {
public:
    TransitionSemigroup(std::size_t degree, std::vector<Transformation> elements,
                        std::vector<NamedTransformation> generators = {})
        : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        for (const auto& t : elements_)
            if (t.degree() != degree_) throw InvalidInput("element degree differs from semigroup degree");
    }

    std::size_t degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    const std::vector<Transformation>& elements() const noexcept { return elements_; }
    const std::vector<NamedTransformation>& generators() const noexcept { return generators_; }

    bool contains(const Transformation& t) const {
        return std::binary_search(elements_.begin(), elements_.end(), t);
    }

    /// Exhaustive check of s*t ∈ S; returns the first failing pair.
    std::optional<std::pair<Transformation, Transformation>> closure_violation() const {
        for (const auto& s : elements_)
            for (const auto& t : elements_)
                if (!contains(compose(s, t))) return std::make_pair(s, t);
        return std::nullopt;
    }

    friend bool operator==(const TransitionSemigroup& a, const TransitionSemigroup& b) {
        return a.degree_ == b.degree_ && a.elements_ == b.elements_;
    }

private:
    std::size_t degree_;
    std::vector<Transformation> elements_;
    std::vector<NamedTransformation> generators_;
};

/// Smallest composition-closed set containing the generators. BFS over the
/// right Cayley graph; generators are expanded in the given order.
inline TransitionSemigroup generate(std::size_t degree, const std::vector<NamedTransformation>& generators,
                                    const Budget& budget = {}) {
    for (const auto& g : generators)
        if (g.t.degree() != degree)
            throw InvalidInput("generator " + g.name + " has degree " + std::to_string(g.t.degree()) +
                               ", expected " + std::to_string(degree));
    std::unordered_set<Transformation, TransformationHash> seen;
    std::vector<Transformation> order;
    auto add = [&](Transformation t) {
        if (seen.insert(t).second) {
            if (order.size() >= budget.max_elements)
                throw BudgetExceeded("semigroup closure exceeded " + std::to_string(budget.max_elements) +
                                     " elements");
            order.push_back(std::move(t));
        }
    };
    for (const auto& g : generators) add(g.t);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& g : generators) add(compose(order[i], g.t));
    return TransitionSemigroup(degree, std::move(order), generators);
}

inline TransitionSemigroup generate(std::size_t degree, const std::vector<Transformation>& generators,
                                    const Budget& budget = {}) {
    std::vector<NamedTransformation> named;
    for (std::size_t i = 0; i < generators.size(); ++i) named.push_back({"g" + std::to_string(i + 1), generators[i]});
    return generate(degree, named, budget);
}

/// Transition semigroup of a minimal DFA. A minimal input keeps its own
/// numbering; otherwise minimize_sink_last(d) is used.
inline TransitionSemigroup transition_semigroup(const Dfa& d, const Budget& budget = {}) {
    const Dfa m = is_minimal(d) ? d : minimize_sink_last(d);
    std::vector<NamedTransformation> gens;
    for (std::size_t i = 0; i < m.alphabet().size(); ++i)
        gens.push_back({std::string(1, m.alphabet()[i]), m.delta_at(i)});
    return generate(m.states(), gens, budget);
}

struct ZeroPath {
    std::vector<State> path;  ///< 0, 0t, 0t^2, ... up to the first repetition (exclusive)
    std::size_t period = 1;
    bool aperiodic() const noexcept { return period == 1; }
    State last() const { return path.back(); }
};

inline ZeroPath zero_path(const Transformation& t) {
    ZeroPath z;
    std::vector<std::size_t> pos(t.degree(), SIZE_MAX);
    State q = 0;
    while (pos[q] == SIZE_MAX) {
        pos[q] = z.path.size();
        z.path.push_back(q);
        q = t[q];
    }
    z.period = z.path.size() - pos[q];
    return z;
}

/// Bsf membership with the "for all j >= 1" condition checked for
/// j = 1..max_power (default n; the 0-path stabilizes within n steps).
inline bool in_bsf(const Transformation& t, std::size_t max_power = 0) {
    const std::size_t n = t.degree();
    if (n < 2) return false;
    const State sink = static_cast<State>(n - 1);
    if (t[sink] != sink) return false;
    for (State q = 0; q < n; ++q)
        if (t[q] == 0) return false;
    if (max_power == 0) max_power = n;
    std::vector<State> cur(n);
    for (State q = 0; q < n; ++q) cur[q] = q;
    for (std::size_t j = 1; j <= max_power; ++j) {
        for (auto& c : cur) c = t[c];
        if (cur[0] == sink) continue;
        for (State q = 1; q + 1 < n; ++q)
            if (cur[q] == cur[0]) return false;
    }
    return true;
}

/// Bsf elements that are injective except for merges into n-1.
inline bool in_vsf(const Transformation& t) {
    if (!in_bsf(t)) return false;
    const State sink = static_cast<State>(t.degree() - 1);
    std::vector<bool> hit(t.degree(), false);
    for (State q = 0; q < t.degree(); ++q) {
        State r = t[q];
        if (r == sink) continue;
        if (hit[r]) return false;
        hit[r] = true;
    }
    return true;
}

/// Bsf elements that send 0 to n-1 or send every middle state to n-1.
inline bool in_wsf(const Transformation& t) {
    if (!in_bsf(t)) return false;
    const State sink = static_cast<State>(t.degree() - 1);
    if (t[0] == sink) return true;
    for (State q = 1; q < sink; ++q)
        if (t[q] != sink) return false;
    return true;
}

enum class SemigroupClass { Bsf, Vsf, Wsf };

inline bool in_class(const Transformation& t, SemigroupClass c) {
    switch (c) {
        case SemigroupClass::Bsf: return in_bsf(t);
        case SemigroupClass::Vsf: return in_vsf(t);
        case SemigroupClass::Wsf: return in_wsf(t);
    }
    return false;
}

inline std::string class_name(SemigroupClass c) {
    switch (c) {
        case SemigroupClass::Bsf: return "BSF";
        case SemigroupClass::Vsf: return "VSF";
        case SemigroupClass::Wsf: return "WSF";
    }
    return "?";
}

inline SemigroupClass parse_class(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "bsf") return SemigroupClass::Bsf;
    if (s == "vsf") return SemigroupClass::Vsf;
    if (s == "wsf") return SemigroupClass::Wsf;
    throw InvalidInput("unknown semigroup class '" + s + "' (expected bsf, vsf or wsf)");
}

inline bool is_subsemigroup_of(const TransitionSemigroup& s, SemigroupClass c) {
    return std::all_of(s.elements().begin(), s.elements().end(), [&](const auto& t) { return in_class(t, c); });
}

/// Unordered pair {p,q} of distinct middle states, stored with p < q.
struct StatePair {
    State p;
    State q;
    StatePair(State a, State b) : p(std::min(a, b)), q(std::max(a, b)) {
        if (a == b) throw InvalidInput("a state pair needs two distinct states");
    }
    friend auto operator<=>(const StatePair&, const StatePair&) = default;
};

inline std::set<StatePair> all_middle_pairs(std::size_t n) {
    std::set<StatePair> out;
    for (State p = 1; p + 1 < n; ++p)
        for (State q = p + 1; q + 1 < n; ++q) out.emplace(p, q);
    return out;
}

/// {p,q} with some t: 0t = p and rt = q for a middle state r.
inline std::set<StatePair> colliding_pairs(const TransitionSemigroup& s) {
    std::set<StatePair> out;
    const std::size_t n = s.degree();
    if (n < 3) return out;
    const State sink = static_cast<State>(n - 1);
    for (const auto& t : s.elements()) {
        State p = t[0];
        if (p == 0 || p == sink) continue;
        for (State r = 1; r < sink; ++r) {
            State q = t[r];
            if (q != 0 && q != sink && q != p) out.emplace(p, q);
        }
    }
    return out;
}

/// {p,q} mapped by some u to a common state outside {0, n-1}.
inline std::set<StatePair> focused_pairs(const TransitionSemigroup& s) {
    std::set<StatePair> out;
    const std::size_t n = s.degree();
    if (n < 4) return out;
    const State sink = static_cast<State>(n - 1);
    for (const auto& u : s.elements())
        for (State p = 1; p < sink; ++p)
            for (State q = p + 1; q < sink; ++q)
                if (u[p] == u[q] && u[p] != 0 && u[p] != sink) out.emplace(p, q);
    return out;
}

// ---------------------------------------------------------------------------
// Named generating sets.

/// Msf(n): a = (0->n-1)(1,...,n-2), b = (0->n-1)(1,2), c_p = (p->n-1)(0->p).
/// For n = 4, a and b coincide and b is omitted.
inline std::vector<NamedTransformation> msf_generators(std::size_t n) {
    if (n < 2) throw InvalidInput("Msf(n) needs n >= 2");
    const State sink = static_cast<State>(n - 1);
    const auto id = Transformation::identity(n);
    if (n == 2) return {{"c1", id.send(0, 1)}};
    std::vector<State> middle;
    for (State q = 1; q < sink; ++q) middle.push_back(q);
    std::vector<NamedTransformation> out;
    out.push_back({"a", id.send(0, sink).cycle(middle)});
    if (n >= 5) out.push_back({"b", id.send(0, sink).cycle({1, 2})});
    for (State p = 1; p < sink; ++p)
        out.push_back({"c" + std::to_string(p), id.send(p, sink).send(0, p)});
    return out;
}

/// G>=6(n): a = (0->n-1)(1,...,n-2), b = (0->n-1)(1,2), c = (0->n-1)(n-2->1),
/// d = ({0,1}->n-1), e = (Q\{0}->n-1)(0->1). Degenerations for n <= 4 as
/// stated with the set: {a,c,d,e} at 4, {a,e} at 3, {e} at 2.
inline std::vector<NamedTransformation> wsf_generators(std::size_t n) {
    if (n < 2) throw InvalidInput("G>=6(n) needs n >= 2");
    const State sink = static_cast<State>(n - 1);
    const auto id = Transformation::identity(n);
    std::vector<State> non_initial;
    for (State q = 1; q < n; ++q) non_initial.push_back(q);
    auto e = id.send_all(non_initial, sink).send(0, 1);
    if (n == 2) return {{"e", e}};
    std::vector<State> middle;
    for (State q = 1; q < sink; ++q) middle.push_back(q);
    auto a = id.send(0, sink).cycle(middle);
    if (n == 3) return {{"a", a}, {"e", e}};
    std::vector<NamedTransformation> out{{"a", a}};
    if (n >= 5) out.push_back({"b", id.send(0, sink).cycle({1, 2})});
    out.push_back({"c", id.send(0, sink).send(sink - 1, 1)});
    out.push_back({"d", id.send_all({0, 1}, sink)});
    out.push_back({"e", e});
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration of a class.

struct ClassEnumeration {
    SemigroupClass cls;
    std::size_t degree;
    std::vector<Transformation> elements;  ///< sorted
    /// Closure status: true/false when checked, nullopt when not attempted.
    std::optional<bool> closed;
    std::optional<std::pair<Transformation, Transformation>> counterexample;

    TransitionSemigroup as_semigroup() const { return TransitionSemigroup(degree, elements); }
};

struct EnumerationOptions {
    std::size_t max_degree = 8;
    /// Pairwise closure check is skipped when |S|^2 exceeds this.
    std::size_t max_closure_pairs = 200'000'000;
};

/// All degree-n transformations passing the class predicate. VSF/WSF are
/// checked for closure; for BSF the first pair (s,t) with st ∉ Bsf is reported.
inline ClassEnumeration enumerate_class(std::size_t n, SemigroupClass cls, const EnumerationOptions& opt = {}) {
    if (n < 2) throw InvalidInput("class enumeration needs n >= 2");
    if (n > opt.max_degree)
        throw BudgetExceeded("enumerating " + std::to_string(n) + "^" + std::to_string(n) +
                             " transformations exceeds the degree budget " + std::to_string(opt.max_degree));
    ClassEnumeration out{cls, n, {}, std::nullopt, std::nullopt};
    const State sink = static_cast<State>(n - 1);
    // Every class member fixes n-1 and avoids 0, so only images of 0..n-2
    // over 1..n-1 are enumerated.
    std::vector<State> img(n, 1);
    img[sink] = sink;
    while (true) {
        Transformation t(img);
        if (in_class(t, cls)) out.elements.push_back(std::move(t));
        std::size_t i = 0;
        for (; i < n - 1; ++i) {
            if (img[i] < sink) {
                ++img[i];
                break;
            }
            img[i] = 1;
        }
        if (i == n - 1) break;
    }
    std::sort(out.elements.begin(), out.elements.end());
    const auto& el = out.elements;
    if (static_cast<double>(el.size()) * static_cast<double>(el.size()) <= static_cast<double>(opt.max_closure_pairs)) {
        bool closed = true;
        std::unordered_set<Transformation, TransformationHash> members(el.begin(), el.end());
        for (std::size_t i = 0; i < el.size() && closed; ++i)
            for (std::size_t j = 0; j < el.size(); ++j) {
                auto st = compose(el[i], el[j]);
                if (!members.count(st)) {
                    closed = false;
                    out.counterexample = std::make_pair(el[i], el[j]);
                    break;
                }
            }
        out.closed = closed;
    }
    return out;
}

}  // namespace suffree
