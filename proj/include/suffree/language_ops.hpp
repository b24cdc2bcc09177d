#pragma once

/**
 * @file language_ops.hpp
 * @brief Regularity-preserving operations (star, product, reversal, the four
 *        boolean operations), permutational dialects, and the suffix-freeness
 *        decision procedure.
 *
 * Every operation returns a minimal DFA in canonical numbering. The *_stats
 * variants also report the number of reachable states before minimization.
 */

#include <suffree/dfa.hpp>
#include <suffree/semigroup.hpp>

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace suffree {

struct OpResult {
    Dfa dfa;                 ///< minimal, canonical
    std::size_t raw_states;  ///< reachable states before minimization
};

// ---------------------------------------------------------------------------
// Dialects

/// Partial function from a source alphabet into itself, injective where
/// defined. images[i] is the letter playing the role of source[i].
class PartialPermutation {
public:
    PartialPermutation(Alphabet source, std::vector<std::optional<char>> images)
        : source_(std::move(source)), images_(std::move(images)) {
        detail::check_alphabet(source_);
        if (images_.size() > source_.size())
            throw InvalidInput("dialect lists more letters than the alphabet has");
        images_.resize(source_.size());  // trailing undefined values may be omitted
        std::vector<char> used;
        for (const auto& img : images_) {
            if (!img) continue;
            if (!detail::index_of(source_, *img))
                throw InvalidInput(std::string("dialect letter '") + *img + "' is not in the alphabet");
            if (std::find(used.begin(), used.end(), *img) != used.end())
                throw InvalidInput(std::string("dialect is not injective: '") + *img + "' used twice");
            used.push_back(*img);
        }
    }

    static PartialPermutation identity(const Alphabet& source) {
        std::vector<std::optional<char>> imgs(source.begin(), source.end());
        return PartialPermutation(source, std::move(imgs));
    }

    /// Parse "a,b,-,d,e" ('-' = undefined) against the given source alphabet.
    static PartialPermutation parse(const std::string& text, const Alphabet& source) {
        std::vector<std::optional<char>> imgs;
        std::string tok;
        auto flush = [&] {
            auto b = tok.find_first_not_of(' ');
            auto e = tok.find_last_not_of(' ');
            std::string t = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
            if (t.size() != 1) throw InvalidInput("dialect entries must be single letters or '-': '" + t + "'");
            imgs.push_back(t == "-" ? std::nullopt : std::optional<char>(t[0]));
            tok.clear();
        };
        for (char c : text) {
            if (c == ',')
                flush();
            else
                tok += c;
        }
        flush();
        return PartialPermutation(source, std::move(imgs));
    }

    const Alphabet& source() const noexcept { return source_; }
    const std::vector<std::optional<char>>& images() const noexcept { return images_; }
    std::optional<char> operator()(char role) const {
        auto i = detail::index_of(source_, role);
        if (!i) throw InvalidInput(std::string("letter '") + role + "' not in dialect source");
        return images_[*i];
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i) s += ',';
            s += images_[i] ? *images_[i] : '-';
        }
        return s;
    }

private:
    Alphabet source_;
    std::vector<std::optional<char>> images_;
};

/// pi(a_i) carries the transformation of a_i; undefined letters are dropped.
/// No minimization is applied.
inline Dfa apply_dialect(const Dfa& d, const PartialPermutation& pi) {
    if (pi.source() != d.alphabet())
        throw InvalidInput("dialect source alphabet differs from the Dfa alphabet");
    Alphabet letters;
    std::vector<Transformation> delta;
    for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
        if (auto img = pi.images()[i]) {
            letters.push_back(*img);
            delta.push_back(d.delta_at(i));
        }
    }
    return Dfa(d.states(), std::move(letters), std::move(delta), d.initial(), d.finals());
}

// ---------------------------------------------------------------------------
// Operations

namespace detail {

inline OpResult finish(const Dfa& raw) {
    auto reach = reachable_states(raw).size();
    return {minimize(raw), reach};
}

inline void require_same_letters(const Dfa& a, const Dfa& b) {
    if (!same_letters(a.alphabet(), b.alphabet()))
        throw InvalidInput("operands must be over the same alphabet; use a dialect to align them");
}

}  // namespace detail

/// L*: a fresh final initial state s with s -ε-> q0, and q -ε-> q0 for every
/// final q. For inputs whose initial state is never re-entered this is the
/// same language as marking q0 final.
inline OpResult star_stats(const Dfa& d, const Budget& budget = {}) {
    const std::size_t n = d.states();
    Nfa nfa(n + 1, d.alphabet());
    for (std::size_t i = 0; i < d.alphabet().size(); ++i)
        for (State q = 0; q < n; ++q) nfa.add_transition(q, d.alphabet()[i], d.delta_at(i)[q]);
    const State fresh = static_cast<State>(n);
    nfa.add_initial(fresh).add_final(fresh).add_epsilon(fresh, d.initial());
    for (State f : d.finals()) {
        nfa.add_final(f);
        nfa.add_epsilon(f, d.initial());
    }
    return detail::finish(determinize(nfa, budget));
}
inline Dfa star(const Dfa& d, const Budget& budget = {}) { return star_stats(d, budget).dfa; }

/// L(d1)·L(d2): finals of d1 become non-final and get ε to d2's initial state.
inline OpResult concat_stats(const Dfa& d1, const Dfa& d2, const Budget& budget = {}) {
    detail::require_same_letters(d1, d2);
    const std::size_t m = d1.states(), n = d2.states();
    Nfa nfa(m + n, d1.alphabet());
    for (std::size_t i = 0; i < d1.alphabet().size(); ++i) {
        char c = d1.alphabet()[i];
        const auto& t1 = d1.delta_at(i);
        const auto& t2 = d2.delta(c);
        for (State q = 0; q < m; ++q) nfa.add_transition(q, c, t1[q]);
        for (State q = 0; q < n; ++q) nfa.add_transition(static_cast<State>(m + q), c, static_cast<State>(m + t2[q]));
    }
    nfa.add_initial(d1.initial());
    for (State f : d1.finals()) nfa.add_epsilon(f, static_cast<State>(m + d2.initial()));
    for (State f : d2.finals()) nfa.add_final(static_cast<State>(m + f));
    return detail::finish(determinize(nfa, budget));
}
inline Dfa concat(const Dfa& d1, const Dfa& d2, const Budget& budget = {}) {
    return concat_stats(d1, d2, budget).dfa;
}

/// L^R: reverse every transition, swap initial and final states.
inline OpResult reverse_stats(const Dfa& d, const Budget& budget = {}) {
    Nfa nfa(d.states(), d.alphabet());
    for (std::size_t i = 0; i < d.alphabet().size(); ++i)
        for (State q = 0; q < d.states(); ++q) nfa.add_transition(d.delta_at(i)[q], d.alphabet()[i], q);
    for (State f : d.finals()) nfa.add_initial(f);
    nfa.add_final(d.initial());
    return detail::finish(determinize(nfa, budget));
}
inline Dfa reverse(const Dfa& d, const Budget& budget = {}) { return reverse_stats(d, budget).dfa; }

enum class BooleanOp { Union, Intersection, Difference, SymmetricDifference };

inline bool combine(BooleanOp op, bool x, bool y) {
    switch (op) {
        case BooleanOp::Union: return x || y;
        case BooleanOp::Intersection: return x && y;
        case BooleanOp::Difference: return x && !y;
        case BooleanOp::SymmetricDifference: return x != y;
    }
    return false;
}

inline std::string op_name(BooleanOp op) {
    switch (op) {
        case BooleanOp::Union: return "union";
        case BooleanOp::Intersection: return "intersection";
        case BooleanOp::Difference: return "difference";
        case BooleanOp::SymmetricDifference: return "symmetric-difference";
    }
    return "?";
}

inline BooleanOp parse_boolean_op(const std::string& s) {
    for (auto op : {BooleanOp::Union, BooleanOp::Intersection, BooleanOp::Difference, BooleanOp::SymmetricDifference})
        if (op_name(op) == s) return op;
    throw InvalidInput("unknown boolean operation '" + s + "'");
}

/// Reachable direct product with finals chosen by `op`.
inline OpResult boolean_stats(const Dfa& d1, const Dfa& d2, BooleanOp op, const Budget& budget = {}) {
    detail::require_same_letters(d1, d2);
    const std::size_t k = d1.alphabet().size();
    std::vector<const Transformation*> t2(k);
    for (std::size_t i = 0; i < k; ++i) t2[i] = &d2.delta(d1.alphabet()[i]);

    auto key = [&](State p, State q) { return static_cast<std::uint64_t>(p) * d2.states() + q; };
    std::unordered_map<std::uint64_t, State> index;
    std::vector<std::pair<State, State>> pairs;
    std::vector<std::vector<State>> table(k);
    auto intern = [&](State p, State q) {
        auto [it, inserted] = index.try_emplace(key(p, q), static_cast<State>(pairs.size()));
        if (inserted) {
            if (pairs.size() >= budget.max_states)
                throw BudgetExceeded("direct product exceeded " + std::to_string(budget.max_states) + " states");
            pairs.emplace_back(p, q);
        }
        return it->second;
    };
    intern(d1.initial(), d2.initial());
    for (std::size_t cur = 0; cur < pairs.size(); ++cur) {
        auto [p, q] = pairs[cur];
        for (std::size_t i = 0; i < k; ++i) table[i].push_back(intern(d1.delta_at(i)[p], (*t2[i])[q]));
    }
    std::vector<Transformation> delta;
    for (auto& row : table) delta.emplace_back(std::move(row));
    std::vector<State> fin;
    for (State i = 0; i < pairs.size(); ++i)
        if (combine(op, d1.is_final(pairs[i].first), d2.is_final(pairs[i].second))) fin.push_back(i);
    Dfa raw(pairs.size(), d1.alphabet(), std::move(delta), 0, std::move(fin));
    return {minimize(raw), pairs.size()};
}
inline Dfa boolean(const Dfa& d1, const Dfa& d2, BooleanOp op, const Budget& budget = {}) {
    return boolean_stats(d1, d2, op, budget).dfa;
}

inline Dfa complement(const Dfa& d) {
    std::vector<State> fin;
    for (State q = 0; q < d.states(); ++q)
        if (!d.is_final(q)) fin.push_back(q);
    return Dfa(d.states(), d.alphabet(), d.transformations(), d.initial(), std::move(fin));
}

// ---------------------------------------------------------------------------
// Suffix-freeness

struct SuffixFreeCheck {
    bool suffix_free = false;
    /// Necessary-condition diagnostic: transition semigroup of the minimal
    /// DFA (sink renumbered last) is contained in Bsf(n).
    /// Unset when the semigroup closure exceeded the element budget.
    std::optional<bool> semigroup_in_bsf;
    /// When not suffix-free: a word u ∈ L having a proper suffix in L.
    std::optional<std::string> violation;
    std::optional<std::string> violating_suffix;
};

/// Decides L ∩ Σ⁺L = ∅. The product tracks, for a word w, the state reached
/// by w and the set of states reached by the proper suffixes of w.
inline SuffixFreeCheck is_suffix_free(const Dfa& d, const Budget& budget = {}) {
    SuffixFreeCheck out;
    const std::size_t n = d.states(), k = d.alphabet().size();
    StateSet finals(n, d.finals());

    struct Node {
        State p;
        StateSet suffixes;
        std::size_t parent;
        char letter;
    };
    struct NodeKeyHash {
        std::size_t operator()(const std::pair<State, StateSet>& x) const noexcept {
            return x.second.hash() * 31 + x.first;
        }
    };
    std::unordered_map<std::pair<State, StateSet>, std::size_t, NodeKeyHash> seen;
    std::vector<Node> nodes;
    nodes.push_back({d.initial(), StateSet(n), SIZE_MAX, '\0'});
    seen.emplace(std::make_pair(d.initial(), StateSet(n)), 0);
    std::optional<std::size_t> bad;
    for (std::size_t cur = 0; cur < nodes.size() && !bad; ++cur) {
        for (std::size_t i = 0; i < k && !bad; ++i) {
            const auto& t = d.delta_at(i);
            StateSet next = nodes[cur].suffixes.image(t);
            // proper suffixes of wx are {vx : v a proper suffix of w} ∪ {ε}
            next.insert(d.initial());
            State p = t[nodes[cur].p];
            auto [it, inserted] = seen.try_emplace(std::make_pair(p, next), nodes.size());
            if (!inserted) continue;
            if (nodes.size() >= budget.max_states)
                throw BudgetExceeded("suffix-freeness product exceeded " + std::to_string(budget.max_states) +
                                     " states");
            nodes.push_back({p, std::move(next), cur, d.alphabet()[i]});
            if (d.is_final(p) && nodes.back().suffixes.intersects(finals)) bad = nodes.size() - 1;
        }
    }
    out.suffix_free = !bad.has_value();
    if (bad) {
        std::string w;
        for (std::size_t i = *bad; nodes[i].parent != SIZE_MAX; i = nodes[i].parent) w.insert(w.begin(), nodes[i].letter);
        out.violation = w;
        for (std::size_t s = 1; s <= w.size(); ++s)
            if (d.accepts(std::string_view(w).substr(s))) {
                out.violating_suffix = w.substr(s);
                break;
            }
    }
    try {
        out.semigroup_in_bsf = is_subsemigroup_of(transition_semigroup(minimize_sink_last(d), budget), SemigroupClass::Bsf);
    } catch (const BudgetExceeded&) {
    }
    return out;
}

}  // namespace suffree
