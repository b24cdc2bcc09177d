#pragma once

/**
 * @file dfa.hpp
 * @brief Complete DFAs, epsilon-NFAs, and the generic algorithms on them:
 *        word transformations, subset construction, minimization, and the
 *        canonical form used for isomorphism checks.
 *
 * Canonical numbering is breadth-first from the initial state, scanning
 * letters in the declared alphabet order. Every golden output in the test
 * suite depends on this numbering.
 */

#include <suffree/error.hpp>
#include <suffree/state_set.hpp>
#include <suffree/transformation.hpp>

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace suffree {

using Alphabet = std::vector<char>;

namespace detail {

inline void check_alphabet(const Alphabet& alphabet) {
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        char c = alphabet[i];
        if (c == '\0' || c == '-' || c == ',' || c == ' ')
            throw InvalidInput(std::string("invalid letter symbol '") + c + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (alphabet[j] == c) throw InvalidInput(std::string("duplicate letter '") + c + "' in alphabet");
    }
}

inline std::optional<std::size_t> index_of(const Alphabet& alphabet, char c) {
    auto it = std::find(alphabet.begin(), alphabet.end(), c);
    if (it == alphabet.end()) return std::nullopt;
    return static_cast<std::size_t>(it - alphabet.begin());
}

inline bool same_letters(Alphabet a, Alphabet b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

struct StateVectorHash {
    std::size_t operator()(const std::vector<State>& v) const noexcept {
        std::size_t h = v.size();
        for (State q : v) h ^= q + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

}  // namespace detail

/// Complete deterministic automaton (Q_n, Sigma, delta, initial, F).
class Dfa {
public:
    Dfa(std::size_t states, Alphabet alphabet, std::vector<Transformation> delta, State initial,
        std::vector<State> finals)
        : states_(states),
          alphabet_(std::move(alphabet)),
          delta_(std::move(delta)),
          initial_(initial),
          finals_(std::move(finals)) {
        if (states_ == 0) throw InvalidInput("a Dfa needs at least one state");
        detail::check_alphabet(alphabet_);
        if (delta_.size() != alphabet_.size())
            throw InvalidInput("delta must define exactly one transformation per letter");
        for (const auto& t : delta_)
            if (t.degree() != states_) throw InvalidInput("letter transformation degree differs from state count");
        if (initial_ >= states_) throw InvalidInput("initial state out of range");
        std::sort(finals_.begin(), finals_.end());
        finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());
        accepting_.assign(states_, false);
        for (State f : finals_) {
            if (f >= states_) throw InvalidInput("final state " + std::to_string(f) + " out of range");
            accepting_[f] = true;
        }
    }

    /// Convenience: the state count is taken from the transformations.
    Dfa(Alphabet alphabet, std::vector<Transformation> delta, State initial, std::vector<State> finals)
        : Dfa(delta.empty() ? 1 : delta.front().degree(), std::move(alphabet), std::move(delta), initial,
              std::move(finals)) {}

    std::size_t states() const noexcept { return states_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    State initial() const noexcept { return initial_; }
    const std::vector<State>& finals() const noexcept { return finals_; }
    bool is_final(State q) const { return accepting_.at(q); }

    std::optional<std::size_t> find_letter(char c) const { return detail::index_of(alphabet_, c); }
    std::size_t letter_index(char c) const {
        auto i = find_letter(c);
        if (!i) throw InvalidInput(std::string("unknown letter '") + c + "'");
        return *i;
    }

    const Transformation& delta(char c) const { return delta_[letter_index(c)]; }
    const Transformation& delta_at(std::size_t i) const { return delta_.at(i); }
    const std::vector<Transformation>& transformations() const noexcept { return delta_; }

    State step(State q, char c) const { return delta(c)[q]; }
    State run(State q, std::string_view word) const {
        for (char c : word) q = step(q, c);
        return q;
    }
    bool accepts(std::string_view word) const { return is_final(run(initial_, word)); }

    friend bool operator==(const Dfa& a, const Dfa& b) {
        return a.states_ == b.states_ && a.alphabet_ == b.alphabet_ && a.delta_ == b.delta_ &&
               a.initial_ == b.initial_ && a.finals_ == b.finals_;
    }

private:
    std::size_t states_;
    Alphabet alphabet_;
    std::vector<Transformation> delta_;
    State initial_;
    std::vector<State> finals_;
    std::vector<bool> accepting_;
};

/// Nondeterministic automaton with optional empty-word transitions.
class Nfa {
public:
    static constexpr char epsilon = '\0';

    struct Transition {
        State from;
        char letter;  ///< epsilon for an empty-word transition
        State to;
        friend bool operator==(const Transition&, const Transition&) = default;
    };

    Nfa(std::size_t states, Alphabet alphabet) : states_(states), alphabet_(std::move(alphabet)) {
        detail::check_alphabet(alphabet_);
    }

    std::size_t states() const noexcept { return states_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Transition>& transitions() const noexcept { return transitions_; }
    const std::vector<State>& initials() const noexcept { return initials_; }
    const std::vector<State>& finals() const noexcept { return finals_; }

    Nfa& add_transition(State from, char letter, State to) {
        check(from);
        check(to);
        if (letter != epsilon && !detail::index_of(alphabet_, letter))
            throw InvalidInput(std::string("unknown letter '") + letter + "'");
        transitions_.push_back({from, letter, to});
        return *this;
    }
    Nfa& add_epsilon(State from, State to) { return add_transition(from, epsilon, to); }
    Nfa& add_initial(State q) {
        check(q);
        initials_.push_back(q);
        return *this;
    }
    Nfa& add_final(State q) {
        check(q);
        finals_.push_back(q);
        return *this;
    }

    /// The NFA that trivially wraps a Dfa.
    static Nfa from_dfa(const Dfa& d) {
        Nfa n(d.states(), d.alphabet());
        for (std::size_t i = 0; i < d.alphabet().size(); ++i)
            for (State q = 0; q < d.states(); ++q) n.add_transition(q, d.alphabet()[i], d.delta_at(i)[q]);
        n.add_initial(d.initial());
        for (State f : d.finals()) n.add_final(f);
        return n;
    }

private:
    void check(State q) const {
        if (q >= states_) throw InvalidInput("NFA state " + std::to_string(q) + " out of range");
    }

    std::size_t states_;
    Alphabet alphabet_;
    std::vector<Transition> transitions_;
    std::vector<State> initials_;
    std::vector<State> finals_;
};

/// delta(a1) * ... * delta(ak); the empty word has no semigroup element.
inline Transformation word_transformation(const Dfa& d, std::string_view word) {
    if (word.empty()) throw InvalidInput("the empty word induces no semigroup element");
    Transformation t = d.delta(word.front());
    for (char c : word.substr(1)) t = compose(t, d.delta(c));
    return t;
}

/// Reachable subset construction. Epsilon-closure is applied to the initial
/// set and after every letter step; the empty subset stays as a sink.
inline Dfa determinize(const Nfa& nfa, const Budget& budget = {}) {
    const std::size_t n = nfa.states();
    const std::size_t k = nfa.alphabet().size();
    std::vector<std::vector<std::vector<State>>> succ(k, std::vector<std::vector<State>>(n));
    std::vector<std::vector<State>> eps(n);
    for (const auto& tr : nfa.transitions()) {
        if (tr.letter == Nfa::epsilon)
            eps[tr.from].push_back(tr.to);
        else
            succ[*detail::index_of(nfa.alphabet(), tr.letter)][tr.from].push_back(tr.to);
    }
    StateSet finals(n, nfa.finals());

    auto closure = [&](StateSet s) {
        std::vector<State> stack = s.members();
        while (!stack.empty()) {
            State q = stack.back();
            stack.pop_back();
            for (State r : eps[q]) {
                if (!s.contains(r)) {
                    s.insert(r);
                    stack.push_back(r);
                }
            }
        }
        return s;
    };

    std::unordered_map<StateSet, State, StateSetHash> index;
    std::vector<StateSet> subsets;
    std::vector<std::vector<State>> table(k);
    auto intern = [&](StateSet s) -> State {
        auto [it, inserted] = index.try_emplace(s, static_cast<State>(subsets.size()));
        if (inserted) {
            if (subsets.size() >= budget.max_states)
                throw BudgetExceeded("subset construction exceeded " + std::to_string(budget.max_states) + " states");
            subsets.push_back(std::move(s));
        }
        return it->second;
    };

    intern(closure(StateSet(n, nfa.initials())));
    for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
        for (std::size_t a = 0; a < k; ++a) {
            StateSet next(n);
            subsets[cur].for_each([&](State q) {
                for (State r : succ[a][q]) next.insert(r);
            });
            State id = intern(closure(std::move(next)));
            table[a].push_back(id);
        }
    }

    const std::size_t m = subsets.size();
    std::vector<Transformation> delta;
    delta.reserve(k);
    for (auto& row : table) delta.emplace_back(std::move(row));
    std::vector<State> fin;
    for (State i = 0; i < m; ++i)
        if (subsets[i].intersects(finals)) fin.push_back(i);
    return Dfa(m, nfa.alphabet(), std::move(delta), 0, std::move(fin));
}

/// States reachable from the initial state, in canonical BFS order.
inline std::vector<State> reachable_states(const Dfa& d) {
    std::vector<State> order{d.initial()};
    std::vector<bool> seen(d.states(), false);
    seen[d.initial()] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& t : d.transformations()) {
            State r = t[order[i]];
            if (!seen[r]) {
                seen[r] = true;
                order.push_back(r);
            }
        }
    }
    return order;
}

/// Restrict to reachable states and renumber them in BFS order.
inline Dfa canonical(const Dfa& d) {
    auto order = reachable_states(d);
    std::vector<State> rank(d.states(), 0);
    for (State i = 0; i < order.size(); ++i) rank[order[i]] = i;
    std::vector<Transformation> delta;
    for (const auto& t : d.transformations()) {
        std::vector<State> img(order.size());
        for (State i = 0; i < order.size(); ++i) img[i] = rank[t[order[i]]];
        delta.emplace_back(std::move(img));
    }
    std::vector<State> fin;
    for (State i = 0; i < order.size(); ++i)
        if (d.is_final(order[i])) fin.push_back(i);
    return Dfa(order.size(), d.alphabet(), std::move(delta), 0, std::move(fin));
}

/// Moore partition refinement over the reachable part, then canonical numbering.
inline Dfa minimize(const Dfa& input) {
    Dfa d = canonical(input);
    const std::size_t n = d.states();
    const std::size_t k = d.alphabet().size();

    std::vector<State> block(n);
    for (State q = 0; q < n; ++q) block[q] = d.is_final(q) ? 1 : 0;
    std::size_t blocks = 0;
    {
        bool any_final = !d.finals().empty(), any_nonfinal = d.finals().size() < n;
        blocks = std::size_t{any_final} + std::size_t{any_nonfinal};
        if (!any_nonfinal)
            std::fill(block.begin(), block.end(), 0);
    }

    std::vector<State> signature(k + 1);
    while (true) {
        std::unordered_map<std::vector<State>, State, detail::StateVectorHash> ids;
        std::vector<State> next(n);
        for (State q = 0; q < n; ++q) {
            signature[0] = block[q];
            for (std::size_t a = 0; a < k; ++a) signature[a + 1] = block[d.delta_at(a)[q]];
            auto [it, _] = ids.try_emplace(signature, static_cast<State>(ids.size()));
            next[q] = it->second;
        }
        block.swap(next);
        if (ids.size() == blocks) break;
        blocks = ids.size();
    }

    std::vector<Transformation> delta;
    for (std::size_t a = 0; a < k; ++a) {
        std::vector<State> img(blocks);
        for (State q = 0; q < n; ++q) img[block[q]] = block[d.delta_at(a)[q]];
        delta.emplace_back(std::move(img));
    }
    std::vector<State> fin;
    for (State f : d.finals()) fin.push_back(block[f]);
    return canonical(Dfa(blocks, d.alphabet(), std::move(delta), block[d.initial()], std::move(fin)));
}

inline std::size_t quotient_complexity(const Dfa& d) { return minimize(d).states(); }

/// True iff all states are reachable and pairwise inequivalent.
inline bool is_minimal(const Dfa& d) { return quotient_complexity(d) == d.states(); }

/// Same letters in a (possibly) different order: permute d's letters to `order`.
inline Dfa reorder_alphabet(const Dfa& d, const Alphabet& order) {
    if (!detail::same_letters(d.alphabet(), order)) throw InvalidInput("alphabets differ");
    std::vector<Transformation> delta;
    for (char c : order) delta.push_back(d.delta(c));
    return Dfa(d.states(), order, std::move(delta), d.initial(), d.finals());
}

/// Isomorphism of minimal DFAs (language equivalence); letters matched by name.
inline bool is_isomorphic(const Dfa& a, const Dfa& b) {
    if (!detail::same_letters(a.alphabet(), b.alphabet())) return false;
    return minimize(a) == minimize(reorder_alphabet(b, a.alphabet()));
}

/// Renumber the states of d by a permutation: state q becomes perm[q].
inline Dfa renumber(const Dfa& d, const std::vector<State>& perm) {
    if (perm.size() != d.states()) throw InvalidInput("permutation size differs from state count");
    std::vector<bool> hit(perm.size(), false);
    for (State p : perm) {
        if (p >= perm.size() || hit[p]) throw InvalidInput("not a permutation");
        hit[p] = true;
    }
    std::vector<Transformation> delta;
    for (const auto& t : d.transformations()) {
        std::vector<State> img(d.states());
        for (State q = 0; q < d.states(); ++q) img[perm[q]] = perm[t[q]];
        delta.emplace_back(std::move(img));
    }
    std::vector<State> fin;
    for (State f : d.finals()) fin.push_back(perm[f]);
    return Dfa(d.states(), d.alphabet(), std::move(delta), perm[d.initial()], std::move(fin));
}

/// States whose language is empty (no final state reachable from them).
inline std::vector<State> empty_states(const Dfa& d) {
    std::vector<std::vector<State>> pred(d.states());
    for (const auto& t : d.transformations())
        for (State q = 0; q < d.states(); ++q) pred[t[q]].push_back(q);
    std::vector<bool> live(d.states(), false);
    std::vector<State> stack(d.finals().begin(), d.finals().end());
    for (State f : stack) live[f] = true;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (State p : pred[q])
            if (!live[p]) {
                live[p] = true;
                stack.push_back(p);
            }
    }
    std::vector<State> out;
    for (State q = 0; q < d.states(); ++q)
        if (!live[q]) out.push_back(q);
    return out;
}

inline bool accepts_nothing(const Dfa& d) {
    auto e = empty_states(d);
    return std::find(e.begin(), e.end(), d.initial()) != e.end();
}

/// Minimal DFA renumbered so that the empty state, if any, is the last state.
/// Class predicates on transformations assume initial 0 and sink n-1.
inline Dfa minimize_sink_last(const Dfa& d) {
    Dfa m = minimize(d);
    auto e = empty_states(m);
    if (e.empty() || e.front() == m.states() - 1) return m;
    std::vector<State> perm(m.states());
    State sink = e.front();
    for (State q = 0; q < m.states(); ++q) perm[q] = q < sink ? q : (q == sink ? m.states() - 1 : q - 1);
    return renumber(m, perm);
}

}  // namespace suffree
