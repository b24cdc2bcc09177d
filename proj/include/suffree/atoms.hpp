#pragma once

/**
 * @file atoms.hpp
 * @brief Atoms of a regular language: the atom DFA of a basis, atom
 *        enumeration, atom complexities, and the suffix-free bounds.
 *
 * For a minimal DFA with state languages K_0..K_{n-1} and S ⊆ Q, the atomic
 * intersection A_S is the intersection of K_i (i ∈ S) and the complements of
 * K_i (i ∉ S). An atom is a non-empty atomic intersection; S is its basis.
 */

#include <suffree/dfa.hpp>
#include <suffree/language_ops.hpp>
#include <suffree/semigroup.hpp>
#include <suffree/state_set.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace suffree {

using BigInt = boost::multiprecision::cpp_int;
using AtomBasis = StateSet;

/// (X, Y) with X ∩ Y = ∅, or the sink ⊥.
struct AtomState {
    StateSet x;
    StateSet y;
    bool sink = false;

    static AtomState bottom() { return {{}, {}, true}; }
    friend bool operator==(const AtomState&, const AtomState&) = default;
};

struct AtomStateHash {
    std::size_t operator()(const AtomState& s) const noexcept {
        return s.sink ? 0x5bd1e995u : s.x.hash() * 1000003u ^ s.y.hash();
    }
};

struct AtomAutomaton {
    std::vector<AtomState> states;  ///< reachable states, BFS order; index 0 is (S, Q\S)
    Dfa dfa;                        ///< unminimized, same numbering as `states`
};

/// Reachable part of the atom DFA for basis S: (X,Y)a = (Xa,Ya) when the
/// images are disjoint and ⊥ otherwise; finals are (X,Y) with X ⊆ F and
/// Y ∩ F = ∅.
inline AtomAutomaton atom_automaton(const Dfa& d, const AtomBasis& basis, const Budget& budget = {}) {
    const std::size_t n = d.states();
    if (basis.capacity() != n) throw InvalidInput("atom basis capacity differs from the Dfa state count");
    const std::size_t k = d.alphabet().size();
    StateSet finals(n, d.finals());

    std::unordered_map<AtomState, State, AtomStateHash> index;
    std::vector<AtomState> states;
    std::vector<std::vector<State>> table(k);
    auto intern = [&](AtomState s) {
        auto [it, inserted] = index.try_emplace(s, static_cast<State>(states.size()));
        if (inserted) {
            if (states.size() >= budget.max_states)
                throw BudgetExceeded("atom DFA exceeded " + std::to_string(budget.max_states) + " states");
            states.push_back(std::move(s));
        }
        return it->second;
    };
    intern({basis, basis.complement(), false});
    for (std::size_t cur = 0; cur < states.size(); ++cur) {
        for (std::size_t a = 0; a < k; ++a) {
            const AtomState& s = states[cur];
            AtomState next = AtomState::bottom();
            if (!s.sink) {
                StateSet xa = s.x.image(d.delta_at(a)), ya = s.y.image(d.delta_at(a));
                if (!xa.intersects(ya)) next = {std::move(xa), std::move(ya), false};
            }
            State id = intern(std::move(next));
            table[a].push_back(id);
        }
    }
    std::vector<Transformation> delta;
    for (auto& row : table) delta.emplace_back(std::move(row));
    std::vector<State> fin;
    for (State i = 0; i < states.size(); ++i) {
        const auto& s = states[i];
        if (!s.sink && s.x.is_subset_of(finals) && !s.y.intersects(finals)) fin.push_back(i);
    }
    Dfa dfa(states.size(), d.alphabet(), std::move(delta), 0, std::move(fin));
    return {std::move(states), std::move(dfa)};
}

/// Minimal DFA of the atomic intersection A_S.
inline Dfa atom_dfa(const Dfa& d, const AtomBasis& basis, const Budget& budget = {}) {
    return minimize(atom_automaton(d, basis, budget).dfa);
}

/// Non-emptiness of A_S by reachability of a final atom state.
inline bool is_atom(const Dfa& d, const AtomBasis& basis, const Budget& budget = {}) {
    return !atom_automaton(d, basis, budget).dfa.finals().empty();
}

inline bool basis_less(const AtomBasis& a, const AtomBasis& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
}

struct AtomOptions {
    std::size_t max_states = 20;  ///< exhaustive sweep over 2^n bases
};

/// All atom bases, sorted by (|S|, members). Bases containing a state with
/// empty language are skipped; for suffix-free inputs bases containing the
/// initial state together with other states are skipped as well.
inline std::vector<AtomBasis> atoms(const Dfa& d, const AtomOptions& opt = {}, const Budget& budget = {}) {
    const std::size_t n = d.states();
    if (n > opt.max_states)
        throw BudgetExceeded("atom enumeration over 2^" + std::to_string(n) + " bases exceeds the budget (n <= " +
                             std::to_string(opt.max_states) + ")");
    std::uint64_t empty_mask = 0;
    for (State q : empty_states(d)) empty_mask |= std::uint64_t{1} << q;
    const bool sf = is_suffix_free(d, budget).suffix_free;
    const std::uint64_t init_bit = std::uint64_t{1} << d.initial();

    std::vector<AtomBasis> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (mask & empty_mask) continue;
        if (sf && (mask & init_bit) && mask != init_bit) continue;
        auto basis = StateSet::from_mask(n, mask);
        if (is_atom(d, basis, budget)) out.push_back(std::move(basis));
    }
    std::sort(out.begin(), out.end(), basis_less);
    return out;
}

/// Quotient complexity of the atom A_S; rejects empty atomic intersections.
inline std::size_t atom_complexity(const Dfa& d, const AtomBasis& basis, const Budget& budget = {}) {
    auto aut = atom_automaton(d, basis, budget);
    if (aut.dfa.finals().empty())
        throw InvalidInput("basis " + basis.to_string() + " is not an atom (empty atomic intersection)");
    return quotient_complexity(aut.dfa);
}

/// |transition semigroup of the minimal DFA|
inline std::size_t syntactic_complexity(const Dfa& d, const Budget& budget = {}) {
    return transition_semigroup(minimize_sink_last(d), budget).size();
}

// ---------------------------------------------------------------------------
// Bound formulas

inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt pow2(std::size_t e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

/// Middle-basis term: 1 + Σ_{x=1}^{k} Σ_{y=0}^{n-2-k} C(n-2,x) C(n-2-x,y).
inline BigInt suffix_free_middle_atom_bound(std::size_t n, std::size_t k) {
    if (n < 4) throw InvalidInput("suffix-free atom bounds need n >= 4");
    if (k < 1 || k > n - 2) throw InvalidInput("middle basis size must be in 1..n-2");
    BigInt sum = 1;
    for (std::size_t x = 1; x <= k; ++x)
        for (std::size_t y = 0; y <= n - 2 - k; ++y) sum += binomial(n - 2, x) * binomial(n - 2 - x, y);
    return sum;
}

/// Upper bound on κ(A_S) for a suffix-free language with n >= 4 quotients
/// (initial state 0, empty state n-1): 2^{n-2}+1 for S = ∅, n for S = {0},
/// and the middle-basis sum otherwise. Other shapes are not atom bases.
inline BigInt suffix_free_atom_bound(std::size_t n, const AtomBasis& basis) {
    if (n < 4) throw InvalidInput("suffix-free atom bounds need n >= 4");
    if (basis.capacity() != n) throw InvalidInput("basis capacity differs from n");
    if (basis.empty()) return pow2(n - 2) + 1;
    if (basis.contains(0)) {
        if (basis.size() == 1) return BigInt(n);
        throw InvalidInput("not an atom basis: contains 0 together with other states");
    }
    if (basis.contains(static_cast<State>(n - 1))) throw InvalidInput("not an atom basis: contains the empty state");
    return suffix_free_middle_atom_bound(n, basis.size());
}

/// Atom complexity bound for left ideals with n quotients, used only to check
/// that its shifted form coincides with the suffix-free middle-basis bound.
/// Basis given by size: k = n means S = Q_n, k = 0 means S = ∅.
inline BigInt left_ideal_atom_bound(std::size_t n, std::size_t k) {
    if (n < 1 || k > n) throw InvalidInput("invalid left-ideal basis size");
    if (k == n) return BigInt(n);
    if (k == 0) return pow2(n - 1);
    BigInt sum = 1;
    for (std::size_t x = 1; x <= k; ++x)
        for (std::size_t y = 1; y <= n - k; ++y) sum += binomial(n - 1, x) * binomial(n - 1 - x, y - 1);
    return sum;
}

}  // namespace suffree
