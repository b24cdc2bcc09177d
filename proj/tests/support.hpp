#pragma once

// Random automata and brute-force oracles shared by the test suites. The
// oracles deliberately avoid the library's algorithms.

#include <suffree/suffree.hpp>

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing_support {

using namespace suffree;

inline Dfa random_dfa(std::mt19937& rng, std::size_t n, std::size_t letters, double final_p = 0.4) {
    Alphabet alpha;
    for (std::size_t i = 0; i < letters; ++i) alpha.push_back(static_cast<char>('a' + i));
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    std::bernoulli_distribution fin(final_p);
    std::vector<Transformation> delta;
    for (std::size_t i = 0; i < letters; ++i) {
        std::vector<State> img(n);
        for (auto& v : img) v = pick(rng);
        delta.emplace_back(std::move(img));
    }
    std::vector<State> finals;
    for (State q = 0; q < n; ++q)
        if (fin(rng)) finals.push_back(q);
    return Dfa(n, alpha, std::move(delta), 0, finals);
}

inline Transformation random_transformation(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    std::vector<State> img(n);
    for (auto& v : img) v = pick(rng);
    return Transformation(img);
}

/// All words over `alpha` of length <= max_len, shortest first.
inline std::vector<std::string> words_up_to(const Alphabet& alpha, std::size_t max_len) {
    std::vector<std::string> out{""};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (char c : alpha) out.push_back(out[i] + c);
        begin = end;
    }
    return out;
}

/// Step a word through per-letter images directly.
inline State step_word(const Dfa& d, State q, const std::string& w) {
    for (char c : w) {
        std::size_t i = 0;
        while (d.alphabet()[i] != c) ++i;
        q = d.transformations()[i].image()[q];
    }
    return q;
}

inline bool in_lang(const Dfa& d, const std::string& w) { return d.is_final(step_word(d, d.initial(), w)); }

/// Number of Myhill-Nerode classes of reachable states by the classical
/// table-filling algorithm.
inline std::size_t brute_force_quotients(const Dfa& d) {
    const std::size_t n = d.states();
    std::vector<bool> reach(n, false);
    std::vector<State> stack{d.initial()};
    reach[d.initial()] = true;
    while (!stack.empty()) {
        State q = stack.back();
        stack.pop_back();
        for (const auto& t : d.transformations())
            if (!reach[t[q]]) {
                reach[t[q]] = true;
                stack.push_back(t[q]);
            }
    }
    std::vector<std::vector<bool>> dist(n, std::vector<bool>(n, false));
    for (State p = 0; p < n; ++p)
        for (State q = 0; q < n; ++q) dist[p][q] = d.is_final(p) != d.is_final(q);
    bool changed = true;
    while (changed) {
        changed = false;
        for (State p = 0; p < n; ++p)
            for (State q = 0; q < n; ++q)
                if (!dist[p][q])
                    for (const auto& t : d.transformations())
                        if (dist[t[p]][t[q]]) {
                            dist[p][q] = true;
                            changed = true;
                            break;
                        }
    }
    std::vector<State> reps;
    for (State q = 0; q < n; ++q) {
        if (!reach[q]) continue;
        bool fresh = true;
        for (State r : reps)
            if (!dist[q][r]) fresh = false;
        if (fresh) reps.push_back(q);
    }
    return reps.size();
}

/// Atom bases by BFS over the sets {q : qw ∈ F}, w ranging over all words.
inline std::set<std::uint64_t> brute_force_atom_masks(const Dfa& d) {
    const std::size_t n = d.states();
    std::uint64_t start = 0;
    for (State f : d.finals()) start |= std::uint64_t{1} << f;
    std::set<std::uint64_t> seen{start};
    std::vector<std::uint64_t> todo{start};
    while (!todo.empty()) {
        auto s = todo.back();
        todo.pop_back();
        for (const auto& t : d.transformations()) {
            std::uint64_t pre = 0;
            for (State q = 0; q < n; ++q)
                if ((s >> t[q]) & 1U) pre |= std::uint64_t{1} << q;
            if (seen.insert(pre).second) todo.push_back(pre);
        }
    }
    return seen;
}

/// Same Dfa with a different initial state.
inline Dfa from_state(const Dfa& d, State q) {
    return Dfa(d.states(), d.alphabet(), d.transformations(), q, d.finals());
}

}  // namespace testing_support
