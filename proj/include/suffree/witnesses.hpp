#pragma once

/**
 * @file witnesses.hpp
 * @brief Witness DFA families for suffix-free languages, in their original
 *        state numbering (no minimization, no canonicalization).
 */

#include <suffree/dfa.hpp>
#include <suffree/language_ops.hpp>
#include <suffree/semigroup.hpp>

#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace suffree {

namespace detail {

inline std::vector<State> state_range(State lo, State hi) {
    std::vector<State> v;
    for (State q = lo; q <= hi; ++q) v.push_back(q);
    return v;
}

}  // namespace detail

/// Ternary witness for star, product and boolean operations (n >= 6):
///   a: (0 -> n-1)(1,2,3)(4,...,n-2)
///   b: (2 -> n-1)(1 -> 2)(0 -> 1)(3,4)
///   c: (0 -> n-1)(1,...,n-2)
/// initial 0, finals {1}.
inline Dfa d5(std::size_t n) {
    if (n < 6) throw InvalidInput("d5 is defined for n >= 6");
    const State sink = static_cast<State>(n - 1);
    const auto id = Transformation::identity(n);
    auto a = id.send(0, sink).cycle({1, 2, 3}).cycle(detail::state_range(4, sink - 1));
    // (2->n-1)(1->2)(0->1) applied as one simultaneous assignment
    auto b = id.cycle({3, 4}).send(2, sink).send(1, 2).send(0, 1);
    auto c = id.send(0, sink).cycle(detail::state_range(1, sink - 1));
    return Dfa(n, {'a', 'b', 'c'}, {a, b, c}, 0, {1});
}

/// Quinary witness for boolean operations, reversal, atoms and syntactic
/// complexity (n >= 4): the generators a,b,c,d,e of Wsf(n), with the odd
/// middle states final. At n = 4 letters a and b coincide and the alphabet
/// is {b,c,d,e}.
inline Dfa d6(std::size_t n) {
    if (n < 4) throw InvalidInput("d6 is defined for n >= 4");
    const State sink = static_cast<State>(n - 1);
    const auto id = Transformation::identity(n);
    std::vector<State> finals;
    for (State q = 1; q < sink; q += 2) finals.push_back(q);
    auto a = id.send(0, sink).cycle(detail::state_range(1, sink - 1));
    auto b = id.send(0, sink).cycle({1, 2});
    auto c = id.send(0, sink).send(sink - 1, 1);
    auto d = id.send_all({0, 1}, sink);
    auto e = id.send_all(detail::state_range(1, sink), sink).send(0, 1);
    if (n == 4) return Dfa(n, {'b', 'c', 'd', 'e'}, {b, c, d, e}, 0, finals);
    return Dfa(n, {'a', 'b', 'c', 'd', 'e'}, {a, b, c, d, e}, 0, finals);
}

/// Five-letter form of d6 at every n (a and b coincide at n = 4).
inline Dfa d6_five_letter(std::size_t n) {
    if (n != 4) return d6(n);
    Dfa d = d6(4);
    const auto& b = d.delta('b');
    return Dfa(4, {'a', 'b', 'c', 'd', 'e'}, {b, b, d.delta('c'), d.delta('d'), d.delta('e')}, 0, d.finals());
}

/// Dialect of d5(n) given as a role string over (a,b,c), e.g. "a,b,-".
inline Dfa d5(std::size_t n, const std::string& dialect) {
    Dfa d = d5(n);
    return apply_dialect(d, PartialPermutation::parse(dialect, d.alphabet()));
}

/// Dialect of d6(n) given as a role string over (a,b,c,d,e). At n = 4 role a
/// is an alias of b.
inline Dfa d6(std::size_t n, const std::string& dialect) {
    Dfa d = d6_five_letter(n);
    return apply_dialect(d, PartialPermutation::parse(dialect, d.alphabet()));
}

struct ProductPair {
    Dfa left;
    Dfa right;
};

/// Binary witnesses for product (m >= 6, n >= 3). Transitions not listed go
/// to the empty states (m-1)' and n-1.
///   left:  a: 1'->2'->...->(m-2)'->1', 0'->(m-1)';  b: 0'->1', 2'->2';  finals {2',4'}
///   right: a: 1->2->...->(n-2)->1, 0->n-1;          b: 0->1, q->q for 2 <= q <= n-2;  finals {1}
inline ProductPair binary_product_pair(std::size_t m, std::size_t n) {
    if (m < 6) throw InvalidInput("binary product left witness needs m >= 6");
    if (n < 3) throw InvalidInput("binary product right witness needs n >= 3");
    const State lsink = static_cast<State>(m - 1), rsink = static_cast<State>(n - 1);

    auto la = Transformation::identity(m).send(0, lsink).cycle(detail::state_range(1, lsink - 1));
    auto lb = Transformation::constant(m, lsink).send(0, 1).send(2, 2);
    Dfa left(m, {'a', 'b'}, {la, lb}, 0, {2, 4});

    auto ra = Transformation::identity(n).send(0, rsink).cycle(detail::state_range(1, rsink - 1));
    auto rb = Transformation::identity(n).send(1, rsink).send(0, 1);
    Dfa right(n, {'a', 'b'}, {ra, rb}, 0, {1});
    return {std::move(left), std::move(right)};
}

// ---------------------------------------------------------------------------
// Predecessor words for the ternary product.

/// w_q for q in 1..n-2 (n >= 6):
///   cab^2 (q=1), ca (q=2), cab^4 (q=3), cab^2a^3b^{q-4} (even q >= 4),
///   ca^4b^{q-5} (odd q >= 5).
inline std::string pred_word(State q, std::size_t n) {
    if (n < 6) throw InvalidInput("predecessor words are defined for n >= 6");
    if (q < 1 || q > n - 2)
        throw InvalidInput("predecessor words are tabulated only for states 1..n-2; got " + std::to_string(q));
    if (q == 1) return "cabb";
    if (q == 2) return "ca";
    if (q == 3) return "cabbbb";
    if (q % 2 == 0) return "cabbaaa" + std::string(q - 4, 'b');
    return "caaaa" + std::string(q - 5, 'b');
}

struct PredWordCheck {
    std::string word;
    State left_image;  ///< 1' w in D'_m(a,b,c)
    State zero_image;  ///< 0 w in D_n(b,c,a)
    bool unique_predecessors;
    bool holds(State q) const { return left_image == 3 && zero_image == q && unique_predecessors; }
};

/// Evaluates the three properties of w_q in the ternary product setting:
/// 1'w = 3' in d5(m), 0w = q in d5(n) dialect (b,c,a), and every middle state
/// other than q has exactly one middle w-predecessor in that dialect.
inline PredWordCheck verify_pred_word(State q, std::size_t n, std::size_t m = 0) {
    if (m == 0) m = n;
    const std::string w = pred_word(q, n);
    const Dfa left = d5(m);
    const Dfa right = d5(n, "b,c,a");
    PredWordCheck out{w, left.run(1, w), right.run(0, w), true};
    const State sink = static_cast<State>(n - 1);
    std::vector<int> preds(n, 0);
    for (State p = 1; p < sink; ++p) {
        State r = right.run(p, w);
        ++preds[r];
    }
    for (State r = 1; r < sink; ++r)
        if (r != q && preds[r] != 1) out.unique_predecessors = false;
    return out;
}

/// DFA whose transition semigroup is Vsf(n) (generators Msf(n), final n-2).
/// Used as the star witness below the d5 range.
inline Dfa vsf_dfa(std::size_t n) {
    if (n < 3) throw InvalidInput("vsf_dfa needs n >= 3");
    auto gens = msf_generators(n);
    Alphabet letters;
    std::vector<Transformation> delta;
    const std::string names = "abcdefghijklmnopqrstuvwxyz";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i >= names.size()) throw InvalidInput("too many generators for single-letter names");
        letters.push_back(names[i]);
        delta.push_back(gens[i].t);
    }
    return Dfa(n, std::move(letters), std::move(delta), 0, {static_cast<State>(n - 2)});
}

}  // namespace suffree
