#pragma once

/**
 * @file verify.hpp
 * @brief Verification harness: builds witnesses, applies operations and
 *        compares the measured complexity with the closed-form bound.
 *
 * A report is "asserted" when its parameters lie in the range where the
 * bound is claimed; other runs are informational and never count as misses.
 */

#include <suffree/atoms.hpp>
#include <suffree/dfa.hpp>
#include <suffree/language_ops.hpp>
#include <suffree/semigroup.hpp>
#include <suffree/witnesses.hpp>

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace suffree {

enum class Measure {
    Star,
    Product,
    ProductBinary,
    Union,
    SymDiff,
    Intersection,
    Difference,
    Reversal,
    AtomCount,
    Syntactic,
    WsfSize,
    Atom,
    AtomTable,
    SemigroupClass,
};

inline std::string measure_name(Measure m) {
    switch (m) {
        case Measure::Star: return "STAR";
        case Measure::Product: return "PRODUCT";
        case Measure::ProductBinary: return "PRODUCT_BINARY";
        case Measure::Union: return "UNION";
        case Measure::SymDiff: return "SYMDIFF";
        case Measure::Intersection: return "INTERSECTION";
        case Measure::Difference: return "DIFFERENCE";
        case Measure::Reversal: return "REVERSAL";
        case Measure::AtomCount: return "ATOM_COUNT";
        case Measure::Syntactic: return "SYNTACTIC";
        case Measure::WsfSize: return "WSF_SIZE";
        case Measure::Atom: return "ATOM";
        case Measure::AtomTable: return "ATOM_TABLE";
        case Measure::SemigroupClass: return "SEMIGROUP_CLASS";
    }
    return "?";
}

/// Accepts the upper-case names above and lower-case dashed spellings
/// ("product-binary", "symmetric-difference", ...).
inline Measure parse_measure(std::string s) {
    for (auto& c : s) c = c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s == "SYMMETRIC_DIFFERENCE") return Measure::SymDiff;
    if (s == "ATOMS") return Measure::Atom;
    for (int i = 0; i <= static_cast<int>(Measure::SemigroupClass); ++i)
        if (measure_name(static_cast<Measure>(i)) == s) return static_cast<Measure>(i);
    throw InvalidInput("unknown measure '" + s + "'");
}

// ---------------------------------------------------------------------------
// Bound formulas (exact integers)

namespace bound {

inline BigInt star(std::size_t n) { return pow2(n - 2) + 1; }
inline BigInt product(std::size_t m, std::size_t n) { return BigInt(m - 1) * pow2(n - 2) + 1; }
inline BigInt union_(std::size_t m, std::size_t n) { return BigInt(m) * n - (m + n - 2); }
inline BigInt symdiff(std::size_t m, std::size_t n) { return union_(m, n); }
inline BigInt intersection(std::size_t m, std::size_t n) { return BigInt(m) * n - 2 * BigInt(m + n - 3); }
inline BigInt difference(std::size_t m, std::size_t n) { return BigInt(m) * n - (m + 2 * n - 4); }
inline BigInt reversal(std::size_t n) { return pow2(n - 2) + 1; }
inline BigInt atom_count(std::size_t n) { return pow2(n - 2) + 1; }
inline BigInt wsf_size(std::size_t n) {
    BigInt r = boost::multiprecision::pow(BigInt(n - 1), static_cast<unsigned>(n - 2));
    return r + (n - 2);
}
inline BigInt syntactic(std::size_t n) { return wsf_size(n); }
inline BigInt atom(std::size_t n, const AtomBasis& s) { return suffix_free_atom_bound(n, s); }

/// Largest atom bound over bases of size k (k = 0..n-2).
inline BigInt atom_row(std::size_t n, std::size_t k) {
    if (k == 0) return pow2(n - 2) + 1;
    BigInt mid = suffix_free_middle_atom_bound(n, k);
    return k == 1 ? std::max(mid, BigInt(n)) : mid;
}

inline BigInt boolean(BooleanOp op, std::size_t m, std::size_t n) {
    switch (op) {
        case BooleanOp::Union: return union_(m, n);
        case BooleanOp::SymmetricDifference: return symdiff(m, n);
        case BooleanOp::Intersection: return intersection(m, n);
        case BooleanOp::Difference: return difference(m, n);
    }
    return 0;
}

}  // namespace bound

// ---------------------------------------------------------------------------
// Reports

struct ComplexityReport {
    std::string measure;
    std::string family;
    std::size_t n = 0;
    std::optional<std::size_t> m;
    std::vector<std::string> dialects;
    std::string basis;  ///< atom basis or table row label; empty otherwise
    std::optional<BigInt> computed;
    BigInt bound = 0;
    bool asserted = true;
    bool met = false;
    std::optional<std::string> error;  ///< budget or input failure
    long long runtime_ms = 0;
    std::string note;

    std::string status() const {
        if (error) return "error";
        if (!asserted) return "info";
        return met ? "met" : "MISSED";
    }
};

struct VerifyParams {
    std::string family;  ///< empty selects the measure's default family
    std::size_t n = 0;
    std::optional<std::size_t> m;
    std::optional<AtomBasis> basis;
    Budget budget;
};

namespace detail {

inline std::string basis_label(const AtomBasis& s) { return s.to_string(); }

inline long long elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

inline void finish(ComplexityReport& r, BigInt computed) {
    r.computed = std::move(computed);
    r.met = *r.computed == r.bound;
}

inline BooleanOp boolean_of(Measure m) {
    switch (m) {
        case Measure::Union: return BooleanOp::Union;
        case Measure::SymDiff: return BooleanOp::SymmetricDifference;
        case Measure::Intersection: return BooleanOp::Intersection;
        default: return BooleanOp::Difference;
    }
}

inline std::size_t need_m(const VerifyParams& p, Measure measure) {
    if (!p.m) throw InvalidInput(measure_name(measure) + " needs --m");
    return *p.m;
}

inline std::string upper(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace detail

/// Parses "{1,3}", "1,3" or "{}" into a basis of capacity n.
inline AtomBasis parse_basis(const std::string& text, std::size_t n) {
    AtomBasis s(n);
    std::string body;
    for (char c : text)
        if (c != '{' && c != '}' && c != ' ') body += c;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw InvalidInput("bad state '" + item + "' in basis");
        }
        if (pos != item.size() || v >= n) throw InvalidInput("bad state '" + item + "' in basis");
        s.insert(static_cast<State>(v));
    }
    return s;
}

/// Runs one measure. Invalid parameters throw InvalidInput; a budget overrun
/// is returned as a report with `error` set.
inline ComplexityReport verify(Measure measure, const VerifyParams& p) {
    const auto t0 = std::chrono::steady_clock::now();
    ComplexityReport r;
    r.measure = measure_name(measure);
    r.n = p.n;
    r.m = p.m;
    const std::size_t n = p.n;
    std::string family = detail::upper(p.family);
    try {
        switch (measure) {
            case Measure::Star: {
                if (family.empty()) family = n >= 6 ? "D5" : "VSF";
                r.bound = bound::star(n);
                if (family == "D5") {
                    r.dialects = {"a,b,-"};
                    detail::finish(r, quotient_complexity(star(d5(n, "a,b,-"), p.budget)));
                } else if (family == "VSF") {
                    r.asserted = false;
                    r.note = "generators of Vsf(n), final {n-2}";
                    detail::finish(r, quotient_complexity(star(vsf_dfa(n), p.budget)));
                } else {
                    throw InvalidInput("STAR supports families D5 and VSF");
                }
                break;
            }
            case Measure::Product: {
                if (family.empty()) family = "D5";
                if (family != "D5") throw InvalidInput("PRODUCT supports family D5");
                const std::size_t m = detail::need_m(p, measure);
                r.dialects = {"a,b,c", "b,c,a"};
                r.bound = bound::product(m, n);
                detail::finish(r, quotient_complexity(concat(d5(m, "a,b,c"), d5(n, "b,c,a"), p.budget)));
                break;
            }
            case Measure::ProductBinary: {
                family = "BINARY_PRODUCT";
                const std::size_t m = detail::need_m(p, measure);
                auto pair = binary_product_pair(m, n);
                r.bound = bound::product(m, n);
                const bool coprime = std::gcd(m - 2, n - 2) == 1;
                r.asserted = coprime && m >= 6 && n >= 6;
                if (!coprime) r.note = "gcd(m-2,n-2) = " + std::to_string(std::gcd(m - 2, n - 2)) + "; bound not claimed";
                else if (!r.asserted) r.note = "outside m,n >= 6; bound not claimed";
                detail::finish(r, quotient_complexity(concat(pair.left, pair.right, p.budget)));
                break;
            }
            case Measure::Union:
            case Measure::SymDiff:
            case Measure::Intersection:
            case Measure::Difference: {
                if (family.empty()) family = "D6";
                const std::size_t m = detail::need_m(p, measure);
                const BooleanOp op = detail::boolean_of(measure);
                r.bound = bound::boolean(op, m, n);
                Dfa left = family == "D5"   ? d5(m, "a,b,-")
                           : family == "D6" ? d6(m, "a,b,-,d,e")
                                            : throw InvalidInput("boolean measures support families D5 and D6");
                Dfa right = family == "D5" ? d5(n, "-,b,a") : d6(n, "b,a,-,d,e");
                r.dialects = family == "D5" ? std::vector<std::string>{"a,b,-", "-,b,a"}
                                            : std::vector<std::string>{"a,b,-,d,e", "b,a,-,d,e"};
                if (family == "D6" && m == 4 && n == 4)
                    r.note = "letters a and b coincide at n = 4, both operands accept the same language";
                detail::finish(r, quotient_complexity(boolean(left, right, op, p.budget)));
                break;
            }
            case Measure::Reversal: {
                family = "D6";
                r.dialects = {"a,-,c,-,e"};
                r.bound = bound::reversal(n);
                detail::finish(r, quotient_complexity(reverse(d6(n, "a,-,c,-,e"), p.budget)));
                break;
            }
            case Measure::AtomCount: {
                family = "D6";
                r.bound = bound::atom_count(n);
                const Dfa d = d6(n);
                const std::size_t count = atoms(d, {}, p.budget).size();
                const std::size_t rev = quotient_complexity(reverse(d, p.budget));
                r.note = "reversal complexity " + std::to_string(rev);
                detail::finish(r, count);
                if (rev != count) {
                    r.met = false;
                    r.note += " differs from the atom count";
                }
                break;
            }
            case Measure::Syntactic: {
                family = "D6";
                r.bound = bound::syntactic(n);
                detail::finish(r, syntactic_complexity(d6(n), p.budget));
                break;
            }
            case Measure::WsfSize: {
                family = "G";
                r.bound = bound::wsf_size(n);
                r.asserted = n >= 4;
                detail::finish(r, generate(n, wsf_generators(n), p.budget).size());
                break;
            }
            case Measure::Atom: {
                family = "D6";
                if (!p.basis) throw InvalidInput("ATOM needs a basis (e.g. --basis 1,3)");
                r.basis = detail::basis_label(*p.basis);
                r.bound = bound::atom(n, *p.basis);
                detail::finish(r, atom_complexity(d6(n), *p.basis, p.budget));
                break;
            }
            case Measure::AtomTable:
            case Measure::SemigroupClass:
                throw InvalidInput(measure_name(measure) + " yields several reports; use verify_tables or "
                                   "verify_semigroup_classes");
        }
    } catch (const BudgetExceeded& e) {
        r.error = e.what();
        r.met = false;
    }
    r.family = family;
    r.runtime_ms = detail::elapsed_ms(t0);
    return r;
}

// ---------------------------------------------------------------------------
// Atom tables

/// Suffix-free atom complexity maxima by |S| = 0..n-2, n = 4..9.
inline const std::map<std::size_t, std::vector<long>>& atom_table_reference() {
    static const std::map<std::size_t, std::vector<long>> table{
        {4, {5, 5, 4}},
        {5, {9, 13, 16, 8}},
        {6, {17, 33, 53, 43, 16}},
        {7, {33, 81, 156, 166, 106, 32}},
        {8, {65, 193, 427, 542, 462, 249, 64}},
        {9, {129, 449, 1114, 1611, 1646, 1205, 568, 128}},
    };
    return table;
}

struct TableOptions {
    std::size_t construct_up_to = 7;  ///< larger n are checked against the formula only
    Budget budget;
};

/// Rows "|S|=k" and "max" for one n. Constructed rows take the maximum of
/// atom_complexity(d6(n), S) over atom bases of size k and also require every
/// basis to meet its own bound; formula rows evaluate the bound.
inline std::vector<ComplexityReport> verify_atom_table(std::size_t n, const TableOptions& opt = {}) {
    const auto& ref = atom_table_reference();
    auto it = ref.find(n);
    if (it == ref.end()) throw InvalidInput("reference atom table covers n = 4..9");
    const auto t0 = std::chrono::steady_clock::now();
    const bool construct = n <= opt.construct_up_to;
    std::vector<ComplexityReport> rows;

    std::vector<BigInt> row_max(n - 1, 0);
    std::vector<std::size_t> off_bound(n - 1, 0);
    std::optional<std::string> error;
    if (construct) {
        try {
            const Dfa d = d6(n);
            for (const auto& s : atoms(d, {}, opt.budget)) {
                if (s.contains(static_cast<State>(n - 1)) || s.size() > n - 2) continue;
                BigInt c = atom_complexity(d, s, opt.budget);
                row_max[s.size()] = std::max(row_max[s.size()], c);
                if (c != suffix_free_atom_bound(n, s)) ++off_bound[s.size()];
            }
        } catch (const BudgetExceeded& e) {
            error = e.what();
        }
    } else {
        for (std::size_t k = 0; k + 2 <= n; ++k) row_max[k] = bound::atom_row(n, k);
    }

    BigInt overall = 0, ref_max = 0;
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        ComplexityReport r;
        r.measure = "ATOM_TABLE";
        r.family = construct ? "D6" : "FORMULA";
        r.n = n;
        r.basis = "|S|=" + std::to_string(k);
        r.bound = it->second[k];
        ref_max = std::max(ref_max, r.bound);
        if (error) {
            r.error = error;
        } else {
            detail::finish(r, row_max[k]);
            overall = std::max(overall, row_max[k]);
            if (off_bound[k]) {
                r.met = false;
                r.note = std::to_string(off_bound[k]) + " bases differ from their bound";
            } else if (construct) {
                r.note = "every basis meets its bound";
            }
        }
        rows.push_back(std::move(r));
    }
    ComplexityReport mx;
    mx.measure = "ATOM_TABLE";
    mx.family = construct ? "D6" : "FORMULA";
    mx.n = n;
    mx.basis = "max";
    mx.bound = ref_max;
    if (error) mx.error = error;
    else detail::finish(mx, overall);
    rows.push_back(std::move(mx));
    const auto ms = detail::elapsed_ms(t0);
    for (auto& r : rows) r.runtime_ms = ms;
    return rows;
}

inline std::vector<ComplexityReport> verify_tables(const TableOptions& opt = {}) {
    std::vector<ComplexityReport> out;
    for (const auto& [n, row] : atom_table_reference()) {
        auto rows = verify_atom_table(n, opt);
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Semigroup classes of the witnesses

/// Star witness used by the class checks: d5(n)(a,b,-) for n >= 6 and the
/// Vsf-generator DFA below that.
inline Dfa star_witness(std::size_t n) { return n >= 6 ? d5(n, "a,b,-") : vsf_dfa(n); }

/// For one n: star witness ⊆ Vsf and ⊄ Wsf, reversal witness ⊆ Wsf, atom
/// witness ⊆ Wsf and ⊄ Vsf, and their conjunction. Each report has bound 1
/// and computed 1 when the property holds.
inline std::vector<ComplexityReport> verify_semigroup_classes(std::size_t n, const Budget& budget = {}) {
    if (n < 4) throw InvalidInput("semigroup class checks need n >= 4");
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<ComplexityReport> out;
    auto add = [&](const std::string& what, const std::string& family, std::vector<std::string> dialects, bool holds,
                   std::string note = {}) {
        ComplexityReport r;
        r.measure = "SEMIGROUP_CLASS";
        r.family = family;
        r.n = n;
        r.dialects = std::move(dialects);
        r.basis = what;
        r.bound = 1;
        detail::finish(r, holds ? 1 : 0);
        r.note = std::move(note);
        out.push_back(std::move(r));
        return holds;
    };
    try {
        const Dfa sw = star_witness(n);
        const auto star_sg = transition_semigroup(sw, budget);
        const std::size_t star_q = quotient_complexity(star(sw, budget));
        const bool star_ok = star_q == bound::star(n);
        const std::string sfam = n >= 6 ? "D5" : "VSF";
        const std::vector<std::string> sdial = n >= 6 ? std::vector<std::string>{"a,b,-"} : std::vector<std::string>{};
        bool a = add("star witness meets the star bound", sfam, sdial, star_ok,
                     "star complexity " + std::to_string(star_q));
        a &= add("star witness semigroup in Vsf", sfam, sdial, is_subsemigroup_of(star_sg, SemigroupClass::Vsf),
                 "|T| = " + std::to_string(star_sg.size()));
        a &= add("star witness semigroup not in Wsf", sfam, sdial, !is_subsemigroup_of(star_sg, SemigroupClass::Wsf));

        const auto rev_sg = transition_semigroup(d6(n, "a,-,c,-,e"), budget);
        bool b = add("reversal witness semigroup in Wsf", "D6", {"a,-,c,-,e"},
                     is_subsemigroup_of(rev_sg, SemigroupClass::Wsf), "|T| = " + std::to_string(rev_sg.size()));

        const auto atom_sg = transition_semigroup(d6(n), budget);
        bool c = add("atom witness semigroup in Wsf", "D6", {}, is_subsemigroup_of(atom_sg, SemigroupClass::Wsf),
                     "|T| = " + std::to_string(atom_sg.size()));
        c &= add("atom witness semigroup not in Vsf", "D6", {}, !is_subsemigroup_of(atom_sg, SemigroupClass::Vsf));

        add("incompatibility", "-", {}, a && b && c, "no single stream can serve star and reversal");
    } catch (const BudgetExceeded& e) {
        ComplexityReport r;
        r.measure = "SEMIGROUP_CLASS";
        r.n = n;
        r.bound = 1;
        r.error = e.what();
        out.push_back(std::move(r));
    }
    const auto ms = detail::elapsed_ms(t0);
    for (auto& r : out) r.runtime_ms = ms;
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive search over small suffix-free semigroups

struct SearchOptions {
    std::size_t max_generators = 3;
    std::size_t max_subsets = 5'000'000;
};

struct SearchReport {
    std::size_t n = 0;
    std::size_t max_generators = 0;
    std::size_t bsf_size = 0;
    std::size_t subsets_examined = 0;
    std::size_t suffix_free_closures = 0;  ///< closures staying inside Bsf(n)
    std::size_t distinct_semigroups = 0;
    std::size_t max_cardinality = 0;
    std::vector<Transformation> max_generators_found;
    /// Whether some closure has every middle pair colliding and focused;
    /// unset when n < 4 (no middle pairs).
    std::optional<bool> all_pairs_colliding_and_focused;
    bool complete = true;
    long long runtime_ms = 0;
};

/// Closure of `gens` restricted to Bsf(n); nullopt as soon as an element
/// leaves Bsf(n).
inline std::optional<std::vector<Transformation>> bsf_closure(const std::vector<Transformation>& gens,
                                                              const std::set<Transformation>& bsf) {
    std::set<Transformation> seen(gens.begin(), gens.end());
    std::vector<Transformation> order(seen.begin(), seen.end());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& g : gens) {
            auto t = compose(order[i], g);
            if (!bsf.count(t)) return std::nullopt;
            if (seen.insert(t).second) order.push_back(std::move(t));
        }
    return std::vector<Transformation>(seen.begin(), seen.end());
}

inline SearchReport search_subsemigroups(std::size_t n, const SearchOptions& opt = {}) {
    if (n < 2 || n > 5) throw InvalidInput("subsemigroup search is limited to 2 <= n <= 5");
    if (opt.max_generators < 1) throw InvalidInput("generator cap must be at least 1");
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;
    rep.n = n;
    rep.max_generators = opt.max_generators;
    const auto bsf_list = enumerate_class(n, SemigroupClass::Bsf).elements;
    const std::set<Transformation> bsf(bsf_list.begin(), bsf_list.end());
    rep.bsf_size = bsf_list.size();
    const auto pairs = all_middle_pairs(n);
    if (n >= 4) rep.all_pairs_colliding_and_focused = false;
    std::set<std::vector<Transformation>> distinct;

    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!rep.complete) return;
        if (!idx.empty()) {
            if (rep.subsets_examined >= opt.max_subsets) {
                rep.complete = false;
                return;
            }
            ++rep.subsets_examined;
            std::vector<Transformation> gens;
            for (auto i : idx) gens.push_back(bsf_list[i]);
            if (auto cl = bsf_closure(gens, bsf)) {
                ++rep.suffix_free_closures;
                if (cl->size() > rep.max_cardinality) {
                    rep.max_cardinality = cl->size();
                    rep.max_generators_found = gens;
                }
                if (distinct.insert(*cl).second && n >= 4 && !*rep.all_pairs_colliding_and_focused) {
                    TransitionSemigroup s(n, *cl);
                    if (colliding_pairs(s) == pairs && focused_pairs(s) == pairs)
                        rep.all_pairs_colliding_and_focused = true;
                }
            }
        }
        if (idx.size() == opt.max_generators) return;
        for (std::size_t i = start; i < bsf_list.size(); ++i) {
            idx.push_back(i);
            rec(i + 1);
            idx.pop_back();
        }
    };
    rec(0);
    rep.distinct_semigroups = distinct.size();
    rep.runtime_ms = detail::elapsed_ms(t0);
    return rep;
}

// ---------------------------------------------------------------------------
// Default sweep

struct SweepOptions {
    std::size_t lo = 4;
    std::size_t hi = 7;
    unsigned jobs = 1;
    TableOptions tables;
    Budget budget;
};

inline int measure_order(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(Measure::SemigroupClass); ++i)
        if (measure_name(static_cast<Measure>(i)) == name) return i;
    return 99;
}

/// Stable order: measure, family, n, m, then the order a case produced.
inline void sort_reports(std::vector<ComplexityReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        auto ka = std::make_tuple(measure_order(a.measure), a.family, a.n, a.m.value_or(0));
        auto kb = std::make_tuple(measure_order(b.measure), b.family, b.n, b.m.value_or(0));
        return ka < kb;
    });
}

/// Every measure over n, m in [lo, hi] where the witnesses are defined, the
/// binary product pairs (7,8), (8,9), (6,7), the atom tables and the class
/// checks. Cases run on `jobs` threads; the output order does not depend on it.
inline std::vector<ComplexityReport> verify_all(const SweepOptions& opt = {}) {
    using Task = std::function<std::vector<ComplexityReport>()>;
    std::vector<Task> tasks;
    auto single = [&](Measure m, VerifyParams p) {
        p.budget = opt.budget;
        tasks.push_back([m, p] { return std::vector<ComplexityReport>{verify(m, p)}; });
    };
    for (std::size_t n = opt.lo; n <= opt.hi; ++n) {
        if (n >= 6) single(Measure::Star, {"D5", n, {}, {}, {}});
        single(Measure::Reversal, {"", n, {}, {}, {}});
        single(Measure::AtomCount, {"", n, {}, {}, {}});
        single(Measure::Syntactic, {"", n, {}, {}, {}});
        single(Measure::WsfSize, {"", n, {}, {}, {}});
        for (std::size_t m = opt.lo; m <= opt.hi; ++m) {
            if (m >= 6 && n >= 6) single(Measure::Product, {"D5", n, m, {}, {}});
            for (Measure b : {Measure::Union, Measure::SymDiff, Measure::Intersection, Measure::Difference}) {
                single(b, {"D6", n, m, {}, {}});
                if (m >= 6 && n >= 6) single(b, {"D5", n, m, {}, {}});
            }
        }
        if (n >= 4) {
            Budget b = opt.budget;
            tasks.push_back([n, b] { return verify_semigroup_classes(n, b); });
        }
    }
    for (auto [m, n] : {std::pair<std::size_t, std::size_t>{7, 8}, {8, 9}, {6, 7}})
        single(Measure::ProductBinary, {"", n, m, {}, {}});
    for (const auto& [n, row] : atom_table_reference()) {
        TableOptions t = opt.tables;
        tasks.push_back([n = n, t] { return verify_atom_table(n, t); });
    }

    std::vector<std::vector<ComplexityReport>> results(tasks.size());
    const unsigned jobs = std::max(1u, opt.jobs);
    for (std::size_t start = 0; start < tasks.size(); start += jobs) {
        std::vector<std::future<std::vector<ComplexityReport>>> batch;
        for (std::size_t i = start; i < std::min(tasks.size(), start + jobs); ++i)
            batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, tasks[i]));
        for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
    }
    std::vector<ComplexityReport> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    sort_reports(out);
    return out;
}

/// 0 when every asserted report is met, 2 when any report carries an error,
/// 1 otherwise.
inline int exit_code(const std::vector<ComplexityReport>& reports) {
    bool missed = false;
    for (const auto& r : reports) {
        if (r.error) return 2;
        if (r.asserted && !r.met) missed = true;
    }
    return missed ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Emitters

namespace detail {

inline std::string big(const BigInt& v) { return v.str(); }

inline std::string json_escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '"' || c == '\\') o += '\\';
        o += c;
    }
    return o;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string o = "\"";
    for (char c : s) {
        if (c == '"') o += '"';
        o += c;
    }
    return o + "\"";
}

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string o;
    for (std::size_t i = 0; i < v.size(); ++i) o += (i ? sep : "") + v[i];
    return o;
}

}  // namespace detail

inline std::string reports_to_text(const std::vector<ComplexityReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        std::string st = r.status();
        os << '[' << st << std::string(st.size() < 6 ? 6 - st.size() : 0, ' ') << "] " << r.measure;
        if (!r.family.empty()) os << " family=" << r.family;
        os << " n=" << r.n;
        if (r.m) os << " m=" << *r.m;
        if (!r.dialects.empty()) os << " dialects=" << detail::join(r.dialects, "/");
        if (!r.basis.empty()) os << " [" << r.basis << "]";
        os << " computed=" << (r.computed ? detail::big(*r.computed) : "-") << " bound=" << detail::big(r.bound);
        os << " (" << r.runtime_ms << " ms)";
        if (r.error) os << " error: " << *r.error;
        if (!r.note.empty()) os << " ; " << r.note;
        os << '\n';
    }
    return os.str();
}

inline std::string reports_to_json(const std::vector<ComplexityReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["measure"] = r.measure;
        j["family"] = r.family;
        j["n"] = r.n;
        j["m"] = r.m ? nlohmann::ordered_json(*r.m) : nlohmann::ordered_json(nullptr);
        j["dialects"] = r.dialects;
        j["basis"] = r.basis;
        // decimal strings keep arbitrary-size bounds exact
        j["computed"] = r.computed ? nlohmann::ordered_json(detail::big(*r.computed)) : nlohmann::ordered_json(nullptr);
        j["bound"] = detail::big(r.bound);
        j["asserted"] = r.asserted;
        j["met"] = r.met;
        j["status"] = r.status();
        j["error"] = r.error ? nlohmann::ordered_json(*r.error) : nlohmann::ordered_json(nullptr);
        j["runtime_ms"] = r.runtime_ms;
        j["note"] = r.note;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

inline std::string reports_to_csv(const std::vector<ComplexityReport>& reports) {
    std::ostringstream os;
    os << "measure,family,n,m,dialects,basis,computed,bound,asserted,met,status,runtime_ms,error,note\n";
    for (const auto& r : reports) {
        os << r.measure << ',' << r.family << ',' << r.n << ',' << (r.m ? std::to_string(*r.m) : "") << ','
           << detail::csv_field(detail::join(r.dialects, "/")) << ',' << detail::csv_field(r.basis) << ','
           << (r.computed ? detail::big(*r.computed) : "") << ',' << detail::big(r.bound) << ','
           << (r.asserted ? "true" : "false") << ',' << (r.met ? "true" : "false") << ',' << r.status() << ','
           << r.runtime_ms << ',' << detail::csv_field(r.error.value_or("")) << ',' << detail::csv_field(r.note)
           << '\n';
    }
    return os.str();
}

inline std::string search_to_json(const SearchReport& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["max_generators"] = s.max_generators;
    j["bsf_size"] = s.bsf_size;
    j["subsets_examined"] = s.subsets_examined;
    j["suffix_free_closures"] = s.suffix_free_closures;
    j["distinct_semigroups"] = s.distinct_semigroups;
    j["max_cardinality"] = s.max_cardinality;
    std::vector<std::string> gens;
    for (const auto& t : s.max_generators_found) gens.push_back(t.to_string());
    j["max_cardinality_generators"] = gens;
    j["all_pairs_colliding_and_focused"] = s.all_pairs_colliding_and_focused
                                               ? nlohmann::ordered_json(*s.all_pairs_colliding_and_focused)
                                               : nlohmann::ordered_json(nullptr);
    j["complete"] = s.complete;
    j["runtime_ms"] = s.runtime_ms;
    return j.dump(2) + "\n";
}

inline std::string search_to_text(const SearchReport& s) {
    std::ostringstream os;
    os << "n=" << s.n << " generator cap=" << s.max_generators << " |Bsf|=" << s.bsf_size << '\n'
       << "subsets examined: " << s.subsets_examined << (s.complete ? "" : " (incomplete: subset budget hit)") << '\n'
       << "closures inside Bsf: " << s.suffix_free_closures << ", distinct semigroups: " << s.distinct_semigroups
       << '\n'
       << "max cardinality: " << s.max_cardinality << " generated by";
    for (const auto& t : s.max_generators_found) os << ' ' << t.to_string();
    os << "\nall pairs colliding and focused: "
       << (s.all_pairs_colliding_and_focused ? (*s.all_pairs_colliding_and_focused ? "yes" : "no") : "n/a (no pairs)")
       << '\n';
    return os.str();
}

inline std::string search_to_csv(const SearchReport& s) {
    std::ostringstream os;
    os << "n,max_generators,bsf_size,subsets_examined,suffix_free_closures,distinct_semigroups,max_cardinality,"
          "all_pairs_colliding_and_focused,complete\n"
       << s.n << ',' << s.max_generators << ',' << s.bsf_size << ',' << s.subsets_examined << ','
       << s.suffix_free_closures << ',' << s.distinct_semigroups << ',' << s.max_cardinality << ','
       << (s.all_pairs_colliding_and_focused ? (*s.all_pairs_colliding_and_focused ? "true" : "false") : "") << ','
       << (s.complete ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace suffree
