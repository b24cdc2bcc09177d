// Command-line front end for the suffree library.
//
// Exit codes: 0 success (all asserted bounds met), 1 an asserted bound was
// missed, 2 usage, input or budget error.

#include <suffree/suffree.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace suffree;

namespace {

struct Common {
    std::string format;  ///< empty: the command's own default
    std::string out;
    std::size_t budget_states = Budget{}.max_states;
    std::size_t budget_elements = Budget{}.max_elements;

    Budget budget() const { return {budget_states, budget_elements}; }
    std::string fmt(const std::string& fallback) const { return format.empty() ? fallback : format; }
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw InvalidInput("cannot write " + c.out);
    f << text;
}

std::string render_dfa(const Dfa& d, const std::string& format) {
    if (format == "json") return to_json(d);
    if (format == "dot") return to_dot(d);
    if (format == "text") {
        std::string s = "states: " + std::to_string(d.states()) + "\nalphabet:";
        for (char c : d.alphabet()) s += std::string(" ") + c;
        s += "\n";
        for (std::size_t i = 0; i < d.alphabet().size(); ++i)
            s += std::string("  ") + d.alphabet()[i] + ": " + d.delta_at(i).to_string() + "\n";
        s += "initial: " + std::to_string(d.initial()) + "\nfinals:";
        for (State q : d.finals()) s += " " + std::to_string(q);
        return s + "\n";
    }
    if (format == "csv") {
        std::string s = "letter";
        for (State q = 0; q < d.states(); ++q) s += "," + std::to_string(q);
        s += "\n";
        for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
            s += d.alphabet()[i];
            for (State q = 0; q < d.states(); ++q) s += "," + std::to_string(d.delta_at(i)[q]);
            s += "\n";
        }
        return s;
    }
    throw InvalidInput("unknown format '" + format + "'");
}

std::string render_reports(const std::vector<ComplexityReport>& r, const std::string& format) {
    if (format == "json") return reports_to_json(r);
    if (format == "csv") return reports_to_csv(r);
    if (format == "text") return reports_to_text(r);
    throw InvalidInput("format '" + format + "' is not available for reports");
}

std::string render_transformations(const std::vector<Transformation>& ts, const std::string& format,
                                   const std::string& header = {}) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : ts) arr.push_back(std::vector<State>(t.image().begin(), t.image().end()));
        return arr.dump() + "\n";
    }
    std::string s = header;
    for (const auto& t : ts) {
        if (format == "csv") {
            std::string row;
            for (State v : t.image()) row += (row.empty() ? "" : ",") + std::to_string(v);
            s += row + "\n";
        } else {
            s += t.to_string() + "\n";
        }
    }
    return s;
}

std::string pairs_text(const std::set<StatePair>& ps) {
    std::string s;
    for (const auto& p : ps) s += (s.empty() ? "" : " ") + std::string("{") + std::to_string(p.p) + "," +
                                  std::to_string(p.q) + "}";
    return s;
}

nlohmann::json pairs_json(const std::set<StatePair>& ps) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : ps) a.push_back({p.p, p.q});
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Suffix-free language complexity toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Common c;
    app.add_option("--format", c.format, "json|text|csv|dot; automata default to json, everything else to text")
        ->check(CLI::IsMember({"json", "text", "csv", "dot"}));
    app.add_option("--out", c.out, "write output to FILE");
    app.add_option("--budget-states", c.budget_states, "state budget for constructions");
    app.add_option("--budget-elements", c.budget_elements, "element budget for semigroup closures");

    int code = 0;

    // witness
    auto* witness = app.add_subcommand("witness", "emit a witness DFA");
    std::string family;
    std::size_t n = 0, m = 0;
    std::string dialect, side = "both";
    witness->add_option("family", family, "d5|d6|product-binary")
        ->required()
        ->check(CLI::IsMember({"d5", "d6", "product-binary"}));
    witness->add_option("--n", n, "number of states")->required();
    witness->add_option("--m", m, "left operand states (product-binary)");
    witness->add_option("--dialect", dialect, "role string, e.g. a,b,-");
    witness->add_option("--side", side, "left|right|both (product-binary)")
        ->check(CLI::IsMember({"left", "right", "both"}));
    witness->callback([&] {
        const std::string fmt = c.fmt("json");
        if (family == "product-binary") {
            if (m == 0) throw InvalidInput("product-binary needs --m");
            auto pair = binary_product_pair(m, n);
            if (side == "left") return emit(c, render_dfa(pair.left, fmt));
            if (side == "right") return emit(c, render_dfa(pair.right, fmt));
            if (fmt != "json") throw InvalidInput("use --side left|right with --format " + fmt);
            auto j = nlohmann::ordered_json::object();
            j["left"] = nlohmann::ordered_json::parse(to_json(pair.left));
            j["right"] = nlohmann::ordered_json::parse(to_json(pair.right));
            return emit(c, j.dump(2) + "\n");
        }
        Dfa d = family == "d5" ? (dialect.empty() ? d5(n) : d5(n, dialect))
                               : (dialect.empty() ? d6(n) : d6(n, dialect));
        emit(c, render_dfa(d, fmt));
    });

    // op
    auto* op = app.add_subcommand("op", "apply a language operation to DFA files");
    std::string op_name;
    std::vector<std::string> files;
    op->add_option("operation", op_name, "star|concat|reverse|union|intersection|difference|symmetric-difference")
        ->required()
        ->check(CLI::IsMember(
            {"star", "concat", "reverse", "union", "intersection", "difference", "symmetric-difference"}));
    op->add_option("files", files, "input DFA documents")->required()->check(CLI::ExistingFile);
    op->callback([&] {
        const bool unary = op_name == "star" || op_name == "reverse";
        if (files.size() != (unary ? 1u : 2u))
            throw InvalidInput(op_name + " takes " + (unary ? "one" : "two") + " input files");
        Dfa a = read_dfa(files[0]);
        Budget b = c.budget();
        Dfa r = op_name == "star"      ? star(a, b)
                : op_name == "reverse" ? reverse(a, b)
                : op_name == "concat"  ? concat(a, read_dfa(files[1]), b)
                                       : boolean(a, read_dfa(files[1]), parse_boolean_op(op_name), b);
        emit(c, render_dfa(r, c.fmt("json")));
    });

    // semigroup
    auto* sg = app.add_subcommand("semigroup", "transition semigroups and suffix-free classes");
    std::string sg_cmd, sg_file, sg_gens;
    std::size_t sg_n = 0;
    sg->add_option("command", sg_cmd, "generate|classify|collisions")
        ->required()
        ->check(CLI::IsMember({"generate", "classify", "collisions"}));
    sg->add_option("file", sg_file, "DFA document")->check(CLI::ExistingFile);
    sg->add_option("--generators", sg_gens, "named generating set instead of a file: msf|wsf")
        ->check(CLI::IsMember({"msf", "wsf"}));
    sg->add_option("--n", sg_n, "degree for --generators");
    sg->callback([&] {
        std::optional<TransitionSemigroup> s;
        if (!sg_gens.empty()) {
            if (sg_n == 0) throw InvalidInput("--generators needs --n");
            s = generate(sg_n, sg_gens == "msf" ? msf_generators(sg_n) : wsf_generators(sg_n), c.budget());
        } else if (!sg_file.empty()) {
            s = transition_semigroup(read_dfa(sg_file), c.budget());
        } else {
            throw InvalidInput("semigroup needs a DFA file or --generators");
        }
        if (sg_cmd == "generate") {
            return emit(c, render_transformations(s->elements(), c.fmt("text"),
                                                   "# degree " + std::to_string(s->degree()) + ", size " +
                                                       std::to_string(s->size()) + "\n"));
        }
        if (sg_cmd == "classify") {
            bool bsf = is_subsemigroup_of(*s, SemigroupClass::Bsf), vsf = is_subsemigroup_of(*s, SemigroupClass::Vsf),
                 wsf = is_subsemigroup_of(*s, SemigroupClass::Wsf);
            if (c.format == "json") {
                nlohmann::ordered_json j;
                j["degree"] = s->degree();
                j["size"] = s->size();
                j["in_bsf"] = bsf;
                j["in_vsf"] = vsf;
                j["in_wsf"] = wsf;
                return emit(c, j.dump(2) + "\n");
            }
            if (c.format == "csv")
                return emit(c, "degree,size,in_bsf,in_vsf,in_wsf\n" + std::to_string(s->degree()) + "," +
                                   std::to_string(s->size()) + "," + (bsf ? "true" : "false") + "," +
                                   (vsf ? "true" : "false") + "," + (wsf ? "true" : "false") + "\n");
            return emit(c, "degree " + std::to_string(s->degree()) + ", size " + std::to_string(s->size()) +
                               "\nBsf: " + (bsf ? "yes" : "no") + "\nVsf: " + (vsf ? "yes" : "no") +
                               "\nWsf: " + (wsf ? "yes" : "no") + "\n");
        }
        auto col = colliding_pairs(*s), foc = focused_pairs(*s);
        if (c.format == "json") {
            nlohmann::ordered_json j;
            j["colliding"] = pairs_json(col);
            j["focused"] = pairs_json(foc);
            return emit(c, j.dump(2) + "\n");
        }
        emit(c, "colliding: " + pairs_text(col) + "\nfocused: " + pairs_text(foc) + "\n");
    });

    // atoms
    auto* at = app.add_subcommand("atoms", "atoms of a DFA's language");
    std::string at_cmd, at_file, at_basis;
    std::size_t at_n = 0;
    at->add_option("command", at_cmd, "list|complexity|table")
        ->required()
        ->check(CLI::IsMember({"list", "complexity", "table"}));
    at->add_option("file", at_file, "DFA document")->check(CLI::ExistingFile);
    at->add_option("--basis", at_basis, "basis for complexity, e.g. 1,3");
    at->add_option("--n", at_n, "table: use d6(n) instead of a file");
    at->callback([&] {
        std::optional<Dfa> d;
        if (!at_file.empty()) d = read_dfa(at_file);
        else if (at_n) d = d6(at_n);
        else throw InvalidInput("atoms needs a DFA file or --n");
        const Budget b = c.budget();
        if (at_cmd == "complexity") {
            if (at_basis.empty()) throw InvalidInput("atoms complexity needs --basis");
            auto s = parse_basis(at_basis, d->states());
            return emit(c, std::to_string(atom_complexity(*d, s, b)) + "\n");
        }
        auto list = atoms(*d, {}, b);
        if (at_cmd == "list") {
            if (c.format == "json") {
                nlohmann::json a = nlohmann::json::array();
                for (const auto& s : list) a.push_back(s.members());
                return emit(c, a.dump() + "\n");
            }
            std::string s;
            for (const auto& basis : list) s += basis.to_string() + "\n";
            return emit(c, s);
        }
        std::vector<std::pair<std::string, std::size_t>> rows;
        for (const auto& s : list) rows.emplace_back(s.to_string(), atom_complexity(*d, s, b));
        if (c.format == "json") {
            nlohmann::ordered_json j = nlohmann::ordered_json::array();
            for (auto& [s, k] : rows) j.push_back({{"basis", s}, {"complexity", k}});
            return emit(c, j.dump(2) + "\n");
        }
        std::string s = c.format == "csv" ? "basis,complexity\n" : "";
        for (auto& [basis, k] : rows)
            s += (c.format == "csv" ? "\"" + basis + "\"," : basis + " ") + std::to_string(k) + "\n";
        emit(c, s);
    });

    // verify
    auto* vf = app.add_subcommand("verify", "check complexity bounds");
    std::string vf_cmd, vf_measure, vf_family, vf_basis;
    std::size_t vf_n = 0, vf_m = 0, construct_up_to = 7;
    unsigned jobs = 1;
    vf->add_option("command", vf_cmd, "measure|tables|classes|all")
        ->required()
        ->check(CLI::IsMember({"measure", "tables", "classes", "all"}));
    vf->add_option("name", vf_measure, "measure name for 'measure'");
    vf->add_option("--n", vf_n, "n");
    vf->add_option("--m", vf_m, "m");
    vf->add_option("--family", vf_family, "witness family (D5, D6, VSF)");
    vf->add_option("--basis", vf_basis, "atom basis for ATOM, e.g. 1,3");
    vf->add_option("--construct-up-to", construct_up_to, "construct atom tables up to this n (others by formula)");
    vf->add_option("--jobs", jobs, "parallel cases for 'all'");
    vf->callback([&] {
        std::vector<ComplexityReport> reports;
        TableOptions topt{construct_up_to, c.budget()};
        if (vf_cmd == "measure") {
            if (vf_measure.empty()) throw InvalidInput("verify measure needs a measure name");
            if (vf_n == 0) throw InvalidInput("verify measure needs --n");
            Measure ms = parse_measure(vf_measure);
            if (ms == Measure::AtomTable) {
                reports = verify_atom_table(vf_n, topt);
            } else if (ms == Measure::SemigroupClass) {
                reports = verify_semigroup_classes(vf_n, c.budget());
            } else {
                VerifyParams p{vf_family, vf_n, {}, {}, c.budget()};
                if (vf_m) p.m = vf_m;
                if (!vf_basis.empty()) p.basis = parse_basis(vf_basis, vf_n);
                reports.push_back(verify(ms, p));
            }
        } else if (vf_cmd == "tables") {
            reports = vf_n ? verify_atom_table(vf_n, topt) : verify_tables(topt);
        } else if (vf_cmd == "classes") {
            if (vf_n) {
                reports = verify_semigroup_classes(vf_n, c.budget());
            } else {
                for (std::size_t k = 4; k <= 7; ++k) {
                    auto r = verify_semigroup_classes(k, c.budget());
                    reports.insert(reports.end(), r.begin(), r.end());
                }
            }
        } else {
            SweepOptions s;
            s.jobs = jobs;
            s.tables = topt;
            s.budget = c.budget();
            reports = verify_all(s);
        }
        emit(c, render_reports(reports, c.format == "dot" ? "text" : c.fmt("text")));
        code = exit_code(reports);
    });

    // search
    auto* se = app.add_subcommand("search", "closures of small generator sets inside Bsf(n)");
    std::size_t se_n = 0;
    SearchOptions sopt;
    se->add_option("--n", se_n, "degree (2..5)")->required();
    se->add_option("--cap", sopt.max_generators, "maximum generator-set size");
    se->add_option("--max-subsets", sopt.max_subsets, "subset budget");
    se->callback([&] {
        auto r = search_subsemigroups(se_n, sopt);
        emit(c, c.format == "json" ? search_to_json(r) : c.format == "csv" ? search_to_csv(r) : search_to_text(r));
        if (!r.complete) code = 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return code;
}
