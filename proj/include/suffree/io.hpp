#pragma once

/**
 * @file io.hpp
 * @brief Dfa interchange documents and DOT dumps.
 *
 * Interchange document fields, in this order: "states", "alphabet",
 * "transitions" (letter -> image array, keys in alphabet order), "initial",
 * "finals" (sorted). to_json() is a fixed layout so that
 * to_json(from_json(to_json(d))) == to_json(d) byte for byte.
 */

#include <suffree/dfa.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace suffree {

namespace detail {

template <class Range>
std::string int_array(const Range& r) {
    std::string s = "[";
    bool first = true;
    for (auto v : r) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(v);
    }
    return s + "]";
}

}  // namespace detail

inline std::string to_json(const Dfa& d) {
    std::ostringstream os;
    os << "{\n  \"states\": " << d.states() << ",\n  \"alphabet\": [";
    for (std::size_t i = 0; i < d.alphabet().size(); ++i) os << (i ? ", " : "") << '"' << d.alphabet()[i] << '"';
    os << "],\n  \"transitions\": {";
    for (std::size_t i = 0; i < d.alphabet().size(); ++i)
        os << (i ? ",\n" : "\n") << "    \"" << d.alphabet()[i] << "\": " << detail::int_array(d.delta_at(i).image());
    os << (d.alphabet().empty() ? "},\n" : "\n  },\n");
    os << "  \"initial\": " << d.initial() << ",\n  \"finals\": " << detail::int_array(d.finals()) << "\n}\n";
    return os.str();
}

inline Dfa dfa_from_json(const nlohmann::json& j) {
    try {
        for (const char* key : {"states", "alphabet", "transitions", "initial", "finals"})
            if (!j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
        auto n = j.at("states").get<std::size_t>();
        Alphabet alphabet;
        for (const auto& l : j.at("alphabet")) {
            auto s = l.get<std::string>();
            if (s.size() != 1) throw InvalidInput("alphabet entries must be 1-character strings");
            alphabet.push_back(s[0]);
        }
        const auto& tr = j.at("transitions");
        if (!tr.is_object() || tr.size() != alphabet.size())
            throw InvalidInput("transitions must map exactly the alphabet letters");
        std::vector<Transformation> delta;
        for (char c : alphabet) {
            std::string key(1, c);
            if (!tr.contains(key)) throw InvalidInput("no transitions for letter '" + key + "'");
            auto img = tr.at(key).get<std::vector<State>>();
            if (img.size() != n) throw InvalidInput("transition array for '" + key + "' has wrong length");
            delta.emplace_back(std::move(img));
        }
        return Dfa(n, std::move(alphabet), std::move(delta), j.at("initial").get<State>(),
                   j.at("finals").get<std::vector<State>>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed Dfa document: ") + e.what());
    }
}

inline Dfa dfa_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("invalid JSON: ") + e.what());
    }
    return dfa_from_json(j);
}

inline Dfa read_dfa(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return dfa_from_json(ss.str());
}

/// Plain structural dump; no layout hints.
inline std::string to_dot(const Dfa& d, const std::string& name = "dfa") {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n  init [shape=point];\n";
    for (State q = 0; q < d.states(); ++q)
        os << "  " << q << " [shape=" << (d.is_final(q) ? "doublecircle" : "circle") << "];\n";
    os << "  init -> " << d.initial() << ";\n";
    for (State q = 0; q < d.states(); ++q) {
        // group letters per target
        std::vector<std::pair<State, std::string>> edges;
        for (std::size_t i = 0; i < d.alphabet().size(); ++i) {
            State r = d.delta_at(i)[q];
            auto it = std::find_if(edges.begin(), edges.end(), [&](auto& e) { return e.first == r; });
            if (it == edges.end())
                edges.emplace_back(r, std::string(1, d.alphabet()[i]));
            else
                it->second += std::string(",") + d.alphabet()[i];
        }
        for (auto& [r, label] : edges) os << "  " << q << " -> " << r << " [label=\"" << label << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string to_json(const Transformation& t) { return detail::int_array(t.image()); }

}  // namespace suffree
