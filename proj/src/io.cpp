#include "preisach/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace preisach {

namespace {

std::vector<std::size_t> parse_integers(std::string_view text) {
    std::vector<std::size_t> out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    // optional enclosing parentheses
    while (!text.empty() && is_sep(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_sep(text.back())) text.remove_suffix(1);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
    while (i < text.size()) {
        if (is_sep(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        const std::string_view token = text.substr(i, j - i);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw Error("non-integer token '" + std::string(token) + "'");
        }
        out.push_back(value);
        i = j;
    }
    return out;
}

const char* kind_name(EdgeKind k) { return k == EdgeKind::U ? "U" : "D"; }

}  // namespace

Permutation parse_permutation(std::string_view text) {
    auto values = parse_integers(text);
    if (values.empty()) throw Error("empty permutation");
    return Permutation(std::move(values));
}

SpinConfig parse_config(std::string_view text, std::size_t n) {
    if (text.size() != n) {
        throw Error("wrong length: expected " + std::to_string(n) + " spins, got " + std::to_string(text.size()));
    }
    std::vector<std::int8_t> spins;
    spins.reserve(n);
    for (char c : text) {
        if (c == '+') {
            spins.push_back(1);
        } else if (c == '-') {
            spins.push_back(-1);
        } else {
            throw Error(std::string("illegal character '") + c + "'");
        }
    }
    return SpinConfig(std::move(spins));
}

IncreasingSubsequence parse_subsequence(std::string_view text, const Permutation& rho) {
    return IncreasingSubsequence(rho, parse_integers(text));
}

std::string export_dot(const PreisachGraph& g) {
    std::ostringstream os;
    os << "digraph preisach {\n";
    for (const auto& v : g.vertices()) os << "  \"" << v.to_string() << "\";\n";
    for (const auto& e : g.edges()) {
        os << "  \"" << e.from.to_string() << "\" -> \"" << e.to.to_string() << "\" [color="
           << (e.kind == EdgeKind::U ? "black" : "red") << ", label=" << e.label << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string export_json(const PreisachGraph& g) {
    nlohmann::ordered_json doc;
    doc["n"] = g.spin_count();
    doc["perm"] = std::vector<std::size_t>(g.perm().values().begin(), g.perm().values().end());
    auto& vertices = doc["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices()) vertices.push_back(v.to_string());
    auto& edges = doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({{"from", e.from.to_string()},
                         {"to", e.to.to_string()},
                         {"kind", kind_name(e.kind)},
                         {"label", e.label}});
    }
    return doc.dump();
}

PreisachGraph load_json(std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        const auto n = doc.at("n").get<std::size_t>();
        Permutation perm(doc.at("perm").get<std::vector<std::size_t>>());
        if (perm.size() != n) throw Error("\"n\" does not match the permutation length");
        std::vector<SpinConfig> vertices;
        for (const auto& v : doc.at("vertices")) vertices.push_back(parse_config(v.get<std::string>(), n));
        std::vector<LabeledEdge> edges;
        for (const auto& e : doc.at("edges")) {
            const auto kind = e.at("kind").get<std::string>();
            if (kind != "U" && kind != "D") throw Error("edge kind must be \"U\" or \"D\"");
            edges.push_back({parse_config(e.at("from").get<std::string>(), n),
                             parse_config(e.at("to").get<std::string>(), n),
                             kind == "U" ? EdgeKind::U : EdgeKind::D, e.at("label").get<std::size_t>()});
        }
        return PreisachGraph(std::move(perm), std::move(vertices), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed graph JSON: ") + e.what());
    }
}

}  // namespace preisach
