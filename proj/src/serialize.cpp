#include "qcrystal/serialize.hpp"

#include <regex>
#include <sstream>
#include <stdexcept>

namespace qcrystal {

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

std::string dot_label(Label l) { return l.odd ? std::to_string(l.index) + "̄" : std::to_string(l.index); }

nlohmann::ordered_json weight_json(const Weight& w) {
    auto a = nlohmann::ordered_json::array();
    for (int x : w.entries())
        a.push_back(x);
    return a;
}

} // namespace

std::string node_label(const CrystalNode& node) { return node.word.to_string(); }

std::string label_key(Label l) { return l.odd ? std::to_string(l.index) + "bar" : std::to_string(l.index); }

Label parse_label_key(const std::string& key) {
    static const std::regex pattern("([0-9]+)(bar)?");
    std::smatch m;
    if (!std::regex_match(key, m, pattern))
        throw std::invalid_argument("bad arrow label '" + key + "'");
    const int i = std::stoi(m[1].str());
    return m[2].matched ? Label::bar(i) : Label::even(i);
}

std::string to_dot(const CrystalGraph& g) {
    std::ostringstream out;
    out << "digraph crystal {\n";
    out << "  rankdir=LR;\n";
    for (std::size_t k = 0; k < g.size(); ++k)
        out << "  n" << k << " [label=\"" << dot_escape(node_label(g.node(k))) << "\"];\n";
    for (const CrystalEdge& e : g.edges()) {
        out << "  n" << e.source << " -> n" << e.target << " [label=\"" << dot_label(e.label) << "\"";
        if (e.label.odd)
            out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json to_json(const CrystalGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.rank();
    auto nodes = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < g.size(); ++k) {
        const CrystalNode& node = g.node(k);
        nlohmann::ordered_json x;
        x["id"] = k;
        if (node.tableau) {
            const Tableau& t = *node.tableau;
            x["kind"] = "tableau";
            nlohmann::ordered_json payload;
            auto parts = nlohmann::ordered_json::array();
            for (int p : t.shape().partition().parts())
                parts.push_back(p);
            payload["shape"] = parts;
            auto cells = nlohmann::ordered_json::array();
            const auto boxes = t.shape().boxes();
            for (std::size_t b = 0; b < boxes.size(); ++b)
                cells.push_back({{"row", boxes[b].row}, {"col", boxes[b].col}, {"entry", t.entries()[b]}});
            payload["cells"] = cells;
            x["payload"] = payload;
        } else {
            x["kind"] = "word";
            auto letters = nlohmann::ordered_json::array();
            for (Letter l : node.word.letters())
                letters.push_back(l);
            x["payload"] = letters;
        }
        x["weight"] = weight_json(node.weight);
        nodes.push_back(std::move(x));
    }
    j["nodes"] = std::move(nodes);
    auto edges = nlohmann::ordered_json::array();
    for (const CrystalEdge& e : g.edges())
        edges.push_back({{"src", e.source}, {"label", label_key(e.label)}, {"dst", e.target}});
    j["edges"] = std::move(edges);
    return j;
}

CrystalGraph graph_from_json(const nlohmann::json& j) {
    try {
        const int rank = j.at("n").get<int>();
        std::vector<CrystalNode> nodes;
        std::map<std::size_t, std::size_t> id_to_pos;
        for (const auto& x : j.at("nodes")) {
            const auto id = x.at("id").get<std::size_t>();
            const std::string kind = x.at("kind").get<std::string>();
            CrystalNode node;
            node.weight = Weight(x.at("weight").get<std::vector<int>>());
            if (kind == "word") {
                node.word = Word(rank, x.at("payload").get<std::vector<Letter>>());
            } else if (kind == "tableau") {
                const auto& p = x.at("payload");
                auto shape = shape_from_partition(StrictPartition(p.at("shape").get<std::vector<int>>()));
                std::vector<Letter> entries(shape->size(), 0);
                for (const auto& cell : p.at("cells"))
                    entries.at(shape->index_of(Box{cell.at("row").get<int>(), cell.at("col").get<int>()})) =
                        cell.at("entry").get<Letter>();
                Tableau t(shape, rank, std::move(entries));
                node.word = reading_row(t);
                node.tableau = std::move(t);
            } else {
                throw std::invalid_argument("unknown node kind '" + kind + "'");
            }
            if (!id_to_pos.emplace(id, nodes.size()).second)
                throw std::invalid_argument("duplicate node id " + std::to_string(id));
            nodes.push_back(std::move(node));
        }
        std::vector<CrystalEdge> edges;
        for (const auto& e : j.at("edges"))
            edges.push_back(CrystalEdge{id_to_pos.at(e.at("src").get<std::size_t>()),
                                        parse_label_key(e.at("label").get<std::string>()),
                                        id_to_pos.at(e.at("dst").get<std::size_t>())});
        return CrystalGraph(rank, std::move(nodes), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw std::invalid_argument(std::string("malformed graph JSON: ") + e.what());
    }
}

GraphSketch sketch_from_dot(const std::string& dot) {
    static const std::regex node_re(R"re(^\s*n(\d+) \[label="((?:[^"\\]|\\.)*)"\];\s*$)re");
    static const std::regex edge_re(R"re(^\s*n(\d+) -> n(\d+) \[label="([^"]*)"(, style=dashed)?\];\s*$)re");
    std::map<std::string, std::string> names;
    std::vector<std::tuple<std::string, std::string, std::string>> raw_edges;
    GraphSketch s;
    std::istringstream in(dot);
    std::string line;
    while (std::getline(in, line)) {
        std::smatch m;
        if (std::regex_match(line, m, node_re)) {
            std::string label;
            const std::string text = m[2].str();
            for (std::size_t k = 0; k < text.size(); ++k)
                label += text[k] == '\\' && k + 1 < text.size() ? text[++k] : text[k];
            names[m[1].str()] = label;
            s.nodes.insert(label);
        } else if (std::regex_match(line, m, edge_re)) {
            std::string label = m[3].str();
            const std::string bar = "̄";
            if (label.size() > bar.size() && label.compare(label.size() - bar.size(), bar.size(), bar) == 0)
                label = label.substr(0, label.size() - bar.size()) + "bar";
            raw_edges.emplace_back(m[1].str(), label, m[2].str());
        }
    }
    for (const auto& [a, l, b] : raw_edges)
        s.edges.emplace(names.at(a), l, names.at(b));
    return s;
}

GraphSketch sketch_from_json(const nlohmann::json& j) {
    const CrystalGraph g = graph_from_json(j);
    GraphSketch s;
    for (const auto& node : g.nodes())
        s.nodes.insert(node_label(node));
    for (const auto& e : g.edges())
        s.edges.emplace(node_label(g.node(e.source)), label_key(e.label), node_label(g.node(e.target)));
    return s;
}

nlohmann::ordered_json to_json(const Report& r) {
    auto records = nlohmann::ordered_json::array();
    for (const auto& rec : r.records) {
        nlohmann::ordered_json x;
        x["check"] = rec.check;
        x["instance"] = rec.instance;
        x["status"] = rec.passed ? "pass" : "fail";
        if (!rec.witness.empty())
            x["witness"] = rec.witness;
        records.push_back(std::move(x));
    }
    nlohmann::ordered_json j;
    j["passed"] = r.passed();
    j["failures"] = r.failures();
    j["records"] = std::move(records);
    return j;
}

nlohmann::ordered_json to_json(const ConjectureReport& r) {
    nlohmann::ordered_json j;
    j["lambda"] = std::vector<int>(r.lambda.parts().begin(), r.lambda.parts().end());
    j["n"] = r.rank;
    j["explored"] = r.explored;
    auto entries = nlohmann::ordered_json::array();
    for (const auto& e : r.entries) {
        nlohmann::ordered_json x;
        x["vector"] = e.vector.to_string();
        x["expression"] = e.expression ? nlohmann::ordered_json(*e.expression) : nlohmann::ordered_json("not found");
        entries.push_back(std::move(x));
    }
    j["highest_weight_vectors"] = std::move(entries);
    return j;
}

} // namespace qcrystal
