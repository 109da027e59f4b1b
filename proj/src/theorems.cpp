#include "qcrystal/theorems.hpp"

#include "qcrystal/errors.hpp"
#include "qcrystal/q_crystal.hpp"
#include "qcrystal/tableau_crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace qcrystal {

namespace {

std::string instance(const StrictPartition& lambda, int rank) {
    return "lambda=" + lambda.to_string() + " n=" + std::to_string(rank);
}

std::vector<StrictPartition> expected_labels(const StrictPartition& lambda, int rank) {
    std::vector<StrictPartition> out;
    const Weight base = lambda.to_weight(rank);
    for (int j = 1; j <= rank; ++j) {
        const Weight mu = base + Weight::epsilon(rank, j);
        if (mu.is_strict_dominant())
            out.push_back(*StrictPartition::from_weight(mu));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string join_words(const std::set<Word>& words) {
    std::string s = "{";
    for (const Word& w : words)
        s += (s.size() > 1 ? ", " : "") + w.to_string();
    return s + "}";
}

void check_rank(const StrictPartition& lambda, int rank) {
    if (lambda.empty())
        throw std::invalid_argument("lambda must be non-empty");
    if (lambda.length() > rank)
        throw std::invalid_argument("lambda " + lambda.to_string() + " has more than n parts");
}

} // namespace

Decomposition decompose_product(const CrystalGraph& left, const CrystalGraph& right) {
    const int rank = left.rank();
    Decomposition out;
    std::map<StrictPartition, std::optional<CrystalGraph>> shapes;
    std::map<StrictPartition, std::string> shape_errors;
    for (CrystalGraph& comp : connected_components(tensor_product(left, right))) {
        LabelledComponent lc{std::move(comp), std::nullopt};
        const std::string where = "component of " + lc.graph.node(0).word.to_string() + " (size " +
                                  std::to_string(lc.graph.size()) + ")";
        const auto hw = highest_weight_nodes(lc.graph);
        std::string failure;
        if (hw.size() != 1) {
            failure = std::to_string(hw.size()) + " highest weight vectors";
        } else if (auto mu = StrictPartition::from_weight(lc.graph.node(hw.front()).weight); !mu) {
            failure = "highest weight " + lc.graph.node(hw.front()).weight.to_string() + " is not strict";
        } else {
            auto it = shapes.find(*mu);
            if (it == shapes.end()) {
                try {
                    it = shapes.emplace(*mu, crystal_of_shape(*mu, rank)).first;
                } catch (const VerificationFailure& e) {
                    shape_errors[*mu] = e.what();
                    it = shapes.emplace(*mu, std::nullopt).first;
                }
            }
            if (!it->second) {
                failure = "B(Y_" + mu->to_string() + ") could not be built: " + shape_errors[*mu];
            } else {
                try {
                    if (isomorphic(lc.graph, *it->second))
                        lc.label = *mu;
                    else
                        failure = "not isomorphic to B(Y_" + mu->to_string() + ")";
                } catch (const std::invalid_argument& e) {
                    failure = "not isomorphic to B(Y_" + mu->to_string() + "): " + e.what();
                }
            }
        }
        out.report.add("component labelled", where, failure.empty(), failure);
        out.components.push_back(std::move(lc));
    }
    return out;
}

Report check_theorem_b(const StrictPartition& lambda, int rank) {
    check_rank(lambda, rank);
    Report report;
    const std::string inst = instance(lambda, rank);
    CrystalGraph g;
    try {
        g = crystal_of_shape(lambda, rank);
    } catch (const VerificationFailure& e) {
        report.add("B(Y_lambda) is a crystal", inst, false, e.what());
        return report;
    }
    const auto comps = connected_components(g);
    report.add("connected", inst, comps.size() == 1,
               comps.size() == 1 ? "" : std::to_string(comps.size()) + " components");
    const auto hw = highest_weight_nodes(g);
    std::string hw_words;
    for (auto id : hw)
        hw_words += (hw_words.empty() ? "" : ", ") + g.node(id).word.to_string();
    report.add("unique highest weight vector", inst, hw.size() == 1,
               hw.size() == 1 ? "" : std::to_string(hw.size()) + " highest weight vectors: " + hw_words);
    const bool weight_ok = hw.size() == 1 && g.node(hw.front()).weight == lambda.to_weight(rank);
    report.add("highest weight equals lambda", inst, weight_ok,
               weight_ok || hw.empty() ? "" : "weight " + g.node(hw.front()).weight.to_string());
    return report;
}

Report check_theorem_e3(const StrictPartition& lambda, int rank) {
    check_rank(lambda, rank);
    Report report;
    const std::string inst = instance(lambda, rank);
    CrystalGraph right;
    try {
        right = crystal_of_shape(lambda, rank);
    } catch (const VerificationFailure& e) {
        report.add("B(Y_lambda) is a crystal", inst, false, e.what());
        return report;
    }
    Decomposition d = decompose_product(vector_crystal(rank), right);
    for (auto& r : d.report.records)
        r.instance = inst + " " + r.instance;
    report.append(d.report);

    std::vector<StrictPartition> labels;
    std::size_t unlabelled = 0;
    for (const auto& c : d.components) {
        if (c.label)
            labels.push_back(*c.label);
        else
            ++unlabelled;
    }
    std::sort(labels.begin(), labels.end());
    const auto expected = expected_labels(lambda, rank);
    std::string witness;
    if (labels != expected || unlabelled) {
        witness = "labels [";
        for (std::size_t k = 0; k < labels.size(); ++k)
            witness += (k ? ", " : "") + labels[k].to_string();
        witness += "] + " + std::to_string(unlabelled) + " unlabelled; expected [";
        for (std::size_t k = 0; k < expected.size(); ++k)
            witness += (k ? ", " : "") + expected[k].to_string();
        witness += "]";
    }
    report.add("components labelled by lambda+eps_j strict", inst, witness.empty(), witness);
    return report;
}

Report verify_hw_formula(const StrictPartition& lambda, int rank) {
    check_rank(lambda, rank);
    Report report;
    const std::string inst = instance(lambda, rank);
    CrystalGraph right;
    std::optional<Tableau> top;
    try {
        right = crystal_of_shape(lambda, rank);
        top = b_lambda(lambda, rank);
    } catch (const VerificationFailure& e) {
        report.add("highest weight formula", inst, false, e.what());
        return report;
    }
    const CrystalGraph product = tensor_product(vector_crystal(rank), right);
    std::set<Word> actual;
    for (auto id : highest_weight_nodes(product))
        actual.insert(product.node(id).word);

    const TableauCrystal c(rank, Reading::Row);
    const Word one(rank, {1});
    std::set<Word> expected;
    std::string missing;
    const Weight base = lambda.to_weight(rank);
    for (int j = 1; j <= rank; ++j) {
        if (!(base + Weight::epsilon(rank, j)).is_strict_dominant())
            continue;
        std::optional<Tableau> t = top;
        for (int k = j - 1; k >= 1 && t; --k)
            t = c.f(k, *t);
        if (!t) {
            missing += " j=" + std::to_string(j);
            continue;
        }
        expected.insert(one.concat(reading_row(*t)));
    }
    const bool ok = missing.empty() && actual == expected;
    std::string witness;
    if (!ok) {
        witness = "actual " + join_words(actual) + ", formula " + join_words(expected);
        if (!missing.empty())
            witness += ", operator product absent for" + missing;
    }
    report.add("highest weight formula", inst, ok, witness);
    return report;
}

Report check_reading_independence(const StrictPartition& lambda, int rank) {
    check_rank(lambda, rank);
    Report report;
    const std::string inst = instance(lambda, rank);
    try {
        const auto row = tableau_edge_set(crystal_of_shape(lambda, rank, Reading::Row));
        const auto col = tableau_edge_set(crystal_of_shape(lambda, rank, Reading::Column));
        std::string witness;
        if (row != col)
            witness = std::to_string(row.size()) + " arrows with row reading, " + std::to_string(col.size()) +
                      " with column reading";
        report.add("reading independence", inst, row == col, witness);
    } catch (const VerificationFailure& e) {
        report.add("reading independence", inst, false, e.what());
    }
    return report;
}

ConjectureReport explore_conjecture(const StrictPartition& lambda, int rank, std::size_t budget) {
    check_rank(lambda, rank);
    ConjectureReport out{lambda, rank, 0, {}};
    const CrystalGraph left = crystal_of_shape(lambda, rank);
    const CrystalGraph product = tensor_product(left, vector_crystal(rank));

    std::unordered_map<Word, std::string> found;
    const auto tops = highest_weight_tableaux(lambda, rank);
    if (tops.size() == 1 && budget > 0 && rank >= 2) {
        const TableauCrystal c(rank, Reading::Row);
        const int max_depth = lambda.size() + 1;
        struct Item {
            Tableau t;
            std::string expr;
            int depth;
        };
        std::deque<Item> queue{{tops.front(), "b_lambda", 0}};
        found.emplace(reading_row(tops.front()), "b_lambda");
        while (!queue.empty() && out.explored < budget) {
            Item item = std::move(queue.front());
            queue.pop_front();
            ++out.explored;
            if (item.depth >= max_depth)
                continue;
            for (int i = 1; i < rank; ++i) {
                auto next = fbar(c, i, item.t);
                if (!next)
                    continue;
                Word w = reading_row(*next);
                if (found.count(w))
                    continue;
                std::string expr = "f" + std::to_string(i) + "bar " + item.expr;
                found.emplace(std::move(w), expr);
                queue.push_back(Item{std::move(*next), std::move(expr), item.depth + 1});
            }
        }
    }

    const std::size_t cut = static_cast<std::size_t>(lambda.size());
    for (auto id : highest_weight_nodes(product)) {
        const Word& w = product.node(id).word;
        ConjectureEntry entry{w, std::nullopt};
        if (out.explored > 0) {
            auto it = found.find(w.slice(0, cut));
            if (it != found.end())
                entry.expression = it->second + " ⊗ " + std::to_string(w[cut]);
        }
        out.entries.push_back(std::move(entry));
    }
    return out;
}

} // namespace qcrystal
