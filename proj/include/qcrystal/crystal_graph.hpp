#pragma once

#include "qcrystal/crystal.hpp"
#include "qcrystal/errors.hpp"
#include "qcrystal/shapes.hpp"
#include "qcrystal/weight.hpp"
#include "qcrystal/word.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qcrystal {

// Every node carries its image in B^{\otimes N} (for a tableau, its reading
// word). Words are unique within a graph and serve as node identity.
struct CrystalNode {
    Word word;
    Weight weight;
    std::optional<Tableau> tableau;
};

// f-edge source --label--> target; the e-edge is the same arrow reversed.
struct CrystalEdge {
    std::size_t source = 0;
    Label label;
    std::size_t target = 0;
    friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
    friend auto operator<=>(const CrystalEdge&, const CrystalEdge&) = default;
};

// Nodes plus arrows labelled 1..n-1 and 1bar; the derived ibar arrows are
// never stored. Construction puts nodes in canonical order (weight
// descending lexicographically, then word) and sorts edges.
class CrystalGraph {
  public:
    CrystalGraph() = default;
    // Throws std::invalid_argument on duplicate words, unknown labels, edge
    // endpoints out of range, or two arrows with one label leaving
    // (entering) a node.
    CrystalGraph(int rank, std::vector<CrystalNode> nodes, std::vector<CrystalEdge> edges);

    int rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    const std::vector<CrystalNode>& nodes() const noexcept { return nodes_; }
    const std::vector<CrystalEdge>& edges() const noexcept { return edges_; }
    const CrystalNode& node(std::size_t id) const { return nodes_.at(id); }

    std::optional<std::size_t> find(const Word& w) const;
    std::optional<std::size_t> f(Label l, std::size_t id) const;
    std::optional<std::size_t> e(Label l, std::size_t id) const;

    // Weight compatibility of every arrow; the matching property is
    // enforced at construction.
    std::vector<std::string> invariant_violations() const;

    CrystalGraph induced(const std::vector<std::size_t>& ids) const;

  private:
    std::size_t slot(Label l) const;

    int rank_ = 0;
    std::vector<CrystalNode> nodes_;
    std::vector<CrystalEdge> edges_;
    std::unordered_map<Word, std::size_t> index_;
    // [slot][node] -> neighbour or npos
    std::vector<std::vector<std::size_t>> out_, in_;
};

// QCrystal view of a stored graph; elements are node ids.
class GraphCrystal {
  public:
    using element_type = std::size_t;
    explicit GraphCrystal(const CrystalGraph& g) : g_(&g) {}

    int rank() const { return g_->rank(); }
    std::optional<std::size_t> e(int i, std::size_t b) const { return g_->e(Label::even(i), b); }
    std::optional<std::size_t> f(int i, std::size_t b) const { return g_->f(Label::even(i), b); }
    std::optional<std::size_t> ebar1(std::size_t b) const { return g_->e(Label::bar(1), b); }
    std::optional<std::size_t> fbar1(std::size_t b) const { return g_->f(Label::bar(1), b); }
    const Weight& weight(std::size_t b) const { return g_->node(b).weight; }

  private:
    const CrystalGraph* g_;
};

// Graph on the given elements with an arrow b -> f_l(b) for each stored
// label l. Throws VerificationFailure when some f_l(b) is not among the
// elements.
template <QCrystal C>
CrystalGraph graph_from_elements(const C& c, const std::vector<element_t<C>>& elements,
                                 const std::function<CrystalNode(const element_t<C>&)>& to_node) {
    std::vector<CrystalNode> nodes;
    nodes.reserve(elements.size());
    std::unordered_map<Word, std::size_t> index;
    for (const auto& b : elements) {
        nodes.push_back(to_node(b));
        index.emplace(nodes.back().word, nodes.size() - 1);
    }
    std::vector<CrystalEdge> edges;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        for (Label l : stored_labels(c.rank())) {
            auto target = l.odd ? c.fbar1(elements[k]) : c.f(l.index, elements[k]);
            if (!target)
                continue;
            auto it = index.find(to_node(*target).word);
            if (it == index.end())
                throw VerificationFailure("f_" + l.to_string() + " maps " + nodes[k].word.to_string() +
                                          " outside the element set");
            edges.push_back(CrystalEdge{k, l, it->second});
        }
    }
    return CrystalGraph(c.rank(), std::move(nodes), std::move(edges));
}

// Connected components (arrows taken undirected), ordered by their first
// node in canonical order.
std::vector<CrystalGraph> connected_components(const CrystalGraph& g);
bool is_connected(const CrystalGraph& g);

std::vector<std::size_t> highest_weight_nodes(const CrystalGraph& g);

// Tensor product via the two-factor rules: even arrows by comparing
// phi_i(b1) with eps_i(b2), the 1bar arrow acting on b1 exactly when
// <k_1, wt b2> = <k_2, wt b2> = 0. Node words are concatenated.
CrystalGraph tensor_product(const CrystalGraph& left, const CrystalGraph& right);

// Weight- and label-preserving isomorphism, returned as the image of each
// node of g1. Throws std::invalid_argument unless both graphs have exactly
// one highest weight node.
std::optional<std::vector<std::size_t>> isomorphic(const CrystalGraph& g1, const CrystalGraph& g2);

// Same node words and the same labelled arrow set.
bool same_crystal(const CrystalGraph& a, const CrystalGraph& b);

} // namespace qcrystal
