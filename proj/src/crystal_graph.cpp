#include "qcrystal/crystal_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace qcrystal {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

bool canonical_less(const CrystalNode& a, const CrystalNode& b) {
    if (a.weight != b.weight)
        return a.weight > b.weight;
    return a.word < b.word;
}

} // namespace

CrystalGraph::CrystalGraph(int rank, std::vector<CrystalNode> nodes, std::vector<CrystalEdge> edges)
    : rank_(rank) {
    if (rank < 1)
        throw std::invalid_argument("rank must be at least 1");
    std::vector<std::size_t> order(nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return canonical_less(nodes[a], nodes[b]); });
    std::vector<std::size_t> new_id(nodes.size());
    nodes_.reserve(nodes.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        new_id[order[k]] = k;
        nodes_.push_back(std::move(nodes[order[k]]));
        if (nodes_.back().weight.rank() != rank_ || nodes_.back().word.rank() != rank_)
            throw std::invalid_argument("node rank mismatch");
        if (!index_.emplace(nodes_.back().word, k).second)
            throw std::invalid_argument("duplicate node " + nodes_.back().word.to_string());
    }

    const auto labels = stored_labels(rank_);
    out_.assign(labels.size(), std::vector<std::size_t>(nodes_.size(), npos));
    in_ = out_;
    edges_.reserve(edges.size());
    for (const CrystalEdge& e : edges) {
        if (e.source >= nodes_.size() || e.target >= nodes_.size())
            throw std::invalid_argument("edge endpoint out of range");
        CrystalEdge ed{new_id[e.source], e.label, new_id[e.target]};
        const std::size_t s = slot(ed.label);
        if (out_[s][ed.source] != npos || in_[s][ed.target] != npos)
            throw std::invalid_argument("label " + ed.label.to_string() +
                                        " arrows do not form a partial matching");
        out_[s][ed.source] = ed.target;
        in_[s][ed.target] = ed.source;
        edges_.push_back(ed);
    }
    std::sort(edges_.begin(), edges_.end());
}

std::size_t CrystalGraph::slot(Label l) const {
    if (!l.odd && l.index >= 1 && l.index < rank_)
        return static_cast<std::size_t>(l.index - 1);
    if (l.odd && l.index == 1 && rank_ >= 2)
        return static_cast<std::size_t>(rank_ - 1);
    throw std::invalid_argument("label " + l.to_string() + " is not stored in a rank " +
                                std::to_string(rank_) + " crystal graph");
}

std::optional<std::size_t> CrystalGraph::find(const Word& w) const {
    auto it = index_.find(w);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> CrystalGraph::f(Label l, std::size_t id) const {
    const std::size_t t = out_[slot(l)].at(id);
    if (t == npos)
        return std::nullopt;
    return t;
}

std::optional<std::size_t> CrystalGraph::e(Label l, std::size_t id) const {
    const std::size_t t = in_[slot(l)].at(id);
    if (t == npos)
        return std::nullopt;
    return t;
}

std::vector<std::string> CrystalGraph::invariant_violations() const {
    std::vector<std::string> out;
    for (const CrystalNode& n : nodes_)
        if (!n.weight.is_nonnegative())
            out.push_back("node " + n.word.to_string() + " has weight outside P>=0");
    for (const CrystalEdge& e : edges_) {
        const Weight expected =
            nodes_[e.source].weight - Weight::simple_root(rank_, e.label.odd ? 1 : e.label.index);
        if (nodes_[e.target].weight != expected)
            out.push_back("arrow " + nodes_[e.source].word.to_string() + " -" + e.label.to_string() +
                          "-> " + nodes_[e.target].word.to_string() + " breaks weights");
    }
    return out;
}

CrystalGraph CrystalGraph::induced(const std::vector<std::size_t>& ids) const {
    std::vector<std::size_t> local(nodes_.size(), npos);
    std::vector<CrystalNode> nodes;
    nodes.reserve(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
        local[ids[k]] = k;
        nodes.push_back(nodes_[ids[k]]);
    }
    std::vector<CrystalEdge> edges;
    for (const CrystalEdge& e : edges_)
        if (local[e.source] != npos && local[e.target] != npos)
            edges.push_back(CrystalEdge{local[e.source], e.label, local[e.target]});
    return CrystalGraph(rank_, std::move(nodes), std::move(edges));
}

std::vector<CrystalGraph> connected_components(const CrystalGraph& g) {
    std::vector<std::size_t> comp(g.size(), npos);
    std::vector<std::vector<std::size_t>> members;
    const auto labels = stored_labels(g.rank());
    for (std::size_t start = 0; start < g.size(); ++start) {
        if (comp[start] != npos)
            continue;
        const std::size_t c = members.size();
        members.emplace_back();
        std::deque<std::size_t> queue{start};
        comp[start] = c;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            members[c].push_back(u);
            for (Label l : labels)
                for (auto v : {g.f(l, u), g.e(l, u)})
                    if (v && comp[*v] == npos) {
                        comp[*v] = c;
                        queue.push_back(*v);
                    }
        }
    }
    std::vector<CrystalGraph> out;
    out.reserve(members.size());
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        out.push_back(g.induced(m));
    }
    return out;
}

bool is_connected(const CrystalGraph& g) { return connected_components(g).size() <= 1; }

std::vector<std::size_t> highest_weight_nodes(const CrystalGraph& g) {
    const GraphCrystal c(g);
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < g.size(); ++b)
        if (is_highest_weight(c, b))
            out.push_back(b);
    return out;
}

CrystalGraph tensor_product(const CrystalGraph& left, const CrystalGraph& right) {
    if (left.rank() != right.rank())
        throw std::invalid_argument("tensor factors have different ranks");
    const int n = left.rank();
    const GraphCrystal lc(left), rc(right);
    const std::size_t nl = left.size(), nr = right.size();

    std::vector<std::vector<int>> phi_left(static_cast<std::size_t>(n)),
        eps_right(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) {
        auto& pl = phi_left[static_cast<std::size_t>(i)];
        auto& er = eps_right[static_cast<std::size_t>(i)];
        for (std::size_t a = 0; a < nl; ++a)
            pl.push_back(string_phi(lc, i, a));
        for (std::size_t b = 0; b < nr; ++b)
            er.push_back(string_eps(rc, i, b));
    }

    std::vector<CrystalNode> nodes;
    nodes.reserve(nl * nr);
    for (std::size_t a = 0; a < nl; ++a)
        for (std::size_t b = 0; b < nr; ++b)
            nodes.push_back(CrystalNode{left.node(a).word.concat(right.node(b).word),
                                        left.node(a).weight + right.node(b).weight, std::nullopt});

    std::vector<CrystalEdge> edges;
    auto pair_id = [nr](std::size_t a, std::size_t b) { return a * nr + b; };
    for (std::size_t a = 0; a < nl; ++a) {
        for (std::size_t b = 0; b < nr; ++b) {
            for (int i = 1; i < n; ++i) {
                const auto iu = static_cast<std::size_t>(i);
                if (phi_left[iu][a] > eps_right[iu][b]) {
                    edges.push_back({pair_id(a, b), Label::even(i), pair_id(*lc.f(i, a), b)});
                } else if (auto t = rc.f(i, b)) {
                    edges.push_back({pair_id(a, b), Label::even(i), pair_id(a, *t)});
                }
            }
            if (n >= 2) {
                const Weight& wt2 = right.node(b).weight;
                if (wt2.pairing(1) == 0 && wt2.pairing(2) == 0) {
                    if (auto t = lc.fbar1(a))
                        edges.push_back({pair_id(a, b), Label::bar(1), pair_id(*t, b)});
                } else if (auto t = rc.fbar1(b)) {
                    edges.push_back({pair_id(a, b), Label::bar(1), pair_id(a, *t)});
                }
            }
        }
    }
    return CrystalGraph(n, std::move(nodes), std::move(edges));
}

std::optional<std::vector<std::size_t>> isomorphic(const CrystalGraph& g1, const CrystalGraph& g2) {
    const auto hw1 = highest_weight_nodes(g1);
    const auto hw2 = highest_weight_nodes(g2);
    if (hw1.size() != 1 || hw2.size() != 1)
        throw std::invalid_argument("isomorphism test needs exactly one highest weight node per graph (got " +
                                    std::to_string(hw1.size()) + " and " + std::to_string(hw2.size()) +
                                    ")");
    if (g1.rank() != g2.rank() || g1.size() != g2.size())
        return std::nullopt;
    if (g1.node(hw1[0]).weight != g2.node(hw2[0]).weight)
        return std::nullopt;

    std::vector<std::size_t> map(g1.size(), npos), back(g2.size(), npos);
    map[hw1[0]] = hw2[0];
    back[hw2[0]] = hw1[0];
    std::deque<std::size_t> queue{hw1[0]};
    const auto labels = stored_labels(g1.rank());
    auto bind = [&](std::optional<std::size_t> u, std::optional<std::size_t> v) {
        if (u.has_value() != v.has_value())
            return false;
        if (!u)
            return true;
        if (map[*u] == npos && back[*v] == npos) {
            if (g1.node(*u).weight != g2.node(*v).weight)
                return false;
            map[*u] = *v;
            back[*v] = *u;
            queue.push_back(*u);
            return true;
        }
        return map[*u] == *v;
    };
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        const std::size_t v = map[u];
        for (Label l : labels)
            if (!bind(g1.f(l, u), g2.f(l, v)) || !bind(g1.e(l, u), g2.e(l, v)))
                return std::nullopt;
    }
    if (std::find(map.begin(), map.end(), npos) != map.end())
        return std::nullopt;
    return map;
}

bool same_crystal(const CrystalGraph& a, const CrystalGraph& b) {
    if (a.rank() != b.rank() || a.size() != b.size())
        return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a.node(k).word != b.node(k).word || a.node(k).weight != b.node(k).weight)
            return false;
    return a.edges() == b.edges();
}

} // namespace qcrystal
