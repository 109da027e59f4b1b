#include "qcrystal/tableau_crystal.hpp"

#include "qcrystal/errors.hpp"
#include "qcrystal/gl_crystal.hpp"
#include "qcrystal/q_crystal.hpp"

#include <stdexcept>

namespace qcrystal {

std::optional<Tableau> tableau_operator(CrystalOp op, const Tableau& t, Reading reading) {
    if (op.label.odd && op.label.index != 1)
        throw std::invalid_argument("tableau operators support only the odd label 1bar");
    const Word w = t.read(reading);
    std::optional<Word> moved;
    if (op.label.odd)
        moved = op.raising ? ebar1_fast(w) : fbar1_fast(w);
    else
        moved = op.raising ? e_even(op.label.index, w) : f_even(op.label.index, w);
    if (!moved)
        return std::nullopt;

    const auto order = t.reading_order(reading);
    std::vector<Letter> entries(t.entries().begin(), t.entries().end());
    for (std::size_t p = 0; p < w.size(); ++p)
        if ((*moved)[p] != w[p])
            entries[order[p]] = (*moved)[p];
    if (!Tableau::is_semistandard(t.shape(), entries))
        throw VerificationFailure(op.to_string() + " on tableau with reading word " + w.to_string() +
                                  " gives a non-semistandard filling");
    return Tableau(t.shape_ptr(), t.rank(), std::move(entries));
}

std::vector<Tableau> highest_weight_tableaux(const StrictPartition& lambda, int rank, Reading reading) {
    const TableauCrystal c(rank, reading);
    std::vector<Tableau> out;
    for (const Tableau& t : enumerate_ssyt(shape_from_partition(lambda), rank))
        if (is_highest_weight(c, t))
            out.push_back(t);
    return out;
}

Tableau b_lambda(const StrictPartition& lambda, int rank, Reading reading) {
    auto hw = highest_weight_tableaux(lambda, rank, reading);
    if (hw.size() != 1)
        throw VerificationFailure("B(Y_" + lambda.to_string() + ") for n=" + std::to_string(rank) + " has " +
                                  std::to_string(hw.size()) + " highest weight vectors");
    return std::move(hw.front());
}

CrystalGraph crystal_of_shape(const StrictPartition& lambda, int rank, Reading reading) {
    const TableauCrystal c(rank, reading);
    const auto tableaux = enumerate_ssyt(shape_from_partition(lambda), rank);
    return graph_from_elements(c, tableaux, [reading](const Tableau& t) {
        return CrystalNode{t.read(reading), t.weight(), t};
    });
}

TableauEdgeSet tableau_edge_set(const CrystalGraph& g) {
    TableauEdgeSet out;
    for (const CrystalEdge& e : g.edges()) {
        const auto& src = g.node(e.source).tableau;
        const auto& dst = g.node(e.target).tableau;
        if (!src || !dst)
            throw std::invalid_argument("graph nodes are not tableaux");
        out.emplace(std::vector<Letter>(src->entries().begin(), src->entries().end()), e.label,
                    std::vector<Letter>(dst->entries().begin(), dst->entries().end()));
    }
    return out;
}

} // namespace qcrystal
