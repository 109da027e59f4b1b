#pragma once

// The q(n)-crystal B(Y_lambda): semistandard tableaux embedded into words by
// a reading, with operators pulled back from B^{\otimes |lambda|}.

#include "qcrystal/crystal.hpp"
#include "qcrystal/crystal_graph.hpp"
#include "qcrystal/shapes.hpp"
#include "qcrystal/word.hpp"

#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace qcrystal {

// Apply the word operator to the reading word and put the changed letter
// back in its box. Supported labels: even i and 1bar. Throws
// VerificationFailure if the result is not semistandard.
std::optional<Tableau> tableau_operator(CrystalOp op, const Tableau& t, Reading reading = Reading::Row);

class TableauCrystal {
  public:
    using element_type = Tableau;
    TableauCrystal(int rank, Reading reading) : rank_(rank), reading_(reading) {}

    int rank() const noexcept { return rank_; }
    std::optional<Tableau> e(int i, const Tableau& t) const {
        return tableau_operator(CrystalOp::e(Label::even(i)), t, reading_);
    }
    std::optional<Tableau> f(int i, const Tableau& t) const {
        return tableau_operator(CrystalOp::f(Label::even(i)), t, reading_);
    }
    std::optional<Tableau> ebar1(const Tableau& t) const {
        return tableau_operator(CrystalOp::e(Label::bar(1)), t, reading_);
    }
    std::optional<Tableau> fbar1(const Tableau& t) const {
        return tableau_operator(CrystalOp::f(Label::bar(1)), t, reading_);
    }
    Weight weight(const Tableau& t) const { return t.weight(); }

  private:
    int rank_;
    Reading reading_;
};

// The unique highest weight tableau of B(Y_lambda). Throws
// VerificationFailure when there are zero or several.
Tableau b_lambda(const StrictPartition& lambda, int rank, Reading reading = Reading::Row);

// All highest weight tableaux (exactly one when the theory holds).
std::vector<Tableau> highest_weight_tableaux(const StrictPartition& lambda, int rank,
                                             Reading reading = Reading::Row);

CrystalGraph crystal_of_shape(const StrictPartition& lambda, int rank, Reading reading = Reading::Row);

// Arrows of a tableau crystal keyed by fillings, independent of the reading
// used to build node words.
using TableauEdgeSet = std::set<std::tuple<std::vector<Letter>, Label, std::vector<Letter>>>;
TableauEdgeSet tableau_edge_set(const CrystalGraph& g);

} // namespace qcrystal
