#pragma once

// Enumerative checks of the structure of B(Y_lambda) and of B ⊗ B(Y_lambda).
// All checks report instead of throwing; a VerificationFailure raised while
// building a crystal becomes a failed record carrying its message.

#include "qcrystal/crystal_graph.hpp"
#include "qcrystal/report.hpp"
#include "qcrystal/shapes.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qcrystal {

struct LabelledComponent {
    CrystalGraph graph;
    // mu with graph ≅ B(Y_mu); empty when no candidate matched.
    std::optional<StrictPartition> label;
};

struct Decomposition {
    std::vector<LabelledComponent> components;
    Report report; // one record per component
};

// Tensor product left ⊗ right split into components, each labelled by the
// strict partition of its highest weight when it is isomorphic to B(Y_mu).
Decomposition decompose_product(const CrystalGraph& left, const CrystalGraph& right);

// B(Y_lambda) is connected with a single highest weight vector, of weight lambda.
Report check_theorem_b(const StrictPartition& lambda, int rank);

// B ⊗ B(Y_lambda) has components labelled exactly by {lambda + eps_j strict}.
Report check_theorem_e3(const StrictPartition& lambda, int rank);

// Highest weight vectors of B ⊗ B(Y_lambda) are exactly
// 1 ⊗ f_1 ... f_{j-1} b_lambda for lambda + eps_j strict.
Report verify_hw_formula(const StrictPartition& lambda, int rank);

// Row and column readings give the same arrows on B(Y_lambda).
Report check_reading_independence(const StrictPartition& lambda, int rank);

struct ConjectureEntry {
    Word vector;                     // highest weight vector of B(lambda) ⊗ B
    std::optional<std::string> expression; // "f2bar f1bar b_lambda ⊗ 1" or none found
};

struct ConjectureReport {
    StrictPartition lambda;
    int rank = 0;
    std::size_t explored = 0;
    std::vector<ConjectureEntry> entries;
};

// Lists the highest weight vectors of B(Y_lambda) ⊗ B and searches,
// breadth first over products of odd operators f_ibar applied to b_lambda,
// for an expression t ⊗ j. Depth is bounded by |lambda| + 1 and at most
// `budget` tableaux are expanded. Descriptive only.
ConjectureReport explore_conjecture(const StrictPartition& lambda, int rank, std::size_t budget = 100000);

} // namespace qcrystal
