#pragma once

// U_q(q(n)) acting on V^{\otimes N} with exact coefficients in Q(q).
//
// V has basis v_1..v_n (even) and v_1bar..v_nbar (odd). On V the generators
// act by the explicit table; on V ⊗ V^{\otimes(N-1)} the generators q^h, e_i,
// f_i and kbar_1 act through the comultiplication with the super sign rule
// (a ⊗ b)(x ⊗ y) = (-1)^{|b||x|} ax ⊗ by, and the remaining odd generators
// are produced from those through the defining relations.

#include "qcrystal/crystal_graph.hpp"
#include "qcrystal/laurent.hpp"
#include "qcrystal/report.hpp"
#include "qcrystal/weight.hpp"
#include "qcrystal/word.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qcrystal::qrep {

// A tensor of basis symbols; symbol j > 0 is v_j, symbol -j is v_jbar.
class BasisTensor {
  public:
    BasisTensor() = default;
    explicit BasisTensor(std::vector<int> symbols) : symbols_(std::move(symbols)) {}
    BasisTensor(std::initializer_list<int> symbols) : symbols_(symbols) {}

    std::span<const int> symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }
    int parity() const noexcept;
    Word letters(int rank) const;
    Weight weight(int rank) const;

    friend bool operator==(const BasisTensor&, const BasisTensor&) = default;
    friend auto operator<=>(const BasisTensor&, const BasisTensor&) = default;

    // "v1⊗v2bar"
    std::string to_string() const;

  private:
    std::vector<int> symbols_;
};

// Finite linear combination of basis tensors; zero coefficients are never stored.
class SuperVector {
  public:
    using Terms = std::map<BasisTensor, LaurentScalar>;

    SuperVector() = default;
    static SuperVector basis(BasisTensor b);

    void add(const BasisTensor& b, const LaurentScalar& c);
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    LaurentScalar coefficient(const BasisTensor& b) const;

    SuperVector& operator+=(const SuperVector& o);
    SuperVector& operator-=(const SuperVector& o);
    SuperVector& operator*=(const LaurentScalar& c);
    friend SuperVector operator+(SuperVector a, const SuperVector& b) { return a += b; }
    friend SuperVector operator-(SuperVector a, const SuperVector& b) { return a -= b; }
    friend SuperVector operator*(const LaurentScalar& c, SuperVector v) { return v *= c; }
    friend bool operator==(const SuperVector&, const SuperVector&) = default;

    std::string to_string() const;

  private:
    Terms terms_;
};

// Basis of V^{\otimes N} in a fixed order (first factor most significant).
class TensorSpace {
  public:
    TensorSpace(int rank, int power);

    int rank() const noexcept { return rank_; }
    int power() const noexcept { return power_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const BasisTensor& basis(std::size_t idx) const { return basis_.at(idx); }
    std::size_t index_of(const BasisTensor& b) const;
    const Weight& weight(std::size_t idx) const { return weights_.at(idx); }
    const std::map<Weight, std::vector<std::size_t>>& weight_spaces() const noexcept { return by_weight_; }
    // l_b: the 2^N basis tensors whose letters spell b.
    const std::map<Word, std::vector<std::size_t>>& letter_classes() const noexcept { return by_letters_; }

  private:
    int rank_, power_;
    std::vector<BasisTensor> basis_;
    std::vector<Weight> weights_;
    std::map<Weight, std::vector<std::size_t>> by_weight_;
    std::map<Word, std::vector<std::size_t>> by_letters_;
};

enum class Parity { Even = 0, Odd = 1 };

using IndexVector = std::map<std::size_t, LaurentScalar>;

// Linear operator stored by columns (the image of each basis tensor).
class Operator {
  public:
    Operator(std::shared_ptr<const TensorSpace> space, Parity parity);

    static Operator identity(std::shared_ptr<const TensorSpace> space);

    const std::shared_ptr<const TensorSpace>& space() const noexcept { return space_; }
    Parity parity() const noexcept { return parity_; }
    const IndexVector& column(std::size_t idx) const { return columns_.at(idx); }
    void set_column(std::size_t idx, IndexVector v);
    bool is_zero() const noexcept;

    IndexVector apply(const IndexVector& v) const;
    SuperVector apply(const SuperVector& v) const;

    Operator& operator+=(const Operator& o);
    Operator& operator-=(const Operator& o);
    Operator& operator*=(const LaurentScalar& c);
    friend Operator operator+(Operator a, const Operator& b) { return a += b; }
    friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
    friend Operator operator*(const LaurentScalar& c, Operator a) { return a *= c; }
    Operator operator-() const;
    // Composition: (A * B)(x) = A(B(x)).
    friend Operator operator*(const Operator& a, const Operator& b);
    friend bool operator==(const Operator& a, const Operator& b);

    // First basis index on which the two operators differ.
    std::optional<std::size_t> first_difference(const Operator& o) const;

  private:
    void check_compatible(const Operator& o) const;
    std::shared_ptr<const TensorSpace> space_;
    Parity parity_;
    std::vector<IndexVector> columns_;
};

IndexVector to_index_vector(const TensorSpace& space, const SuperVector& v);
SuperVector to_super_vector(const TensorSpace& space, const IndexVector& v);

struct Generator {
    enum class Kind { E, F, EBar, FBar, KBar, QPow };
    Kind kind = Kind::E;
    int index = 1;
    std::vector<int> h; // for QPow: coefficients of k_1..k_n

    static Generator e(int i) { return {Kind::E, i, {}}; }
    static Generator f(int i) { return {Kind::F, i, {}}; }
    static Generator ebar(int i) { return {Kind::EBar, i, {}}; }
    static Generator fbar(int i) { return {Kind::FBar, i, {}}; }
    static Generator kbar(int j) { return {Kind::KBar, j, {}}; }
    static Generator qpow(std::vector<int> h) { return {Kind::QPow, 0, std::move(h)}; }

    Parity parity() const noexcept;
    std::string to_string() const;
};

// The module V^{\otimes N}. Operators are built lazily and cached.
class QModule {
  public:
    // With derive_odd set, a single factor also builds e_ibar, f_ibar and
    // kbar_j (j >= 2) from e_i, f_i, kbar_1 through the relations instead of
    // reading them from the table.
    QModule(int rank, int power, bool derive_odd = false);
    ~QModule();
    QModule(const QModule&) = delete;
    QModule& operator=(const QModule&) = delete;

    int rank() const noexcept { return rank_; }
    int power() const noexcept { return power_; }
    const std::shared_ptr<const TensorSpace>& space() const noexcept { return space_; }

    const Operator& e(int i) const;
    const Operator& f(int i) const;
    const Operator& ebar(int i) const;
    const Operator& fbar(int i) const;
    const Operator& kbar(int j) const;
    Operator qpow(const std::vector<int>& h) const;
    // q^{c k_j}
    Operator qpow_k(int j, int c = 1) const;
    Operator identity() const { return Operator::identity(space_); }
    Operator generator(const Generator& g) const;

    // First tensor factor (V) and the remaining factors; only for power >= 2.
    const QModule& head() const;
    const QModule& tail() const;

  private:
    bool uses_table() const noexcept { return power_ == 1 && !derive_odd_; }
    void check_even(int i) const;
    Operator build_e(int i) const;
    Operator build_f(int i) const;
    Operator build_kbar1() const;

    int rank_, power_;
    bool derive_odd_;
    std::shared_ptr<const TensorSpace> space_;
    std::unique_ptr<QModule> head_, tail_;
    mutable std::map<std::pair<int, int>, Operator> cache_;
};

// (a ⊗ b)(x ⊗ y) = (-1)^{|b||x|} a(x) ⊗ b(y) on V ⊗ V^{\otimes(N-1)}.
Operator tensor(const Operator& a, const Operator& b, std::shared_ptr<const TensorSpace> target);

// Action of a generator: the explicit table when power = 1, the
// comultiplication otherwise.
SuperVector act(const QModule& m, const Generator& g, const SuperVector& v);

// Each defining relation instantiated for all admissible indices and
// checked as an operator identity on V^{\otimes N}.
Report verify_relations(int rank, int power);

// Kashiwara operators at the q level.
struct QKashiwaraOp {
    enum class Kind { E, F, EBar1, FBar1, KTilde1 };
    Kind kind = Kind::E;
    int index = 1;

    static QKashiwaraOp e(int i) { return {Kind::E, i}; }
    static QKashiwaraOp f(int i) { return {Kind::F, i}; }
    static QKashiwaraOp ebar1() { return {Kind::EBar1, 1}; }
    static QKashiwaraOp fbar1() { return {Kind::FBar1, 1}; }
    static QKashiwaraOp ktilde1() { return {Kind::KTilde1, 1}; }
    std::string to_string() const;
};

class KashiwaraOperators {
  public:
    explicit KashiwaraOperators(const QModule& m);
    ~KashiwaraOperators();

    // Even: via the i-string decomposition u = sum_k f_i^(k) u_k, e_i u_k = 0.
    // Odd: k~_1 = q^{k_1-1} kbar_1, e~_1bar = -(e_1 kbar_1 - q kbar_1 e_1) q^{k_1-1},
    // f~_1bar = -(kbar_1 f_1 - q f_1 kbar_1) q^{k_2-1}.
    const Operator& get(QKashiwaraOp op) const;

    struct StringPiece {
        int k;
        SuperVector top; // u_k, annihilated by e_i
    };
    // u must be a weight vector.
    std::vector<StringPiece> string_decomposition(int i, const SuperVector& u) const;

    const QModule& module() const noexcept { return *module_; }

  private:
    struct StringData;
    const StringData& string_data(int i, const Weight& wt) const;
    Operator build_even(int i, bool raising) const;

    const QModule* module_;
    mutable std::map<std::pair<int, int>, Operator> cache_;
    mutable std::map<std::pair<int, Weight>, std::unique_ptr<StringData>> strings_;
};

SuperVector q_kashiwara(const KashiwaraOperators& ops, QKashiwaraOp op, const SuperVector& v);

// f^{(k)} = f^k / [k]!
IndexVector divided_power(const Operator& f, int k, const IndexVector& v);

// Comultiplication formulas for k~_1, e~_1bar, f~_1bar on V ⊗ V.
Report verify_comult_odd(int rank);

// Lattice stability, q = 0 residues against the crystal B^{\otimes N},
// dim l_b = 2^N, k~_1 l_b ⊂ l_b, and e~_1bar^2 = f~_1bar^2 = 0 on L/qL.
Report residue_check(int rank, int power);

// Crystal graph read off the q = 0 residues of f~_i and f~_1bar. Throws
// VerificationFailure if a residue does not send some l_b into a single l_b'.
CrystalGraph residue_graph(int rank, int power);

} // namespace qcrystal::qrep
