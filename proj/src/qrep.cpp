#include "qcrystal/qrep.hpp"

#include "qcrystal/errors.hpp"
#include "qcrystal/gl_crystal.hpp"
#include "qcrystal/q_crystal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qcrystal::qrep {

namespace {

using Scalar = LaurentScalar;
using Dense = std::vector<std::vector<Scalar>>;

int symbol_from_code(int code, int rank) { return code < rank ? code + 1 : -(code - rank + 1); }
int code_from_symbol(int s, int rank) { return s > 0 ? s - 1 : rank + (-s) - 1; }

void add_term(IndexVector& v, std::size_t idx, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = v.try_emplace(idx, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            v.erase(it);
    }
}

std::size_t complexity(const Scalar& s) {
    return s.numerator().coeffs().size() + s.denominator().coeffs().size();
}

// Row reduction in place; returns pivot columns in order.
std::vector<std::size_t> row_reduce(Dense& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t best = m.size();
        for (std::size_t r = row; r < m.size(); ++r)
            if (!m[r][col].is_zero() && (best == m.size() || complexity(m[r][col]) < complexity(m[best][col])))
                best = r;
        if (best == m.size())
            continue;
        std::swap(m[row], m[best]);
        const Scalar inv = m[row][col].inverse();
        for (auto& x : m[row])
            if (!x.is_zero())
                x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col].is_zero())
                continue;
            const Scalar factor = m[r][col];
            for (std::size_t c = col; c < m[r].size(); ++c)
                if (!m[row][c].is_zero())
                    m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Scalar>> nullspace(Dense m, std::size_t cols) {
    const auto pivots = row_reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Scalar>> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(cols);
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free];
        out.push_back(std::move(v));
    }
    return out;
}

Dense invert(const Dense& a) {
    const std::size_t n = a.size();
    Dense m(n, std::vector<Scalar>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            m[r][c] = a[r][c];
        m[r][n + r] = Scalar(1);
    }
    const auto pivots = row_reduce(m, n);
    if (pivots.size() != n)
        throw VerificationFailure("singular string decomposition matrix");
    Dense out(n, std::vector<Scalar>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out[r][c] = m[r][n + c];
    return out;
}

std::vector<int> unit_h(int rank, int j, int c) {
    std::vector<int> h(static_cast<std::size_t>(rank), 0);
    h[static_cast<std::size_t>(j - 1)] = c;
    return h;
}

std::string index_vector_string(const TensorSpace& space, const IndexVector& v) {
    return to_super_vector(space, v).to_string();
}

} // namespace

// ---- BasisTensor / SuperVector ------------------------------------------

int BasisTensor::parity() const noexcept {
    int p = 0;
    for (int s : symbols_)
        p ^= s < 0 ? 1 : 0;
    return p;
}

Word BasisTensor::letters(int rank) const {
    std::vector<Letter> ls;
    ls.reserve(symbols_.size());
    for (int s : symbols_)
        ls.push_back(s > 0 ? s : -s);
    return Word(rank, std::move(ls));
}

Weight BasisTensor::weight(int rank) const { return letters(rank).weight(); }

std::string BasisTensor::to_string() const {
    std::string s;
    for (std::size_t k = 0; k < symbols_.size(); ++k) {
        if (k)
            s += "⊗";
        const int x = symbols_[k];
        s += "v" + std::to_string(x > 0 ? x : -x) + (x < 0 ? "bar" : "");
    }
    return s;
}

SuperVector SuperVector::basis(BasisTensor b) {
    SuperVector v;
    v.terms_.emplace(std::move(b), Scalar(1));
    return v;
}

void SuperVector::add(const BasisTensor& b, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(b, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Scalar SuperVector::coefficient(const BasisTensor& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
}

SuperVector& SuperVector::operator+=(const SuperVector& o) {
    for (const auto& [b, c] : o.terms_)
        add(b, c);
    return *this;
}

SuperVector& SuperVector::operator-=(const SuperVector& o) {
    for (const auto& [b, c] : o.terms_)
        add(b, -c);
    return *this;
}

SuperVector& SuperVector::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, x] : terms_)
        x *= c;
    return *this;
}

std::string SuperVector::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [b, c] : terms_) {
        if (!s.empty())
            s += " + ";
        s += c == Scalar(1) ? b.to_string() : "(" + c.to_string() + ")*" + b.to_string();
    }
    return s;
}

// ---- TensorSpace ----------------------------------------------------------

TensorSpace::TensorSpace(int rank, int power) : rank_(rank), power_(power) {
    if (rank < 1)
        throw std::invalid_argument("rank must be positive");
    if (power < 1)
        throw std::invalid_argument("tensor power must be positive");
    const std::size_t base = static_cast<std::size_t>(2 * rank);
    std::size_t dim = 1;
    for (int k = 0; k < power; ++k)
        dim *= base;
    basis_.reserve(dim);
    weights_.reserve(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        std::vector<int> symbols(static_cast<std::size_t>(power));
        std::size_t rest = idx;
        for (int k = power; k-- > 0;) {
            symbols[static_cast<std::size_t>(k)] = symbol_from_code(static_cast<int>(rest % base), rank);
            rest /= base;
        }
        BasisTensor b(std::move(symbols));
        weights_.push_back(b.weight(rank));
        by_weight_[weights_.back()].push_back(idx);
        by_letters_[b.letters(rank)].push_back(idx);
        basis_.push_back(std::move(b));
    }
}

std::size_t TensorSpace::index_of(const BasisTensor& b) const {
    if (b.size() != static_cast<std::size_t>(power_))
        throw std::invalid_argument("basis tensor " + b.to_string() + " has the wrong length");
    const std::size_t base = static_cast<std::size_t>(2 * rank_);
    std::size_t idx = 0;
    for (int s : b.symbols()) {
        if (s == 0 || s > rank_ || -s > rank_)
            throw std::invalid_argument("basis symbol out of range in " + b.to_string());
        idx = idx * base + static_cast<std::size_t>(code_from_symbol(s, rank_));
    }
    return idx;
}

IndexVector to_index_vector(const TensorSpace& space, const SuperVector& v) {
    IndexVector out;
    for (const auto& [b, c] : v.terms())
        out.emplace(space.index_of(b), c);
    return out;
}

SuperVector to_super_vector(const TensorSpace& space, const IndexVector& v) {
    SuperVector out;
    for (const auto& [idx, c] : v)
        out.add(space.basis(idx), c);
    return out;
}

// ---- Operator -------------------------------------------------------------

Operator::Operator(std::shared_ptr<const TensorSpace> space, Parity parity)
    : space_(std::move(space)), parity_(parity), columns_(space_->dimension()) {}

Operator Operator::identity(std::shared_ptr<const TensorSpace> space) {
    Operator op(space, Parity::Even);
    for (std::size_t x = 0; x < op.columns_.size(); ++x)
        op.columns_[x].emplace(x, Scalar(1));
    return op;
}

void Operator::set_column(std::size_t idx, IndexVector v) {
    for (auto it = v.begin(); it != v.end();)
        it = it->second.is_zero() ? v.erase(it) : std::next(it);
    columns_.at(idx) = std::move(v);
}

bool Operator::is_zero() const noexcept {
    return std::all_of(columns_.begin(), columns_.end(), [](const IndexVector& c) { return c.empty(); });
}

IndexVector Operator::apply(const IndexVector& v) const {
    IndexVector out;
    for (const auto& [x, c] : v)
        for (const auto& [y, d] : columns_.at(x))
            add_term(out, y, d * c);
    return out;
}

SuperVector Operator::apply(const SuperVector& v) const {
    return to_super_vector(*space_, apply(to_index_vector(*space_, v)));
}

void Operator::check_compatible(const Operator& o) const {
    if (space_ != o.space_ && (space_->rank() != o.space_->rank() || space_->power() != o.space_->power()))
        throw std::invalid_argument("operators act on different spaces");
}

Operator& Operator::operator+=(const Operator& o) {
    check_compatible(o);
    for (std::size_t x = 0; x < columns_.size(); ++x)
        for (const auto& [y, c] : o.columns_[x])
            add_term(columns_[x], y, c);
    return *this;
}

Operator& Operator::operator-=(const Operator& o) {
    check_compatible(o);
    for (std::size_t x = 0; x < columns_.size(); ++x)
        for (const auto& [y, c] : o.columns_[x])
            add_term(columns_[x], y, -c);
    return *this;
}

Operator& Operator::operator*=(const Scalar& c) {
    for (auto& col : columns_) {
        if (c.is_zero())
            col.clear();
        for (auto& [y, x] : col)
            x *= c;
    }
    return *this;
}

Operator Operator::operator-() const {
    Operator r = *this;
    r *= Scalar(-1);
    return r;
}

Operator operator*(const Operator& a, const Operator& b) {
    a.check_compatible(b);
    Operator r(a.space_, a.parity_ == b.parity_ ? Parity::Even : Parity::Odd);
    for (std::size_t x = 0; x < r.columns_.size(); ++x)
        r.columns_[x] = a.apply(b.columns_[x]);
    return r;
}

bool operator==(const Operator& a, const Operator& b) { return !a.first_difference(b).has_value(); }

std::optional<std::size_t> Operator::first_difference(const Operator& o) const {
    check_compatible(o);
    for (std::size_t x = 0; x < columns_.size(); ++x)
        if (columns_[x] != o.columns_[x])
            return x;
    return std::nullopt;
}

Operator tensor(const Operator& a, const Operator& b, std::shared_ptr<const TensorSpace> target) {
    const TensorSpace& va = *a.space();
    const std::size_t tail_dim = b.space()->dimension();
    if (va.power() != 1 || target->rank() != va.rank() || b.space()->rank() != va.rank() ||
        target->power() != 1 + b.space()->power())
        throw std::invalid_argument("tensor: factor spaces do not match the target");
    const bool odd_b = b.parity() == Parity::Odd;
    Operator out(target, a.parity() == b.parity() ? Parity::Even : Parity::Odd);
    for (std::size_t x = 0; x < va.dimension(); ++x) {
        const bool flip = odd_b && va.basis(x).parity() == 1;
        for (std::size_t y = 0; y < tail_dim; ++y) {
            IndexVector col;
            for (const auto& [x2, c] : a.column(x))
                for (const auto& [y2, d] : b.column(y))
                    add_term(col, x2 * tail_dim + y2, flip ? -(c * d) : c * d);
            out.set_column(x * tail_dim + y, std::move(col));
        }
    }
    return out;
}

// ---- Generators -----------------------------------------------------------

Parity Generator::parity() const noexcept {
    switch (kind) {
    case Kind::EBar:
    case Kind::FBar:
    case Kind::KBar:
        return Parity::Odd;
    default:
        return Parity::Even;
    }
}

std::string Generator::to_string() const {
    const std::string i = std::to_string(index);
    switch (kind) {
    case Kind::E:
        return "e" + i;
    case Kind::F:
        return "f" + i;
    case Kind::EBar:
        return "e" + i + "bar";
    case Kind::FBar:
        return "f" + i + "bar";
    case Kind::KBar:
        return "k" + i + "bar";
    case Kind::QPow:
        break;
    }
    std::string s = "q^(";
    for (std::size_t j = 0; j < h.size(); ++j)
        s += (j ? "," : "") + std::to_string(h[j]);
    return s + ")";
}

// ---- QModule --------------------------------------------------------------

namespace {

enum Slot { kE = 0, kF, kEBar, kFBar, kKBar };

// Action of a generator on a single basis symbol of V.
std::optional<int> table_image(Slot kind, int i, int s) {
    const int j = s > 0 ? s : -s;
    const bool bar = s < 0;
    switch (kind) {
    case kE:
        if (j == i + 1)
            return bar ? -i : i;
        break;
    case kF:
        if (j == i)
            return bar ? -(i + 1) : i + 1;
        break;
    case kEBar:
        if (j == i + 1)
            return bar ? i : -i;
        break;
    case kFBar:
        if (j == i)
            return bar ? i + 1 : -(i + 1);
        break;
    case kKBar:
        if (j == i)
            return -s;
        break;
    }
    return std::nullopt;
}

} // namespace

QModule::QModule(int rank, int power, bool derive_odd)
    : rank_(rank), power_(power), derive_odd_(derive_odd), space_(std::make_shared<TensorSpace>(rank, power)) {
    if (power >= 2) {
        head_ = std::make_unique<QModule>(rank, 1, derive_odd);
        tail_ = std::make_unique<QModule>(rank, power - 1, derive_odd);
    }
}

QModule::~QModule() = default;

const QModule& QModule::head() const {
    if (!head_)
        throw std::logic_error("single tensor factor has no head/tail split");
    return *head_;
}

const QModule& QModule::tail() const {
    if (!tail_)
        throw std::logic_error("single tensor factor has no head/tail split");
    return *tail_;
}

void QModule::check_even(int i) const {
    if (i < 1 || i >= rank_)
        throw std::out_of_range("generator index " + std::to_string(i) + " outside 1..n-1");
}

Operator QModule::qpow(const std::vector<int>& h) const {
    if (h.size() != static_cast<std::size_t>(rank_))
        throw std::invalid_argument("q^h needs one coefficient per k_j");
    Operator op(space_, Parity::Even);
    for (std::size_t x = 0; x < space_->dimension(); ++x) {
        long exp = 0;
        const Weight& wt = space_->weight(x);
        for (int j = 1; j <= rank_; ++j)
            exp += static_cast<long>(h[static_cast<std::size_t>(j - 1)]) * wt.pairing(j);
        op.set_column(x, IndexVector{{x, Scalar::q_power(exp)}});
    }
    return op;
}

Operator QModule::qpow_k(int j, int c) const {
    if (j < 1 || j > rank_)
        throw std::out_of_range("k index outside 1..n");
    return qpow(unit_h(rank_, j, c));
}

namespace {

Operator table_operator(const std::shared_ptr<const TensorSpace>& space, Slot kind, int i) {
    Operator op(space, kind == kE || kind == kF ? Parity::Even : Parity::Odd);
    for (std::size_t x = 0; x < space->dimension(); ++x) {
        const int s = space->basis(x).symbols()[0];
        if (auto t = table_image(kind, i, s))
            op.set_column(x, IndexVector{{space->index_of(BasisTensor{*t}), Scalar(1)}});
    }
    return op;
}

} // namespace

Operator QModule::build_e(int i) const {
    if (power_ == 1)
        return table_operator(space_, kE, i);
    std::vector<int> h(static_cast<std::size_t>(rank_), 0);
    h[static_cast<std::size_t>(i - 1)] = -1;
    h[static_cast<std::size_t>(i)] = 1;
    return tensor(head_->e(i), tail_->qpow(h), space_) + tensor(head_->identity(), tail_->e(i), space_);
}

Operator QModule::build_f(int i) const {
    if (power_ == 1)
        return table_operator(space_, kF, i);
    std::vector<int> h(static_cast<std::size_t>(rank_), 0);
    h[static_cast<std::size_t>(i - 1)] = 1;
    h[static_cast<std::size_t>(i)] = -1;
    return tensor(head_->f(i), tail_->identity(), space_) + tensor(head_->qpow(h), tail_->f(i), space_);
}

Operator QModule::build_kbar1() const {
    if (power_ == 1)
        return table_operator(space_, kKBar, 1);
    return tensor(head_->kbar(1), tail_->qpow_k(1), space_) + tensor(head_->qpow_k(1, -1), tail_->kbar(1), space_);
}

const Operator& QModule::e(int i) const {
    check_even(i);
    const auto key = std::make_pair(int(kE), i);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    return cache_.emplace(key, build_e(i)).first->second;
}

const Operator& QModule::f(int i) const {
    check_even(i);
    const auto key = std::make_pair(int(kF), i);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    return cache_.emplace(key, build_f(i)).first->second;
}

const Operator& QModule::ebar(int i) const {
    check_even(i);
    const auto key = std::make_pair(int(kEBar), i);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    if (uses_table())
        return cache_.emplace(key, table_operator(space_, kEBar, i)).first->second;
    const Scalar& q = Scalar::q();
    Operator op = (kbar(i) * e(i) - q * (e(i) * kbar(i))) * qpow_k(i);
    return cache_.emplace(key, std::move(op)).first->second;
}

const Operator& QModule::fbar(int i) const {
    check_even(i);
    const auto key = std::make_pair(int(kFBar), i);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    if (uses_table())
        return cache_.emplace(key, table_operator(space_, kFBar, i)).first->second;
    const Scalar& q = Scalar::q();
    Operator op = -((kbar(i) * f(i) - q * (f(i) * kbar(i))) * qpow_k(i, -1));
    return cache_.emplace(key, std::move(op)).first->second;
}

const Operator& QModule::kbar(int j) const {
    if (j < 1 || j > rank_)
        throw std::out_of_range("kbar index outside 1..n");
    const auto key = std::make_pair(int(kKBar), j);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    if (j == 1 || uses_table())
        return cache_.emplace(key, j == 1 ? build_kbar1() : table_operator(space_, kKBar, j)).first->second;
    const int i = j - 1;
    Operator op = (kbar(i) * qpow_k(j) - (ebar(i) * f(i) - f(i) * ebar(i))) * qpow_k(i, -1);
    return cache_.emplace(key, std::move(op)).first->second;
}

Operator QModule::generator(const Generator& g) const {
    switch (g.kind) {
    case Generator::Kind::E:
        return e(g.index);
    case Generator::Kind::F:
        return f(g.index);
    case Generator::Kind::EBar:
        return ebar(g.index);
    case Generator::Kind::FBar:
        return fbar(g.index);
    case Generator::Kind::KBar:
        return kbar(g.index);
    case Generator::Kind::QPow:
        return qpow(g.h);
    }
    throw std::logic_error("unknown generator kind");
}

SuperVector act(const QModule& m, const Generator& g, const SuperVector& v) { return m.generator(g).apply(v); }

// ---- Relations ------------------------------------------------------------

namespace {

class RelationChecker {
  public:
    RelationChecker(const QModule& m, Report& report) : m_(m), report_(report) {
        suffix_ = " n=" + std::to_string(m.rank()) + " N=" + std::to_string(m.power());
    }

    void check(const std::string& name, const std::string& inst, const Operator& lhs, const Operator& rhs) {
        const auto diff = lhs.first_difference(rhs);
        std::string witness;
        if (diff) {
            const TensorSpace& s = *m_.space();
            witness = "on " + s.basis(*diff).to_string() + ": lhs = " + index_vector_string(s, lhs.column(*diff)) +
                      ", rhs = " + index_vector_string(s, rhs.column(*diff));
        }
        report_.add(name, inst + suffix_, !diff, witness);
    }

  private:
    const QModule& m_;
    Report& report_;
    std::string suffix_;
};

std::string idx(const char* name, int v) { return std::string(name) + "=" + std::to_string(v); }
std::string idx2(int i, int j) { return idx("i", i) + "," + idx("j", j); }

} // namespace

Report verify_relations(int rank, int power) {
    if (rank < 2)
        throw std::invalid_argument("relations need rank >= 2");
    const QModule m(rank, power);
    Report report;
    RelationChecker chk(m, report);
    const Scalar& q = Scalar::q();
    const Scalar qinv = Scalar::q_power(-1);
    const Operator one = m.identity();
    const Operator zero(m.space(), Parity::Even);
    const int n = rank;

    chk.check("q^0 = 1", "", m.qpow(std::vector<int>(static_cast<std::size_t>(n), 0)), one);
    for (int j = 1; j <= n; ++j)
        for (int l = 1; l <= n; ++l)
            for (int c : {1, -1}) {
                std::vector<int> h = unit_h(n, j, 1);
                h[static_cast<std::size_t>(l - 1)] += c;
                chk.check("q^h1 q^h2 = q^(h1+h2)", "h1=k" + std::to_string(j) + ",h2=" + (c < 0 ? "-" : "") + "k" +
                                                       std::to_string(l),
                          m.qpow_k(j) * m.qpow_k(l, c), m.qpow(h));
            }
    for (int j = 1; j <= n; ++j) {
        for (int i = 1; i < n; ++i) {
            const int a = (j == i ? 1 : 0) - (j == i + 1 ? 1 : 0);
            chk.check("q^h e_i q^-h = q^(alpha_i(h)) e_i", "h=k" + std::to_string(j) + "," + idx("i", i),
                      m.qpow_k(j) * m.e(i) * m.qpow_k(j, -1), Scalar::q_power(a) * m.e(i));
            chk.check("q^h f_i q^-h = q^(-alpha_i(h)) f_i", "h=k" + std::to_string(j) + "," + idx("i", i),
                      m.qpow_k(j) * m.f(i) * m.qpow_k(j, -1), Scalar::q_power(-a) * m.f(i));
        }
        for (int l = 1; l <= n; ++l)
            chk.check("q^h kbar_j = kbar_j q^h", "h=k" + std::to_string(j) + "," + idx("j", l),
                      m.qpow_k(j) * m.kbar(l), m.kbar(l) * m.qpow_k(j));
    }
    const Scalar q_minus = q - qinv;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            Operator rhs = zero;
            if (i == j) {
                std::vector<int> h(static_cast<std::size_t>(n), 0);
                h[static_cast<std::size_t>(i - 1)] = 1;
                h[static_cast<std::size_t>(i)] = -1;
                std::vector<int> hm = h;
                for (auto& x : hm)
                    x = -x;
                rhs = q_minus.inverse() * (m.qpow(h) - m.qpow(hm));
            }
            chk.check("e_i f_j - f_j e_i", idx2(i, j), m.e(i) * m.f(j) - m.f(j) * m.e(i), rhs);
        }
    const Scalar serre = q + qinv;
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            const int d = i > j ? i - j : j - i;
            if (d > 1) {
                chk.check("e_i e_j - e_j e_i = 0", idx2(i, j), m.e(i) * m.e(j) - m.e(j) * m.e(i), zero);
                chk.check("f_i f_j - f_j f_i = 0", idx2(i, j), m.f(i) * m.f(j) - m.f(j) * m.f(i), zero);
            }
            if (d == 1) {
                const Operator& ei = m.e(i);
                const Operator& fi = m.f(i);
                chk.check("Serre e", idx2(i, j),
                          ei * ei * m.e(j) - serre * (ei * m.e(j) * ei) + m.e(j) * ei * ei, zero);
                chk.check("Serre f", idx2(i, j),
                          fi * fi * m.f(j) - serre * (fi * m.f(j) * fi) + m.f(j) * fi * fi, zero);
                chk.check("odd Serre e", idx2(i, j),
                          ei * ei * m.ebar(j) - serre * (ei * m.ebar(j) * ei) + m.ebar(j) * ei * ei, zero);
                chk.check("odd Serre f", idx2(i, j),
                          fi * fi * m.fbar(j) - serre * (fi * m.fbar(j) * fi) + m.fbar(j) * fi * fi, zero);
            }
        }
    const Scalar q2 = Scalar::q_power(2) - Scalar::q_power(-2);
    for (int i = 1; i <= n; ++i) {
        chk.check("kbar_i^2", idx("i", i), m.kbar(i) * m.kbar(i),
                  q2.inverse() * (m.qpow_k(i, 2) - m.qpow_k(i, -2)));
        for (int j = 1; j <= n; ++j)
            if (i != j)
                chk.check("kbar_i kbar_j + kbar_j kbar_i = 0", idx2(i, j),
                          m.kbar(i) * m.kbar(j) + m.kbar(j) * m.kbar(i), Operator(m.space(), Parity::Even));
    }
    for (int i = 1; i < n; ++i) {
        chk.check("kbar_i e_i - q e_i kbar_i = ebar_i q^-k_i", idx("i", i),
                  m.kbar(i) * m.e(i) - q * (m.e(i) * m.kbar(i)), m.ebar(i) * m.qpow_k(i, -1));
        chk.check("kbar_i f_i - q f_i kbar_i = -fbar_i q^k_i", idx("i", i),
                  m.kbar(i) * m.f(i) - q * (m.f(i) * m.kbar(i)), -(m.fbar(i) * m.qpow_k(i)));
    }
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            Operator rhs1(m.space(), Parity::Odd), rhs2(m.space(), Parity::Odd);
            if (i == j) {
                rhs1 = m.kbar(i) * m.qpow_k(i + 1, -1) - m.kbar(i + 1) * m.qpow_k(i, -1);
                rhs2 = m.kbar(i) * m.qpow_k(i + 1) - m.kbar(i + 1) * m.qpow_k(i);
            }
            chk.check("e_i fbar_j - fbar_j e_i", idx2(i, j), m.e(i) * m.fbar(j) - m.fbar(j) * m.e(i), rhs1);
            chk.check("ebar_i f_j - f_j ebar_i", idx2(i, j), m.ebar(i) * m.f(j) - m.f(j) * m.ebar(i), rhs2);
        }
    for (int i = 1; i < n; ++i) {
        const Operator odd_zero(m.space(), Parity::Odd);
        chk.check("e_i ebar_i - ebar_i e_i = 0", idx("i", i), m.e(i) * m.ebar(i) - m.ebar(i) * m.e(i), odd_zero);
        chk.check("f_i fbar_i - fbar_i f_i = 0", idx("i", i), m.f(i) * m.fbar(i) - m.fbar(i) * m.f(i), odd_zero);
    }
    for (int i = 1; i + 1 < n; ++i) {
        chk.check("e_i e_i+1 - q e_i+1 e_i", idx("i", i), m.e(i) * m.e(i + 1) - q * (m.e(i + 1) * m.e(i)),
                  m.ebar(i) * m.ebar(i + 1) + q * (m.ebar(i + 1) * m.ebar(i)));
        chk.check("q f_i+1 f_i - f_i f_i+1", idx("i", i), q * (m.f(i + 1) * m.f(i)) - m.f(i) * m.f(i + 1),
                  m.fbar(i) * m.fbar(i + 1) + q * (m.fbar(i + 1) * m.fbar(i)));
    }
    return report;
}

// ---- Kashiwara operators --------------------------------------------------

std::string QKashiwaraOp::to_string() const {
    switch (kind) {
    case Kind::E:
        return "e~" + std::to_string(index);
    case Kind::F:
        return "f~" + std::to_string(index);
    case Kind::EBar1:
        return "e~1bar";
    case Kind::FBar1:
        return "f~1bar";
    case Kind::KTilde1:
        return "k~1";
    }
    return "?";
}

IndexVector divided_power(const Operator& f, int k, const IndexVector& v) {
    IndexVector out = v;
    for (int j = 0; j < k && !out.empty(); ++j)
        out = f.apply(out);
    if (k >= 2 && !out.empty()) {
        const Scalar inv = Scalar::q_factorial(k).inverse();
        for (auto& [x, c] : out)
            c *= inv;
    }
    return out;
}

struct KashiwaraOperators::StringData {
    std::vector<std::size_t> basis;            // indices of M_lambda
    std::vector<int> depth;                     // k for each generator
    std::vector<IndexVector> tops;              // u_k basis vectors (weight lambda + k alpha_i)
    Dense coordinates;                          // inverse of the generator matrix
};

KashiwaraOperators::KashiwaraOperators(const QModule& m) : module_(&m) {}
KashiwaraOperators::~KashiwaraOperators() = default;

const KashiwaraOperators::StringData& KashiwaraOperators::string_data(int i, const Weight& wt) const {
    const auto key = std::make_pair(i, wt);
    if (auto it = strings_.find(key); it != strings_.end())
        return *it->second;
    const TensorSpace& space = *module_->space();
    const auto& spaces = space.weight_spaces();
    const Operator& e = module_->e(i);
    const Operator& f = module_->f(i);
    const Weight alpha = Weight::simple_root(space.rank(), i);

    auto data = std::make_unique<StringData>();
    data->basis = spaces.at(wt);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t r = 0; r < data->basis.size(); ++r)
        pos[data->basis[r]] = r;

    std::vector<IndexVector> columns;
    Weight mu = wt;
    for (int k = 0;; ++k, mu += alpha) {
        auto here = spaces.find(mu);
        if (here == spaces.end())
            break;
        const auto& cols = here->second;
        auto above = spaces.find(mu + alpha);
        std::vector<std::vector<Scalar>> kernel;
        if (above == spaces.end()) {
            for (std::size_t c = 0; c < cols.size(); ++c) {
                std::vector<Scalar> v(cols.size());
                v[c] = Scalar(1);
                kernel.push_back(std::move(v));
            }
        } else {
            std::map<std::size_t, std::size_t> rows;
            for (std::size_t r = 0; r < above->second.size(); ++r)
                rows[above->second[r]] = r;
            Dense mat(above->second.size(), std::vector<Scalar>(cols.size()));
            for (std::size_t c = 0; c < cols.size(); ++c)
                for (const auto& [y, x] : e.column(cols[c]))
                    mat[rows.at(y)][c] = x;
            kernel = nullspace(std::move(mat), cols.size());
        }
        for (const auto& kv : kernel) {
            IndexVector top;
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (!kv[c].is_zero())
                    top.emplace(cols[c], kv[c]);
            IndexVector image = divided_power(f, k, top);
            if (image.empty())
                continue;
            data->depth.push_back(k);
            data->tops.push_back(std::move(top));
            columns.push_back(std::move(image));
        }
    }
    const std::size_t dim = data->basis.size();
    if (columns.size() != dim)
        throw VerificationFailure("string decomposition for i=" + std::to_string(i) + " at weight " +
                                  wt.to_string() + " found " + std::to_string(columns.size()) +
                                  " generators for a space of dimension " + std::to_string(dim));
    Dense mat(dim, std::vector<Scalar>(dim));
    for (std::size_t c = 0; c < dim; ++c)
        for (const auto& [y, x] : columns[c])
            mat[pos.at(y)][c] = x;
    data->coordinates = invert(mat);
    return *strings_.emplace(key, std::move(data)).first->second;
}

std::vector<KashiwaraOperators::StringPiece> KashiwaraOperators::string_decomposition(int i,
                                                                                     const SuperVector& u) const {
    const TensorSpace& space = *module_->space();
    if (u.is_zero())
        return {};
    const Weight wt = u.terms().begin()->first.weight(space.rank());
    for (const auto& [b, c] : u.terms())
        if (b.weight(space.rank()) != wt)
            throw std::invalid_argument("string decomposition needs a weight vector");
    module_->e(i);
    const StringData& d = string_data(i, wt);
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t r = 0; r < d.basis.size(); ++r)
        pos[d.basis[r]] = r;
    std::vector<Scalar> coords(d.basis.size());
    for (const auto& [b, c] : u.terms()) {
        const std::size_t col = pos.at(space.index_of(b));
        for (std::size_t r = 0; r < coords.size(); ++r)
            if (!d.coordinates[r][col].is_zero())
                coords[r] += d.coordinates[r][col] * c;
    }
    std::map<int, IndexVector> by_k;
    for (std::size_t r = 0; r < coords.size(); ++r) {
        if (coords[r].is_zero())
            continue;
        for (const auto& [x, c] : d.tops[r])
            add_term(by_k[d.depth[r]], x, c * coords[r]);
    }
    std::vector<StringPiece> out;
    for (auto& [k, v] : by_k)
        if (!v.empty())
            out.push_back(StringPiece{k, to_super_vector(space, v)});
    return out;
}

Operator KashiwaraOperators::build_even(int i, bool raising) const {
    const auto& space = module_->space();
    const Operator& f = module_->f(i);
    Operator out(space, Parity::Even);
    for (const auto& [wt, indices] : space->weight_spaces()) {
        const StringData& d = string_data(i, wt);
        // Image of each generator f^(k) u_k.
        std::vector<IndexVector> moved;
        moved.reserve(d.tops.size());
        for (std::size_t r = 0; r < d.tops.size(); ++r) {
            const int k = d.depth[r];
            if (raising)
                moved.push_back(k == 0 ? IndexVector{} : divided_power(f, k - 1, d.tops[r]));
            else
                moved.push_back(divided_power(f, k + 1, d.tops[r]));
        }
        for (std::size_t c = 0; c < d.basis.size(); ++c) {
            IndexVector col;
            for (std::size_t r = 0; r < d.tops.size(); ++r) {
                const Scalar& coeff = d.coordinates[r][c];
                if (coeff.is_zero())
                    continue;
                for (const auto& [x, s] : moved[r])
                    add_term(col, x, s * coeff);
            }
            out.set_column(d.basis[c], std::move(col));
        }
    }
    return out;
}

const Operator& KashiwaraOperators::get(QKashiwaraOp op) const {
    const QModule& m = *module_;
    const auto key = std::make_pair(static_cast<int>(op.kind), op.index);
    if (auto it = cache_.find(key); it != cache_.end())
        return it->second;
    const Scalar& q = Scalar::q();
    const Scalar qinv = Scalar::q_power(-1);
    switch (op.kind) {
    case QKashiwaraOp::Kind::E:
    case QKashiwaraOp::Kind::F:
        m.e(op.index);
        return cache_.emplace(key, build_even(op.index, op.kind == QKashiwaraOp::Kind::E)).first->second;
    case QKashiwaraOp::Kind::KTilde1:
        return cache_.emplace(key, qinv * (m.qpow_k(1) * m.kbar(1))).first->second;
    case QKashiwaraOp::Kind::EBar1: {
        Operator x = -((m.e(1) * m.kbar(1) - q * (m.kbar(1) * m.e(1))) * (qinv * m.qpow_k(1)));
        return cache_.emplace(key, std::move(x)).first->second;
    }
    case QKashiwaraOp::Kind::FBar1: {
        Operator x = -((m.kbar(1) * m.f(1) - q * (m.f(1) * m.kbar(1))) * (qinv * m.qpow_k(2)));
        return cache_.emplace(key, std::move(x)).first->second;
    }
    }
    throw std::logic_error("unknown Kashiwara operator");
}

SuperVector q_kashiwara(const KashiwaraOperators& ops, QKashiwaraOp op, const SuperVector& v) {
    return ops.get(op).apply(v);
}

Report verify_comult_odd(int rank) {
    if (rank < 2)
        throw std::invalid_argument("odd operators need rank >= 2");
    const QModule m(rank, 2);
    const QModule& v = m.head();
    const KashiwaraOperators big(m), small(v);
    const auto& target = m.space();
    const Scalar qinv = Scalar::q_power(-1);
    const Scalar corr = Scalar(1) - Scalar::q_power(2);
    std::vector<int> h12(static_cast<std::size_t>(rank), 0);
    h12[0] = 1;
    h12[1] = 1;

    const Operator& kt = small.get(QKashiwaraOp::ktilde1());
    const Operator id = v.identity();

    Report report;
    auto record = [&](const std::string& name, const Operator& lhs, const Operator& rhs) {
        const auto diff = lhs.first_difference(rhs);
        std::string witness;
        if (diff)
            witness = "on " + target->basis(*diff).to_string() + ": lhs = " +
                      index_vector_string(*target, lhs.column(*diff)) +
                      ", rhs = " + index_vector_string(*target, rhs.column(*diff));
        report.add(name, "n=" + std::to_string(rank), !diff, witness);
    };

    record("comult k~1", big.get(QKashiwaraOp::ktilde1()),
           tensor(kt, v.qpow_k(1, 2), target) + tensor(id, kt, target));
    record("comult e~1bar", big.get(QKashiwaraOp::ebar1()),
           tensor(small.get(QKashiwaraOp::ebar1()), v.qpow(h12), target) +
               tensor(id, small.get(QKashiwaraOp::ebar1()), target) -
               corr * tensor(kt, v.e(1) * v.qpow_k(1, 2), target));
    record("comult f~1bar", big.get(QKashiwaraOp::fbar1()),
           tensor(small.get(QKashiwaraOp::fbar1()), v.qpow(h12), target) +
               tensor(id, small.get(QKashiwaraOp::fbar1()), target) -
               corr * tensor(kt, v.f(1) * (qinv * v.qpow(h12)), target));
    return report;
}

// ---- Residues -------------------------------------------------------------

namespace {

using QColumn = std::map<std::size_t, mpq_class>;

struct Residue {
    std::vector<QColumn> columns;
    std::optional<std::string> pole; // first lattice violation
};

Residue residue_of(const Operator& op) {
    const TensorSpace& s = *op.space();
    Residue r;
    r.columns.resize(s.dimension());
    for (std::size_t x = 0; x < s.dimension(); ++x)
        for (const auto& [y, c] : op.column(x)) {
            if (!c.regular_at_zero()) {
                if (!r.pole)
                    r.pole = "coefficient " + c.to_string() + " of " + s.basis(y).to_string() + " in the image of " +
                             s.basis(x).to_string();
                continue;
            }
            mpq_class v = c.at_zero();
            if (v != 0)
                r.columns[x].emplace(y, std::move(v));
        }
    return r;
}

std::size_t rank_over_q(std::vector<std::vector<mpq_class>> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[rank], m[p]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][c] == 0)
                continue;
            const mpq_class factor = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::optional<Word> crystal_image(QKashiwaraOp op, const Word& b) {
    switch (op.kind) {
    case QKashiwaraOp::Kind::E:
        return e_even(op.index, b);
    case QKashiwaraOp::Kind::F:
        return f_even(op.index, b);
    case QKashiwaraOp::Kind::EBar1:
        return ebar1_fast(b);
    case QKashiwaraOp::Kind::FBar1:
        return fbar1_fast(b);
    case QKashiwaraOp::Kind::KTilde1:
        return b;
    }
    return std::nullopt;
}

std::vector<QKashiwaraOp> all_ops(int rank) {
    std::vector<QKashiwaraOp> ops;
    for (int i = 1; i < rank; ++i) {
        ops.push_back(QKashiwaraOp::e(i));
        ops.push_back(QKashiwaraOp::f(i));
    }
    ops.push_back(QKashiwaraOp::ebar1());
    ops.push_back(QKashiwaraOp::fbar1());
    ops.push_back(QKashiwaraOp::ktilde1());
    return ops;
}

// Letter class containing every index in `col`, or nullopt if they span several.
std::optional<Word> single_class(const TensorSpace& s, const QColumn& col) {
    std::optional<Word> cls;
    for (const auto& [y, c] : col) {
        Word w = s.basis(y).letters(s.rank());
        if (cls && *cls != w)
            return std::nullopt;
        cls = std::move(w);
    }
    return cls;
}

} // namespace

Report residue_check(int rank, int power) {
    if (rank < 2)
        throw std::invalid_argument("odd operators need rank >= 2");
    const QModule m(rank, power);
    const KashiwaraOperators ops(m);
    const TensorSpace& s = *m.space();
    const std::string inst = "n=" + std::to_string(rank) + " N=" + std::to_string(power);
    const std::size_t expected_dim = std::size_t(1) << power;
    Report report;

    {
        std::string witness;
        for (const auto& [b, indices] : s.letter_classes())
            if (indices.size() != expected_dim && witness.empty())
                witness = "dim l_" + b.to_string() + " = " + std::to_string(indices.size());
        report.add("dim l_b = 2^N", inst, witness.empty(), witness);
    }

    for (const QKashiwaraOp op : all_ops(rank)) {
        const Residue r = residue_of(ops.get(op));
        report.add("lattice stability " + op.to_string(), inst, !r.pole, r.pole.value_or(""));
        if (r.pole)
            continue;
        std::string witness;
        for (const auto& [b, indices] : s.letter_classes()) {
            const auto target = crystal_image(op, b);
            std::vector<std::size_t> rows;
            if (target)
                rows = s.letter_classes().at(*target);
            std::map<std::size_t, std::size_t> row_pos;
            for (std::size_t k = 0; k < rows.size(); ++k)
                row_pos[rows[k]] = k;
            std::vector<std::vector<mpq_class>> block(rows.size(), std::vector<mpq_class>(indices.size()));
            for (std::size_t c = 0; c < indices.size() && witness.empty(); ++c)
                for (const auto& [y, v] : r.columns[indices[c]]) {
                    auto it = row_pos.find(y);
                    if (it == row_pos.end()) {
                        witness = op.to_string() + " sends " + s.basis(indices[c]).to_string() + " outside " +
                                  (target ? "l_" + target->to_string() : std::string("0"));
                        break;
                    }
                    block[it->second][c] = v;
                }
            if (!witness.empty())
                break;
            const bool needs_iso = op.kind != QKashiwaraOp::Kind::KTilde1;
            if (target && needs_iso && rank_over_q(block) != indices.size()) {
                witness = op.to_string() + " is not injective on l_" + b.to_string();
                break;
            }
        }
        const std::string name = op.kind == QKashiwaraOp::Kind::KTilde1 ? "k~1 l_b ⊂ l_b"
                                                                         : "residue matches crystal " + op.to_string();
        report.add(name, inst, witness.empty(), witness);
    }

    for (const QKashiwaraOp op : {QKashiwaraOp::ebar1(), QKashiwaraOp::fbar1()}) {
        const Residue r = residue_of(ops.get(op));
        if (r.pole)
            continue;
        std::string witness;
        for (std::size_t x = 0; x < s.dimension() && witness.empty(); ++x) {
            std::map<std::size_t, mpq_class> sq;
            for (const auto& [y, c] : r.columns[x])
                for (const auto& [z, d] : r.columns[y])
                    sq[z] += c * d;
            for (const auto& [z, v] : sq)
                if (v != 0) {
                    witness = "square of " + op.to_string() + " is non-zero on " + s.basis(x).to_string();
                    break;
                }
        }
        report.add("residue " + op.to_string() + "^2 = 0", inst, witness.empty(), witness);
    }
    return report;
}

CrystalGraph residue_graph(int rank, int power) {
    if (rank < 2)
        throw std::invalid_argument("odd operators need rank >= 2");
    const QModule m(rank, power);
    const KashiwaraOperators ops(m);
    const TensorSpace& s = *m.space();

    std::vector<CrystalNode> nodes;
    std::map<Word, std::size_t> id;
    for (const auto& [b, indices] : s.letter_classes()) {
        id.emplace(b, nodes.size());
        nodes.push_back(word_node(b));
    }
    std::vector<CrystalEdge> edges;
    std::vector<std::pair<Label, QKashiwaraOp>> labelled;
    for (int i = 1; i < rank; ++i)
        labelled.emplace_back(Label::even(i), QKashiwaraOp::f(i));
    labelled.emplace_back(Label::bar(1), QKashiwaraOp::fbar1());
    for (const auto& [label, op] : labelled) {
        const Residue r = residue_of(ops.get(op));
        if (r.pole)
            throw VerificationFailure("lattice not preserved by " + op.to_string() + ": " + *r.pole);
        for (const auto& [b, indices] : s.letter_classes()) {
            std::optional<Word> target;
            for (std::size_t x : indices) {
                if (r.columns[x].empty())
                    continue;
                auto cls = single_class(s, r.columns[x]);
                if (!cls || (target && *target != *cls))
                    throw VerificationFailure("residue of " + op.to_string() + " does not map l_" + b.to_string() +
                                              " into a single l_b'");
                target = std::move(cls);
            }
            if (target)
                edges.push_back(CrystalEdge{id.at(b), label, id.at(*target)});
        }
    }
    return CrystalGraph(rank, std::move(nodes), std::move(edges));
}

} // namespace qcrystal::qrep
