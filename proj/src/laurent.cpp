#include "qcrystal/laurent.hpp"

#include "qcrystal/errors.hpp"

#include <stdexcept>

namespace qcrystal {

Polynomial::Polynomial(long c) {
    if (c != 0)
        coeffs_.emplace_back(c);
}

Polynomial::Polynomial(mpz_class c) {
    if (c != 0)
        coeffs_.push_back(std::move(c));
}

Polynomial::Polynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const mpz_class& c, std::size_t degree) {
    Polynomial p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, mpz_class(0));
        p.coeffs_[degree] = c;
    }
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::size_t Polynomial::valuation() const noexcept {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0)
            return k;
    return 0;
}

const mpz_class& Polynomial::coeff(std::size_t k) const {
    static const mpz_class zero(0);
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

mpz_class Polynomial::content() const {
    mpz_class g(0);
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero())
        return *this;
    Polynomial p = *this;
    mpz_class c = content();
    if (p.leading() < 0)
        c = -c;
    if (c != 1)
        p.divide_exact(c);
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), mpz_class(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), mpz_class(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a] == 0)
            continue;
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
            out[a + b] += coeffs_[a] * o.coeffs_[b];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const mpz_class& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

Polynomial& Polynomial::divide_exact(const mpz_class& c) {
    if (c == 0)
        throw std::domain_error("division by zero");
    for (auto& x : coeffs_) {
        if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
            throw std::domain_error("inexact integer division of polynomial");
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    }
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& x : p.coeffs_)
        x = -x;
    return p;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("division by zero polynomial");
    if (is_zero())
        return Polynomial();
    if (degree() < divisor.degree())
        throw std::domain_error("inexact polynomial division");
    std::vector<mpz_class> rem = coeffs_;
    const std::size_t dd = static_cast<std::size_t>(divisor.degree());
    std::vector<mpz_class> quot(rem.size() - dd, mpz_class(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        mpz_class& top = rem[k + dd];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), divisor.leading().get_mpz_t()))
            throw std::domain_error("inexact polynomial division");
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), divisor.leading().get_mpz_t());
        for (std::size_t j = 0; j <= dd; ++j)
            rem[k + j] -= c * divisor.coeffs_[j];
        quot[k] = std::move(c);
    }
    for (const auto& r : rem)
        if (r != 0)
            throw std::domain_error("inexact polynomial division");
    return Polynomial(std::move(quot));
}

std::string Polynomial::to_string() const {
    if (is_zero())
        return "0";
    std::string s;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        mpz_class mag = neg ? mpz_class(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (k == 0 || mag != 1)
            s += mag.get_str();
        if (k >= 1)
            s += (k == 0 || mag != 1 ? "*q" : "q");
        if (k >= 2)
            s += "^" + std::to_string(k);
    }
    return s;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw std::domain_error("pseudo-remainder by zero");
    Polynomial r = a;
    const mpz_class lb = b.leading();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    long steps = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(r.degree()) - db;
        Polynomial t = Polynomial::monomial(r.leading(), shift) * b;
        r *= lb;
        r -= t;
        --steps;
    }
    for (; steps > 0; --steps)
        r *= lb;
    return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a.primitive_part(), y = b.primitive_part();
    if (x.is_zero())
        return y;
    if (y.is_zero())
        return x;
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0)
            return Polynomial(1);
        Polynomial r = pseudo_remainder(x, y).primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    return x.primitive_part();
}

LaurentScalar::LaurentScalar(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("zero denominator");
    normalize();
}

void LaurentScalar::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    if (den_.degree() > 0 && num_.degree() >= 0) {
        // Strip common powers of q first; cheap and frequent.
        const std::size_t common = std::min(num_.valuation(), den_.valuation());
        if (common > 0) {
            std::vector<mpz_class> n(num_.coeffs().begin() + static_cast<std::ptrdiff_t>(common),
                                     num_.coeffs().end());
            std::vector<mpz_class> d(den_.coeffs().begin() + static_cast<std::ptrdiff_t>(common),
                                     den_.coeffs().end());
            num_ = Polynomial(std::move(n));
            den_ = Polynomial(std::move(d));
        }
        if (den_.degree() > 0) {
            const Polynomial g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_.divide_exact(g);
                den_ = den_.divide_exact(g);
            }
        }
    }
    mpz_class c = num_.content();
    mpz_class d = den_.content();
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (den_.leading() < 0)
        c = -c;
    if (c != 1) {
        num_.divide_exact(c);
        den_.divide_exact(c);
    }
}

LaurentScalar LaurentScalar::q_power(long k) {
    if (k >= 0)
        return LaurentScalar(Polynomial::monomial(1, static_cast<std::size_t>(k)), Polynomial(1));
    return LaurentScalar(Polynomial(1), Polynomial::monomial(1, static_cast<std::size_t>(-k)));
}

const LaurentScalar& LaurentScalar::q() {
    static const LaurentScalar value = q_power(1);
    return value;
}

LaurentScalar LaurentScalar::q_integer(long k) {
    if (k == 0)
        return LaurentScalar(0);
    return (q_power(k) - q_power(-k)) / (q() - q_power(-1));
}

LaurentScalar LaurentScalar::q_factorial(long k) {
    if (k < 0)
        throw std::domain_error("negative q-factorial");
    LaurentScalar r(1);
    for (long j = 2; j <= k; ++j)
        r *= q_integer(j);
    return r;
}

long LaurentScalar::valuation() const noexcept {
    if (is_zero())
        return 0;
    return static_cast<long>(num_.valuation()) - static_cast<long>(den_.valuation());
}

mpq_class LaurentScalar::at_zero() const {
    if (is_zero())
        return mpq_class(0);
    const long v = valuation();
    if (v < 0)
        throw VerificationFailure("pole of order " + std::to_string(-v) + " at q=0 in " + to_string());
    if (v > 0)
        return mpq_class(0);
    mpq_class r(num_.coeff(0), den_.coeff(0));
    r.canonicalize();
    return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
    if (o.is_zero())
        return *this;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
    if (o.is_zero())
        return *this;
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) {
    if (is_zero())
        return *this;
    if (o.is_zero()) {
        *this = LaurentScalar(0);
        return *this;
    }
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

LaurentScalar& LaurentScalar::operator/=(const LaurentScalar& o) {
    return *this *= o.inverse();
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

LaurentScalar LaurentScalar::inverse() const {
    if (is_zero())
        throw std::domain_error("inverse of zero");
    return LaurentScalar(den_, num_);
}

std::string LaurentScalar::to_string() const {
    if (den_ == Polynomial(1))
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace qcrystal
