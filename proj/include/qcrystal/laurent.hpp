#pragma once

// Exact rational functions in q with integer coefficients. Every scalar that
// arises on V^{\otimes N} lies in Q(q), so no truncation is ever needed.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace qcrystal {

// Dense polynomial in q over Z, lowest degree first, no trailing zeros.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(long c);
    explicit Polynomial(mpz_class c);
    Polynomial(std::initializer_list<long> coeffs);
    explicit Polynomial(std::vector<mpz_class> coeffs);

    static Polynomial monomial(const mpz_class& c, std::size_t degree);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    // Exponent of the lowest non-zero term; 0 for the zero polynomial.
    std::size_t valuation() const noexcept;
    const mpz_class& coeff(std::size_t k) const;
    const mpz_class& leading() const { return coeffs_.back(); }
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

    mpz_class content() const;
    Polynomial primitive_part() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const mpz_class& c);
    // Exact division by an integer; throws if not exact.
    Polynomial& divide_exact(const mpz_class& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    // Quotient over Z when `divisor` divides this exactly in Q[q] and the
    // quotient is integral; throws std::domain_error otherwise.
    Polynomial divide_exact(const Polynomial& divisor) const;

    std::string to_string() const;

  private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);
// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// numerator / denominator in lowest terms: gcd 1 in Z[q], denominator with
// positive leading coefficient, zero stored as 0/1.
class LaurentScalar {
  public:
    LaurentScalar() : num_(0), den_(1) {}
    LaurentScalar(long c) : num_(c), den_(1) {}
    LaurentScalar(Polynomial num, Polynomial den);
    explicit LaurentScalar(Polynomial num) : num_(std::move(num)), den_(1) {}

    // q^k for any integer k.
    static LaurentScalar q_power(long k);
    static const LaurentScalar& q();
    // [k] = (q^k - q^{-k}) / (q - q^{-1})
    static LaurentScalar q_integer(long k);
    // [k]!
    static LaurentScalar q_factorial(long k);

    const Polynomial& numerator() const noexcept { return num_; }
    const Polynomial& denominator() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    // ord_q; meaningless for zero (returns 0).
    long valuation() const noexcept;
    bool regular_at_zero() const noexcept { return is_zero() || valuation() >= 0; }
    // Value at q = 0; throws VerificationFailure on a pole.
    mpq_class at_zero() const;

    LaurentScalar& operator+=(const LaurentScalar& o);
    LaurentScalar& operator-=(const LaurentScalar& o);
    LaurentScalar& operator*=(const LaurentScalar& o);
    LaurentScalar& operator/=(const LaurentScalar& o);
    LaurentScalar operator-() const;
    LaurentScalar inverse() const;

    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    friend LaurentScalar operator*(LaurentScalar a, const LaurentScalar& b) { return a *= b; }
    friend LaurentScalar operator/(LaurentScalar a, const LaurentScalar& b) { return a /= b; }
    // Normal form makes equality structural.
    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

  private:
    void normalize();
    Polynomial num_, den_;
};

} // namespace qcrystal
