#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace chl {

/** Dense univariate polynomial in the formal parameter s over Z.
 *
 * Coefficients are stored lowest degree first; the zero polynomial stores
 * nothing. All arithmetic is exact.
 */
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c);
    explicit IntPoly(const mpz_class& c);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly monomial(const mpz_class& c, int degree);
    // s^(2k), i.e. t^k under t = s^2
    static IntPoly t_pow(int k);
    // 1 - t^k
    static IntPoly one_minus_t_pow(int k);
    // 1 + t + ... + t^(n-1)
    static IntPoly t_integer(int n);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const mpz_class& lead() const;
    mpz_class coeff(int k) const;
    bool is_constant() const { return c_.size() <= 1; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly shifted(int k) const;  // multiply by s^k
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }
    // total order usable as a map key
    bool operator<(const IntPoly& o) const;

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial
    mpz_class content() const;
    // this / content, keeping sign of the leading coefficient
    IntPoly primitive_part() const;
    // exact division; throws std::domain_error if not exact
    IntPoly divided_by(const IntPoly& d) const;
    // substitute s -> s^k (k >= 1)
    IntPoly stretch(int k) const;

    mpq_class eval(const mpq_class& s0) const;

    std::string str() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// Primitive polynomial gcd with positive leading coefficient.
// gcd(0,0) = 0; constants collapse to 1 (units of Q[s]).
IntPoly poly_gcd(IntPoly a, IntPoly b);

}  // namespace chl
