#pragma once

#include <stdexcept>
#include <string>

#include "chl/intpoly.hpp"

namespace chl {

// Thrown when evaluating a coefficient at a point where its denominator
// vanishes.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// Element of Q(s): a rational function num/den in the formal parameter s,
// kept normalized at all times.  The deformation parameter of the theory is
// t = s^2, so half-integer powers of t are honest polynomials in s.
//
// Normal form invariants:
//   - den is not the zero polynomial,
//   - gcd(num, den) = 1 as primitive integer polynomials, and the integer
//     contents of num and den share no common factor,
//   - den has positive leading coefficient,
//   - zero is represented as 0/1.
class RatCoeff {
  public:
    RatCoeff() : num_(), den_(1) {}
    RatCoeff(long v) : num_(v), den_(1) {}
    explicit RatCoeff(const mpz_class& v) : num_(v), den_(1) {}
    explicit RatCoeff(const mpq_class& v);
    explicit RatCoeff(IntPoly num) : num_(std::move(num)), den_(1) {}
    RatCoeff(IntPoly num, IntPoly den);

    // s itself, i.e. t^{1/2}.
    static RatCoeff s() { return RatCoeff(IntPoly::monomial(1, 1)); }
    // t = s^2.
    static RatCoeff t() { return RatCoeff(IntPoly::t_pow(1)); }
    // t^k for k >= 0.
    static RatCoeff t_pow(int k) { return RatCoeff(IntPoly::t_pow(k)); }
    // s^k for k >= 0.
    static RatCoeff s_pow(int k) { return RatCoeff(IntPoly::monomial(1, k)); }
    // 1 - t^k.
    static RatCoeff one_minus_t_pow(int k) {
        return RatCoeff(IntPoly::one_minus_t_pow(k));
    }
    // The t-integer [n] = (1 - t^n)/(1 - t) = 1 + t + ... + t^{n-1}.
    static RatCoeff qint(int n) { return RatCoeff(IntPoly::t_integer(n)); }
    // The t-factorial [n]! = [1][2]...[n].
    static RatCoeff qfact(int n);
    // The Pochhammer (t; t)_n = (1-t)(1-t^2)...(1-t^n).
    static RatCoeff qq_poch(int n);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // True when the denominator is the constant 1.
    bool is_polynomial() const { return den_.is_constant() && den_.lead() == 1; }
    // True when num and den are both constants.
    bool is_rational_constant() const {
        return num_.is_constant() && den_.is_constant();
    }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    RatCoeff operator-() const;
    RatCoeff operator+(const RatCoeff& o) const;
    RatCoeff operator-(const RatCoeff& o) const;
    RatCoeff operator*(const RatCoeff& o) const;
    // Throws std::domain_error on division by zero.
    RatCoeff operator/(const RatCoeff& o) const;
    RatCoeff& operator+=(const RatCoeff& o) { return *this = *this + o; }
    RatCoeff& operator-=(const RatCoeff& o) { return *this = *this - o; }
    RatCoeff& operator*=(const RatCoeff& o) { return *this = *this * o; }
    RatCoeff& operator/=(const RatCoeff& o) { return *this = *this / o; }

    RatCoeff inverse() const;

    bool operator==(const RatCoeff& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatCoeff& o) const { return !(*this == o); }
    // Total order usable as a map key; no arithmetic meaning.
    bool operator<(const RatCoeff& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    // Substitute s -> s^k, k >= 1.  Sends t to t^k.
    RatCoeff stretched(int k) const;

    // Evaluate at a rational value of s.  Throws PoleError if the denominator
    // vanishes there.
    mpq_class eval(const mpq_class& s_val) const;

    // Check the normal-form invariants; used by tests after random arithmetic.
    bool check_normalized() const;

    // "(num)/(den)", e.g. "(1 - s^2)/(1)".
    std::string str() const;

  private:
    void normalize();

    IntPoly num_;
    IntPoly den_;
};

inline RatCoeff operator*(long a, const RatCoeff& b) { return RatCoeff(a) * b; }

}  // namespace chl
