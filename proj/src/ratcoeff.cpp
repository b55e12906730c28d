#include "chl/ratcoeff.hpp"

namespace chl {

RatCoeff::RatCoeff(const mpq_class& v) {
    mpq_class c(v);
    c.canonicalize();
    num_ = IntPoly(mpz_class(c.get_num()));
    den_ = IntPoly(mpz_class(c.get_den()));
    // canonicalize() already ensures a positive denominator and coprimality.
}

RatCoeff::RatCoeff(IntPoly num, IntPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatCoeff: zero denominator");
    normalize();
}

void RatCoeff::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    if (den_.is_constant()) {
        // Fast path: only integer content to clear.
        mpz_class d = den_.lead();
        if (d < 0) {
            num_ = -num_;
            d = -d;
        }
        if (d != 1) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), d.get_mpz_t());
            if (g != 1) {
                num_ = num_.divided_by(IntPoly(g));
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
                d = q;
            }
        }
        den_ = IntPoly(d);
        return;
    }
    IntPoly g = poly_gcd(num_, den_);
    if (!(g.is_constant() && g.lead() == 1)) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), num_.content().get_mpz_t(),
            den_.content().get_mpz_t());
    if (cg != 1) {
        num_ = num_.divided_by(IntPoly(cg));
        den_ = den_.divided_by(IntPoly(cg));
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatCoeff RatCoeff::qfact(int n) {
    RatCoeff r(1);
    for (int i = 1; i <= n; ++i) r *= qint(i);
    return r;
}

RatCoeff RatCoeff::qq_poch(int n) {
    RatCoeff r(1);
    for (int i = 1; i <= n; ++i) r *= one_minus_t_pow(i);
    return r;
}

bool RatCoeff::is_one() const {
    return num_.is_constant() && !num_.is_zero() && num_.lead() == 1 &&
           den_.is_constant() && den_.lead() == 1;
}

RatCoeff RatCoeff::operator-() const {
    RatCoeff r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatCoeff RatCoeff::operator+(const RatCoeff& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return RatCoeff(num_ + o.num_, den_);
    return RatCoeff(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatCoeff RatCoeff::operator-(const RatCoeff& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return -o;
    if (den_ == o.den_) return RatCoeff(num_ - o.num_, den_);
    return RatCoeff(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatCoeff RatCoeff::operator*(const RatCoeff& o) const {
    if (is_zero() || o.is_zero()) return RatCoeff();
    return RatCoeff(num_ * o.num_, den_ * o.den_);
}

RatCoeff RatCoeff::operator/(const RatCoeff& o) const {
    if (o.is_zero()) throw std::domain_error("RatCoeff: division by zero");
    if (is_zero()) return RatCoeff();
    return RatCoeff(num_ * o.den_, den_ * o.num_);
}

RatCoeff RatCoeff::inverse() const {
    if (is_zero()) throw std::domain_error("RatCoeff: inverse of zero");
    return RatCoeff(den_, num_);
}

RatCoeff RatCoeff::stretched(int k) const {
    RatCoeff r;
    r.num_ = num_.stretch(k);
    r.den_ = den_.stretch(k);
    // Stretching preserves coprimality and the sign of the leading
    // coefficient, so the result is already normalized.
    return r;
}

mpq_class RatCoeff::eval(const mpq_class& s_val) const {
    mpq_class d = den_.eval(s_val);
    if (d == 0)
        throw PoleError("RatCoeff: denominator " + den_.str() +
                        " vanishes at the requested point");
    return mpq_class(num_.eval(s_val) / d);
}

bool RatCoeff::check_normalized() const {
    if (den_.is_zero()) return false;
    if (den_.lead() < 0) return false;
    if (num_.is_zero()) return den_.is_constant() && den_.lead() == 1;
    IntPoly g = poly_gcd(num_, den_);
    if (!(g.is_constant() && g.lead() == 1)) return false;
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), num_.content().get_mpz_t(),
            den_.content().get_mpz_t());
    return cg == 1;
}

std::string RatCoeff::str() const {
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace chl
