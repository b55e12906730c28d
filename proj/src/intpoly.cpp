#include "chl/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace chl {

IntPoly::IntPoly(long c) {
    if (c != 0) c_.push_back(mpz_class(c));
}

IntPoly::IntPoly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(degree + 1, mpz_class(0));
        p.c_[degree] = c;
    }
    return p;
}

IntPoly IntPoly::t_pow(int k) { return monomial(1, 2 * k); }

IntPoly IntPoly::one_minus_t_pow(int k) {
    if (k == 0) return IntPoly();
    IntPoly p = IntPoly(1) - t_pow(k);
    return p;
}

IntPoly IntPoly::t_integer(int n) {
    IntPoly p;
    for (int k = 0; k < n; ++k) p = p + t_pow(k);
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

mpz_class IntPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return mpz_class(0);
    return c_[k];
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(c_.size() + k, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    for (size_t i = c_.size(); i-- > 0;) {
        int cmpr = cmp(c_[i], o.c_[i]);
        if (cmpr != 0) return cmpr < 0;
    }
    return false;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    mpz_class g = content();
    IntPoly r = *this;
    for (auto& c : r.c_) c /= g;
    return r;
}

IntPoly IntPoly::divided_by(const IntPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    IntPoly rem = *this;
    if (rem.is_zero()) return IntPoly();
    IntPoly quot;
    quot.c_.assign(std::max<int>(degree() - d.degree() + 1, 0), mpz_class(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.lead().get_mpz_t(), d.lead().get_mpz_t());
        if (r != 0) throw std::domain_error("inexact polynomial division");
        int k = rem.degree() - d.degree();
        quot.c_[k] = q;
        rem = rem - d.shifted(k) * IntPoly(q);
    }
    if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
    quot.trim();
    return quot;
}

IntPoly IntPoly::stretch(int k) const {
    if (is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign((c_.size() - 1) * k + 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    r.trim();
    return r;
}

mpq_class IntPoly::eval(const mpq_class& s0) const {
    mpq_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * s0 + c_[i];
    }
    return acc;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        mpz_class mag = abs(c_[k]);
        bool neg = c_[k] < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (k == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << " ";
            out << "s";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

namespace {

// one pseudo-division round: scale and cancel the leading term until deg < deg(b)
IntPoly pseudo_rem(IntPoly r, const IntPoly& b) {
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        r = r * IntPoly(b.lead()) - b.shifted(k) * IntPoly(r.lead());
    }
    return r;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    if (a.is_zero() && b.is_zero()) return IntPoly();
    if (a.is_zero()) return b.primitive_part().lead() > 0 ? b.primitive_part() : -b.primitive_part();
    if (b.is_zero()) return a.primitive_part().lead() > 0 ? a.primitive_part() : -a.primitive_part();
    if (a.is_constant() || b.is_constant()) return IntPoly(1);
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero() && !b.is_constant()) {
        IntPoly r = pseudo_rem(a, b).primitive_part();
        a = b;
        b = r;
    }
    if (!b.is_zero()) return IntPoly(1);  // nonzero constant remainder: coprime
    return a.lead() > 0 ? a : -a;
}

}  // namespace chl
