#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "chl/ratcoeff.hpp"

namespace chl {

// Customization point: multiply a coefficient of type C by a scalar from the
// ground field.  Coefficient types living in other headers provide their own
// overload.
inline RatCoeff scale_coeff(const RatCoeff& a, const RatCoeff& x) {
    return a * x;
}

// Graded-lex order on exponent vectors: total degree first, then lex.
// Gives every polynomial a canonical term sequence.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a,
                    const std::vector<int>& b) const {
        long sa = std::accumulate(a.begin(), a.end(), 0L);
        long sb = std::accumulate(b.begin(), b.end(), 0L);
        if (sa != sb) return sa < sb;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end());
    }
};

// Sparse Laurent polynomial in a declared tuple of spectral variables, with
// coefficients in C.  C must provide: default ctor (= zero), is_zero(),
// +, -, *, ==, str(), and a scale_coeff(RatCoeff, C) overload.  Exponents may
// be negative.  Zero coefficients are never stored.
template <typename C>
class SpectralPoly {
  public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, C, GradedLexLess>;

    SpectralPoly() = default;
    explicit SpectralPoly(std::vector<std::string> vars)
        : vars_(std::move(vars)) {}

    static SpectralPoly zero(std::vector<std::string> vars) {
        return SpectralPoly(std::move(vars));
    }
    static SpectralPoly constant(std::vector<std::string> vars, C value) {
        SpectralPoly p(std::move(vars));
        p.add_term(Exps(p.vars_.size(), 0), std::move(value));
        return p;
    }
    static SpectralPoly monomial(std::vector<std::string> vars, Exps exps,
                                 C value) {
        SpectralPoly p(std::move(vars));
        if (exps.size() != p.vars_.size())
            throw std::logic_error("SpectralPoly: exponent arity mismatch");
        p.add_term(std::move(exps), std::move(value));
        return p;
    }
    // The variable `name` itself, raised to `exp`, with unit coefficient.
    static SpectralPoly var_pow(std::vector<std::string> vars,
                                const std::string& name, int exp, C unit) {
        SpectralPoly p(std::move(vars));
        Exps e(p.vars_.size(), 0);
        e[p.var_index(name)] = exp;
        p.add_term(std::move(e), std::move(unit));
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    size_t var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw std::logic_error("SpectralPoly: unknown variable " + name);
    }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    typename TermMap::const_iterator begin() const { return terms_.begin(); }
    typename TermMap::const_iterator end() const { return terms_.end(); }

    // Coefficient of the given monomial (zero if absent).
    C coeff(const Exps& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? C() : it->second;
    }

    void add_term(const Exps& exps, const C& value) { accumulate(exps, value); }

    SpectralPoly operator-() const {
        SpectralPoly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, C() - c);
        return r;
    }

    SpectralPoly operator+(const SpectralPoly& o) const {
        require_same_vars(o);
        SpectralPoly r(*this);
        for (const auto& [e, c] : o.terms_) r.accumulate(e, c);
        return r;
    }

    SpectralPoly operator-(const SpectralPoly& o) const {
        require_same_vars(o);
        SpectralPoly r(*this);
        for (const auto& [e, c] : o.terms_) r.accumulate(e, C() - c);
        return r;
    }

    SpectralPoly operator*(const SpectralPoly& o) const {
        require_same_vars(o);
        SpectralPoly r(vars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                Exps e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.accumulate(e, ca * cb);
            }
        }
        return r;
    }

    SpectralPoly& operator+=(const SpectralPoly& o) { return *this = *this + o; }
    SpectralPoly& operator-=(const SpectralPoly& o) { return *this = *this - o; }
    SpectralPoly& operator*=(const SpectralPoly& o) { return *this = *this * o; }

    bool operator==(const SpectralPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const SpectralPoly& o) const { return !(*this == o); }

    SpectralPoly scaled(const RatCoeff& a) const {
        SpectralPoly r(vars_);
        if (a.is_zero()) return r;
        for (const auto& [e, c] : terms_) {
            C v = scale_coeff(a, c);
            if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
        }
        return r;
    }

    SpectralPoly pow(unsigned k) const {
        SpectralPoly r = constant(vars_, unit_like());
        SpectralPoly base(*this);
        while (k) {
            if (k & 1u) r = r * base;
            base = base * base;
            k >>= 1u;
        }
        return r;
    }

    // Re-express in a new variable tuple: images[i] is the exponent vector
    // (over new_vars) of the monomial that replaces old variable i.  Handles
    // z -> u^2, u -> u^{-1}, and friends.
    SpectralPoly transform_vars(std::vector<std::string> new_vars,
                                const std::vector<Exps>& images) const {
        if (images.size() != vars_.size())
            throw std::logic_error("SpectralPoly: image arity mismatch");
        SpectralPoly r(std::move(new_vars));
        for (const auto& img : images)
            if (img.size() != r.vars_.size())
                throw std::logic_error("SpectralPoly: image arity mismatch");
        for (const auto& [e, c] : terms_) {
            Exps ne(r.vars_.size(), 0);
            for (size_t i = 0; i < e.size(); ++i)
                for (size_t j = 0; j < ne.size(); ++j)
                    ne[j] += e[i] * images[i][j];
            r.accumulate(ne, c);
        }
        return r;
    }

    // Evaluate all spectral variables at scalar values.  Negative exponents
    // invert the value; inverting zero throws.
    C eval_at(const std::vector<RatCoeff>& values) const {
        if (values.size() != vars_.size())
            throw std::logic_error("SpectralPoly: value arity mismatch");
        C total{};
        for (const auto& [e, c] : terms_) {
            RatCoeff m(1);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                RatCoeff base = e[i] > 0 ? values[i] : values[i].inverse();
                for (int k = std::abs(e[i]); k-- > 0;) m *= base;
            }
            total = total + scale_coeff(m, c);
        }
        return total;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.str();
            std::string mono = monomial_str(e);
            if (!mono.empty()) out += " * " + mono;
        }
        return out;
    }

    std::string monomial_str(const Exps& e) const {
        std::string m;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!m.empty()) m += " ";
            m += vars_[i];
            if (e[i] != 1) m += "^" + std::to_string(e[i]);
        }
        return m;
    }

  private:
    void require_same_vars(const SpectralPoly& o) const {
        if (vars_ != o.vars_)
            throw std::logic_error("SpectralPoly: variable tuple mismatch");
    }

    void accumulate(const Exps& e, const C& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    // pow() needs the multiplicative unit of C, so C must be constructible
    // from long 1.
    static C unit_like() { return C(1); }

    std::vector<std::string> vars_;
    TermMap terms_;
};

// Multiply an operator-valued polynomial by a scalar-valued one.
template <typename C>
SpectralPoly<C> scalar_poly_mul(const SpectralPoly<RatCoeff>& a,
                                const SpectralPoly<C>& b) {
    if (a.vars() != b.vars())
        throw std::logic_error("scalar_poly_mul: variable tuple mismatch");
    SpectralPoly<C> r(a.vars());
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            C v = scale_coeff(ca, cb);
            if (!v.is_zero()) {
                SpectralPoly<C> t =
                    SpectralPoly<C>::monomial(a.vars(), e, std::move(v));
                r += t;
            }
        }
    }
    return r;
}

// Verify lhs_num/lhs_den == rhs_num/rhs_den as identities of operator-valued
// rational functions, by clearing denominators.  The scalar denominators must
// be nonzero polynomials; a zero denominator indicates a broken test setup
// rather than a failed identity, so it throws.
template <typename C>
bool spectral_identity_check(const SpectralPoly<C>& lhs_num,
                             const SpectralPoly<RatCoeff>& lhs_den,
                             const SpectralPoly<C>& rhs_num,
                             const SpectralPoly<RatCoeff>& rhs_den) {
    if (lhs_den.is_zero() || rhs_den.is_zero())
        throw std::logic_error("spectral_identity_check: zero denominator");
    return scalar_poly_mul(rhs_den, lhs_num) ==
           scalar_poly_mul(lhs_den, rhs_num);
}

}  // namespace chl
