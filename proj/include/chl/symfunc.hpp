#pragma once

#include <map>
#include <string>
#include <vector>

#include "chl/partition.hpp"
#include "chl/ratcoeff.hpp"
#include "chl/spectral.hpp"

namespace chl {

// Coefficient map on a partition-indexed basis (used for the capital-Q basis
// among others).
using PartitionMap = std::map<Partition, RatCoeff>;

// Element of the single-alphabet symmetric-function algebra, stored either
// in the q-basis (monomials q_lambda = q_{lambda_1} q_{lambda_2} ...) or the
// p-basis (monomials p_lambda = p_{lambda_1} p_{lambda_2} ...).  In both
// bases a monomial is indexed by the partition of its factor multiset, so
// multiplication is multiset union.  Zero coefficients are never stored;
// mixing bases in arithmetic throws std::logic_error.
class SymElem {
  public:
    enum class Basis { q, p };

    explicit SymElem(Basis b = Basis::q) : basis_(b) {}

    static SymElem zero(Basis b) { return SymElem(b); }
    static SymElem one(Basis b) { return monomial(b, Partition(), RatCoeff(1)); }
    static SymElem monomial(Basis b, const Partition& idx,
                            RatCoeff c = RatCoeff(1));
    static SymElem q_monomial(const Partition& idx, RatCoeff c = RatCoeff(1)) {
        return monomial(Basis::q, idx, std::move(c));
    }
    static SymElem p_monomial(const Partition& idx, RatCoeff c = RatCoeff(1)) {
        return monomial(Basis::p, idx, std::move(c));
    }

    Basis basis() const { return basis_; }
    const std::map<Partition, RatCoeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Largest weight appearing in the support (0 for the zero element).
    int degree() const;
    RatCoeff coeff(const Partition& idx) const;

    void add_term(const Partition& idx, const RatCoeff& c);

    SymElem operator+(const SymElem& o) const;
    SymElem operator-(const SymElem& o) const;
    SymElem operator*(const SymElem& o) const;
    SymElem operator-() const;
    SymElem& operator+=(const SymElem& o) { return *this = *this + o; }
    SymElem& operator-=(const SymElem& o) { return *this = *this - o; }
    SymElem& operator*=(const SymElem& o) { return *this = *this * o; }
    SymElem scaled(const RatCoeff& a) const;

    bool operator==(const SymElem& o) const {
        return basis_ == o.basis_ && terms_ == o.terms_;
    }
    bool operator!=(const SymElem& o) const { return !(*this == o); }

    // Expand into the p-basis (identity when already there).
    SymElem to_p() const;
    // Express in the q-basis by triangular elimination (identity when
    // already there); exact, no cap needed for finite elements.
    SymElem to_q() const;

    // "coeff * q[2,1]" / "coeff * p1^2 p3"; "0" when empty.
    std::string str() const;

  private:
    Basis basis_;
    std::map<Partition, RatCoeff> terms_;
};

// q_n expanded in the p-basis: the z^n coefficient of
// exp(sum_m (1-t^m) p_m z^m / m); zero for n < 0.
SymElem expand_qn(int n);

// Same coefficient computed by direct exponential-series combinatorics
// instead of the recurrence; test oracle.
SymElem expand_qn_series_oracle(int n);

// Hall-Littlewood Q_lambda in the q-basis, by raising-operator expansion.
// Memoized; concurrent callers are safe.
SymElem hl_Q(const Partition& lambda);

// P_lambda = Q_lambda / b_lambda with b_lambda = <Q_lambda, Q_lambda>.
SymElem hl_P(const Partition& lambda);

// The t-deformed power-sum pairing <p_la, p_mu> = delta * z_la *
// prod_i (1 - t^{la_i})^{-1}, extended bilinearly.
RatCoeff hl_scalar(const SymElem& f, const SymElem& g);

// <Q_lambda, Q_lambda>, memoized.
RatCoeff b_lambda(const Partition& lambda);

// q_n * Q_lambda expanded in the Q-basis: sum over horizontal n-strip
// extensions mu of lambda with coefficient psi_{mu/lambda}.
PartitionMap pieri_multiply(int n, const Partition& lambda);

// Expand an arbitrary element in the Q-basis (exact elimination).
PartitionMap decompose_Q(const SymElem& f);

// Single-variable skew function: psi_{lambda/mu}(t) z^{|lambda|-|mu|} when
// the rows interlace, else zero.  Lives in SpectralPoly over the variable
// `var`.
SpectralPoly<RatCoeff> skew_P_single(const Partition& lambda,
                                     const Partition& mu,
                                     const std::string& var = "z");

// Partial derivative with respect to p_m (p-basis).
SymElem d_dp(int m, const SymElem& f);

// q_k-perp: the z^k coefficient of exp(sum_m z^m d/dp_m) applied to f.
SymElem apply_qk_perp(int k, const SymElem& f);

// H_M(z) f = sum_{k=0}^{M} z^k (q_k f); slot k of the result is the z^k
// coefficient, in the q-basis.
std::vector<SymElem> apply_H(int M, const SymElem& f);

// H_M-perp(z) f = sum_{k=0}^{M} z^k (q_k-perp f); slot k is the z^k
// coefficient, in the p-basis.
std::vector<SymElem> apply_H_perp(int M, const SymElem& f);

// All la with mu inside la inside bound such that la/mu is a horizontal
// strip (any size), including la = mu.
std::vector<Partition> strip_extensions_within(const Partition& mu,
                                               const Partition& bound);

// Evaluate P_lambda at N values by iterating the single-variable branching
// rule over increasing chains inside lambda.  C needs +, -, *,
// scale_coeff(RatCoeff, C); `one` supplies the multiplicative unit.
// Returns zero when l(lambda) > N.
template <typename C>
C hl_P_evaluate(const Partition& lambda, const std::vector<C>& values,
                const C& one) {
    C zero = one - one;
    if (lambda.length() > static_cast<int>(values.size())) return zero;
    std::map<Partition, C> states;
    states.emplace(Partition(), one);
    for (const C& x : values) {
        std::map<Partition, C> next;
        for (const auto& [nu, acc] : states) {
            for (const Partition& la : strip_extensions_within(nu, lambda)) {
                C contrib = acc;
                for (int b = la.size() - nu.size(); b-- > 0;)
                    contrib = contrib * x;
                contrib = scale_coeff(psi_coefficient(la, nu), contrib);
                auto it = next.find(la);
                if (it == next.end())
                    next.emplace(la, std::move(contrib));
                else
                    it->second = it->second + contrib;
            }
        }
        states = std::move(next);
    }
    auto it = states.find(lambda);
    return it == states.end() ? zero : it->second;
}

}  // namespace chl
