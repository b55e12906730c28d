#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chl/partition.hpp"
#include "chl/ratcoeff.hpp"
#include "chl/spectral.hpp"
#include "chl/symfunc.hpp"

namespace chl {

using PartitionPair = std::pair<Partition, Partition>;
using PairMap = std::map<PartitionPair, RatCoeff>;

// Raised when a graded computation is asked to leave its configured degree
// window.  Capped operators fail loudly instead of truncating silently.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Element of the two-alphabet algebra generated by p_1(x), p_2(x), ... and
// p_1(y), p_2(y), ....  Stored either in the q-basis (monomials
// q_[a|b] = q_a(x) q_b(y)) or the p-basis (monomials p_a(x) p_b(y)); in both
// cases a term is keyed by the pair of index partitions, so multiplication
// is componentwise multiset union.  The zero element compares and combines
// basis-agnostically; mixing nonzero elements of different bases throws.
class CoupledSymElem {
  public:
    enum class Basis { q, p };

    explicit CoupledSymElem(Basis b = Basis::q) : basis_(b) {}

    static CoupledSymElem zero(Basis b) { return CoupledSymElem(b); }
    static CoupledSymElem one(Basis b) {
        return monomial(b, Partition(), Partition(), RatCoeff(1));
    }
    static CoupledSymElem monomial(Basis b, const Partition& x,
                                   const Partition& y,
                                   RatCoeff c = RatCoeff(1));
    static CoupledSymElem q_monomial(const Partition& x, const Partition& y,
                                     RatCoeff c = RatCoeff(1)) {
        return monomial(Basis::q, x, y, std::move(c));
    }
    static CoupledSymElem p_monomial(const Partition& x, const Partition& y,
                                     RatCoeff c = RatCoeff(1)) {
        return monomial(Basis::p, x, y, std::move(c));
    }

    Basis basis() const { return basis_; }
    const PairMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RatCoeff coeff(const Partition& x, const Partition& y) const;
    void add_term(const Partition& x, const Partition& y, const RatCoeff& c);

    // Largest x-weight (resp. y-weight) in the support; 0 when zero.
    int max_x_weight() const;
    int max_y_weight() const;

    // Net degree under deg x_n = n, deg y_n = -n, when every term has the
    // same one; nullopt otherwise or for the zero element.
    std::optional<long> homogeneous_degree() const;

    CoupledSymElem operator+(const CoupledSymElem& o) const;
    CoupledSymElem operator-(const CoupledSymElem& o) const;
    CoupledSymElem operator*(const CoupledSymElem& o) const;
    CoupledSymElem operator-() const;
    CoupledSymElem& operator+=(const CoupledSymElem& o) {
        return *this = *this + o;
    }
    CoupledSymElem& operator-=(const CoupledSymElem& o) {
        return *this = *this - o;
    }
    CoupledSymElem& operator*=(const CoupledSymElem& o) {
        return *this = *this * o;
    }
    CoupledSymElem scaled(const RatCoeff& a) const;

    bool operator==(const CoupledSymElem& o) const;
    bool operator!=(const CoupledSymElem& o) const { return !(*this == o); }

    // Expand into the p-basis (identity when already there).
    CoupledSymElem to_p() const;
    // Express in the q-basis by triangular elimination; exact.
    CoupledSymElem to_q() const;

    // "coeff * q[2,1|1]" with "-" for an empty side; "q[-|-]" is the unit
    // monomial.  "0" when zero.
    std::string str() const;

  private:
    Basis basis_;
    PairMap terms_;
};

inline CoupledSymElem scale_coeff(const RatCoeff& a, const CoupledSymElem& f) {
    return f.scaled(a);
}

// Which alphabets an operator multiplies by and differentiates in.
struct AlphabetUse {
    bool multiplies_x = false;
    bool multiplies_y = false;
    bool differentiates_x = false;
    bool differentiates_y = false;
};

// Degree-capped linear operator on CoupledSymElem, stored as its action on
// p-basis monomials, computed on demand and memoized.  Feeding it a term
// whose x- or y-weight exceeds the cap throws CapExceeded; results inside
// the window are exact.  Copies share the memo; concurrent use is safe.
class GradedOperator {
  public:
    using Kernel =
        std::function<CoupledSymElem(const Partition&, const Partition&)>;

    explicit GradedOperator(Kernel kernel, int cap_x = 10, int cap_y = 10,
                            AlphabetUse use = {});

    CoupledSymElem apply(const CoupledSymElem& f) const;

    int cap_x() const { return cap_x_; }
    int cap_y() const { return cap_y_; }
    const AlphabetUse& alphabet_use() const { return use_; }

  private:
    struct Memo {
        std::mutex mu;
        std::map<PartitionPair, CoupledSymElem> map;
    };

    Kernel kernel_;
    int cap_x_;
    int cap_y_;
    AlphabetUse use_;
    std::shared_ptr<Memo> memo_;
};

// g with its alphabet replaced by x - dual-y, realized in the p-basis as
// p_n |-> p_n(x) - n d/dp_n(y) (alphabet_x = true), or the mirror image
// y - dual-x (alphabet_x = false).
GradedOperator substituted_operator(const SymElem& g, bool alphabet_x,
                                    int cap_x = 10, int cap_y = 10);

// One application without building a capped operator (exact, no cap).
CoupledSymElem apply_substituted(const SymElem& g, bool alphabet_x,
                                 const CoupledSymElem& f);

// Series coefficient of D^k in (1-D)(1-t^2 D)/(1-tD)^2: 1 for k = 0,
// -k (1-t)^2 t^(k-1) for k >= 1.
RatCoeff coupled_D_coeff(int k);
// Series coefficient of D^k in the reciprocal (1-tD)^2/((1-D)(1-t^2 D)):
// 1 for k = 0, (1-t)^2 (1 + t^2 + ... + t^(2k-2)) for k >= 1.
RatCoeff coupled_D_inverse_coeff(int k);

// z^n coefficient of the reciprocal series 1/(sum_k q_k z^k), in the
// p-basis; zero for n < 0.
SymElem expand_qn_reciprocal(int n);

// Coupled Hall-Littlewood function, three independent ways.

// Raising-operator form: the ratio factors on each alphabet and the mixed
// lowering factors applied to q_[lambda|mu], on integer index vectors.
CoupledSymElem coupled_Q_raising(const Partition& lambda, const Partition& mu);

// Coefficient extraction from the kernel form: expand the ratio and mixed
// factors in the auxiliary variables z_1..z_l, w_1..w_l' and read off the
// z^lambda w^mu coefficient against the generating series of the q_k.
CoupledSymElem coupled_Q_vertex(const Partition& lambda, const Partition& mu,
                                int cap = 10);

// Substituted-alphabet form: Q_lambda(x - dual-y) Q_mu(y - dual-x) applied
// to 1, composing capped operators right to left.
CoupledSymElem coupled_Q_substituted(const Partition& lambda,
                                     const Partition& mu, int cap_x = 10,
                                     int cap_y = 10);

// Dispatch wrapper: computes via the raising form (memoized); with verify
// set, also runs the other two constructions and throws std::logic_error on
// any disagreement.
CoupledSymElem coupled_Q(const Partition& lambda, const Partition& mu,
                         bool verify = false);

// Exact expansion of f in the coupled Q-basis by triangular elimination.
PairMap coupled_decompose(const CoupledSymElem& f);

// Structured triangularity check of the q-basis expansion of Q_[lambda|mu].
struct TriangularityReport {
    Partition lambda, mu;
    bool leading_is_one = false;
    bool support_ok = false;
    bool coeffs_integral = false;
    std::vector<std::string> violations;
    bool pass() const {
        return leading_is_one && support_ok && coeffs_integral;
    }
};
TriangularityReport triangularity_report(const Partition& lambda,
                                         const Partition& mu);

// Expansion of Q_[kappa|theta] * Q_[nu|eta] over the coupled Q-basis.
PairMap structure_constants(const Partition& kappa, const Partition& theta,
                            const Partition& nu, const Partition& eta,
                            int cap_x = 10, int cap_y = 10);

// Half vertex operators.  gamma_minus_action(which, ...) is the truncated
// action of the raising exponential on alphabet 1 (= x side) or 2 (= y
// side): slot z^k holds q_k(alphabet - dual-other) f for k = 0..cap.
// gamma_plus_action is the pure-derivative exponential: slot z^(-k) holds
// the k-th divided derivative term; it terminates on its own once k
// exhausts the alphabet degree of f.
SpectralPoly<CoupledSymElem> gamma_minus_action(int which,
                                                const std::string& zvar,
                                                const CoupledSymElem& f,
                                                int cap, int cap_x = 10,
                                                int cap_y = 10);
SpectralPoly<CoupledSymElem> gamma_plus_action(int which,
                                               const std::string& zvar,
                                               const CoupledSymElem& f,
                                               int cap, int cap_x = 10,
                                               int cap_y = 10);

// Modes of the deformed free-field pair X(z), Y(z): kind selects the field
// and the sign of the exponentials; n is the z-power extracted after
// composing the two truncated exponential phases.
enum class FermionKind { Xplus, Xminus, Yplus, Yminus };
CoupledSymElem fermion_mode(FermionKind kind, int n, const CoupledSymElem& f,
                            int cap_x = 10, int cap_y = 10);

// Pass/fail report with witnesses for identity sweeps.
struct RelationReport {
    long checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Exhaustive check of the quadratic exchange relations among the X modes
// and among the Y modes (including the (1-t)^2 delta_{m+n,1} inhomogeneity
// across signs) and of X/Y mode commutativity, on all q-basis monomials of
// total weight <= degree_cap, for |n|, |m| <= index_range.
RelationReport fermion_relations_check(int index_range, int degree_cap);

// Checks that q_k(y - dual-x) commutes with Q_lambda(x - dual-y) on all
// q-basis monomials of total weight <= degree_cap, for k <= k_max and
// lambda in lambda_set.
RelationReport cross_commutation_check(int k_max,
                                       const std::vector<Partition>& lambda_set,
                                       int degree_cap);

}  // namespace chl
