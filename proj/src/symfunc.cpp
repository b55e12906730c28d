#include "chl/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace chl {

SymElem SymElem::monomial(Basis b, const Partition& idx, RatCoeff c) {
    SymElem e(b);
    e.add_term(idx, c);
    return e;
}

int SymElem::degree() const {
    int d = 0;
    for (const auto& [la, c] : terms_) d = std::max(d, la.size());
    return d;
}

RatCoeff SymElem::coeff(const Partition& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? RatCoeff() : it->second;
}

void SymElem::add_term(const Partition& idx, const RatCoeff& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SymElem SymElem::operator+(const SymElem& o) const {
    if (basis_ != o.basis_)
        throw std::logic_error("SymElem: basis mismatch in +");
    SymElem r(*this);
    for (const auto& [la, c] : o.terms_) r.add_term(la, c);
    return r;
}

SymElem SymElem::operator-(const SymElem& o) const {
    if (basis_ != o.basis_)
        throw std::logic_error("SymElem: basis mismatch in -");
    SymElem r(*this);
    for (const auto& [la, c] : o.terms_) r.add_term(la, -c);
    return r;
}

SymElem SymElem::operator-() const {
    SymElem r(basis_);
    for (const auto& [la, c] : terms_) r.terms_.emplace(la, -c);
    return r;
}

SymElem SymElem::operator*(const SymElem& o) const {
    if (basis_ != o.basis_)
        throw std::logic_error("SymElem: basis mismatch in *");
    SymElem r(basis_);
    for (const auto& [la, ca] : terms_) {
        for (const auto& [mu, cb] : o.terms_) {
            std::vector<int> parts(la.parts());
            parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
            r.add_term(Partition::from_multiset(std::move(parts)), ca * cb);
        }
    }
    return r;
}

SymElem SymElem::scaled(const RatCoeff& a) const {
    SymElem r(basis_);
    if (a.is_zero()) return r;
    for (const auto& [la, c] : terms_) r.terms_.emplace(la, a * c);
    return r;
}

std::string SymElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [la, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str();
        out += " * ";
        if (basis_ == Basis::q) {
            out += "q" + la.str();
        } else if (la.empty()) {
            out += "1";
        } else {
            std::string mono;
            // ascending power-sum index
            for (int m = 1; m <= la.part(1); ++m) {
                int a = la.mult(m);
                if (a == 0) continue;
                if (!mono.empty()) mono += " ";
                mono += "p" + std::to_string(m);
                if (a > 1) mono += "^" + std::to_string(a);
            }
            out += mono;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// q_n in the p-basis

namespace {

std::mutex qn_mutex;
std::vector<SymElem> qn_cache;  // densely filled from n = 0 upward

}  // namespace

SymElem expand_qn(int n) {
    if (n < 0) return SymElem::zero(SymElem::Basis::p);
    std::lock_guard<std::mutex> lock(qn_mutex);
    if (qn_cache.empty()) qn_cache.push_back(SymElem::one(SymElem::Basis::p));
    for (int j = static_cast<int>(qn_cache.size()); j <= n; ++j) {
        // j q_j = sum_{m=1}^{j} (1 - t^m) p_m q_{j-m}
        SymElem q = SymElem::zero(SymElem::Basis::p);
        for (int m = 1; m <= j; ++m) {
            SymElem pm = SymElem::p_monomial(Partition({m}),
                                             RatCoeff::one_minus_t_pow(m));
            q += pm * qn_cache[j - m];
        }
        qn_cache.push_back(q.scaled(RatCoeff(mpq_class(1, j))));
    }
    return qn_cache[n];
}

SymElem expand_qn_series_oracle(int n) {
    if (n < 0) return SymElem::zero(SymElem::Basis::p);
    SymElem out = SymElem::zero(SymElem::Basis::p);
    for (const Partition& rho : partitions_of(n)) {
        RatCoeff c(1);
        for (int m = 1; m <= (rho.empty() ? 0 : rho.part(1)); ++m) {
            int a = rho.mult(m);
            if (a == 0) continue;
            RatCoeff cm = RatCoeff::one_minus_t_pow(m) *
                          RatCoeff(mpq_class(1, m));
            RatCoeff pw(1);
            mpz_class fact = 1;
            for (int k = 1; k <= a; ++k) {
                pw *= cm;
                fact *= k;
            }
            c *= pw * RatCoeff(mpq_class(mpz_class(1), fact));
        }
        out.add_term(rho, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Raising-operator expansion of Q_lambda

namespace {

std::mutex q_cache_mutex;
std::map<Partition, SymElem> hlq_cache;
std::map<Partition, SymElem> q_monomial_p_cache;  // q_lambda in the p-basis
std::map<Partition, RatCoeff> b_cache;

SymElem hl_Q_uncached(const Partition& lambda) {
    int l = lambda.length();
    std::map<std::vector<int>, RatCoeff> states;
    states.emplace(lambda.parts(), RatCoeff(1));
    RatCoeff omt = RatCoeff::one_minus_t_pow(1);
    // Factors (1 - R_ij)/(1 - t R_ij) = 1 - (1-t) sum_{k>=1} t^{k-1} R_ij^k,
    // processed with first index descending so an index that would go
    // negative can never be raised again (those branches vanish and are
    // pruned by capping k at the current value of v_j).
    for (int i = l - 1; i >= 1; --i) {
        for (int j = i + 1; j <= l; ++j) {
            std::map<std::vector<int>, RatCoeff> next;
            for (const auto& [v, c] : states) {
                for (int k = 0; k <= v[j - 1]; ++k) {
                    std::vector<int> w(v);
                    w[i - 1] += k;
                    w[j - 1] -= k;
                    RatCoeff nc =
                        k == 0 ? c : -(omt * RatCoeff::t_pow(k - 1)) * c;
                    auto it = next.find(w);
                    if (it == next.end())
                        next.emplace(std::move(w), nc);
                    else {
                        it->second += nc;
                        if (it->second.is_zero()) next.erase(it);
                    }
                }
            }
            states = std::move(next);
        }
    }
    SymElem out(SymElem::Basis::q);
    for (const auto& [v, c] : states) {
        std::vector<int> parts;
        for (int x : v)
            if (x != 0) parts.push_back(x);
        out.add_term(Partition::from_multiset(std::move(parts)), c);
    }
    return out;
}

// q_lambda expanded in the p-basis (memo under q_cache_mutex).
const SymElem& q_monomial_to_p(const Partition& lambda) {
    auto it = q_monomial_p_cache.find(lambda);
    if (it != q_monomial_p_cache.end()) return it->second;
    SymElem prod = SymElem::one(SymElem::Basis::p);
    for (int part : lambda.parts()) prod *= expand_qn(part);
    return q_monomial_p_cache.emplace(lambda, std::move(prod)).first->second;
}

}  // namespace

SymElem hl_Q(const Partition& lambda) {
    std::lock_guard<std::mutex> lock(q_cache_mutex);
    auto it = hlq_cache.find(lambda);
    if (it != hlq_cache.end()) return it->second;
    SymElem q = hl_Q_uncached(lambda);
    hlq_cache.emplace(lambda, q);
    return q;
}

SymElem SymElem::to_p() const {
    if (basis_ == Basis::p) return *this;
    SymElem out(Basis::p);
    std::lock_guard<std::mutex> lock(q_cache_mutex);
    for (const auto& [la, c] : terms_)
        out += q_monomial_to_p(la).scaled(c);
    return out;
}

SymElem SymElem::to_q() const {
    if (basis_ == Basis::q) return *this;
    // split by weight; within one weight eliminate in canonical order, which
    // lists dominance-larger (coarser) partitions first
    std::map<int, SymElem> by_weight;
    for (const auto& [la, c] : terms_) {
        auto [it, fresh] = by_weight.try_emplace(la.size(), Basis::p);
        it->second.add_term(la, c);
    }
    SymElem out(Basis::q);
    std::lock_guard<std::mutex> lock(q_cache_mutex);
    for (auto& [w, residual] : by_weight) {
        for (const Partition& la : partitions_of(w)) {
            RatCoeff r = residual.coeff(la);
            if (r.is_zero()) continue;
            const SymElem& qp = q_monomial_to_p(la);
            RatCoeff a = r / qp.coeff(la);
            out.add_term(la, a);
            residual -= qp.scaled(a);
        }
        if (!residual.is_zero())
            throw std::logic_error(
                "SymElem::to_q: elimination left a nonzero residual");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scalar product and dual bases

RatCoeff hl_scalar(const SymElem& f, const SymElem& g) {
    SymElem fp = f.to_p();
    SymElem gp = g.to_p();
    RatCoeff total;
    for (const auto& [la, cf] : fp.terms()) {
        RatCoeff cg = gp.coeff(la);
        if (cg.is_zero()) continue;
        RatCoeff pair(mpz_class(z_lambda(la)));
        for (int part : la.parts())
            pair /= RatCoeff::one_minus_t_pow(part);
        total += cf * cg * pair;
    }
    return total;
}

RatCoeff b_lambda(const Partition& lambda) {
    {
        std::lock_guard<std::mutex> lock(q_cache_mutex);
        auto it = b_cache.find(lambda);
        if (it != b_cache.end()) return it->second;
    }
    SymElem Q = hl_Q(lambda);
    RatCoeff b = hl_scalar(Q, Q);
    std::lock_guard<std::mutex> lock(q_cache_mutex);
    b_cache.emplace(lambda, b);
    return b;
}

SymElem hl_P(const Partition& lambda) {
    return hl_Q(lambda).scaled(b_lambda(lambda).inverse());
}

// ---------------------------------------------------------------------------
// Pieri rule and Q-basis decomposition

namespace {

void pieri_rows(const Partition& lambda, int row, int budget,
                std::vector<int>& acc, PartitionMap& out) {
    int rows = lambda.length() + 1;
    if (row > rows) {
        if (budget == 0) {
            std::vector<int> parts;
            for (int x : acc)
                if (x > 0) parts.push_back(x);
            Partition mu(parts);
            out.emplace(mu, psi_coefficient(mu, lambda));
        }
        return;
    }
    int lo = lambda.part(row);
    int hi = row == 1 ? lambda.part(1) + budget
                      : std::min(lambda.part(row - 1), lo + budget);
    for (int v = lo; v <= hi && v - lo <= budget; ++v) {
        acc.push_back(v);
        pieri_rows(lambda, row + 1, budget - (v - lo), acc, out);
        acc.pop_back();
    }
}

}  // namespace

PartitionMap pieri_multiply(int n, const Partition& lambda) {
    PartitionMap out;
    std::vector<int> acc;
    pieri_rows(lambda, 1, n, acc, out);
    return out;
}

PartitionMap decompose_Q(const SymElem& f) {
    SymElem residual = f.to_q();
    PartitionMap out;
    // per weight, eliminate from the dominance-smallest partition upward;
    // Q_mu = q_mu + (dominance-larger tail), so each step clears one
    // coefficient for good
    std::map<int, std::vector<Partition>> weights;
    for (const auto& [la, c] : residual.terms()) weights[la.size()];
    for (auto& [w, d] : weights) {
        d = partitions_of(w);
        std::reverse(d.begin(), d.end());
    }
    for (const auto& [w, order] : weights) {
        for (const Partition& mu : order) {
            RatCoeff c = residual.coeff(mu);
            if (c.is_zero()) continue;
            out.emplace(mu, c);
            residual -= hl_Q(mu).scaled(c);
        }
    }
    if (!residual.is_zero())
        throw std::logic_error("decompose_Q: nonzero residual");
    return out;
}

std::vector<Partition> strip_extensions_within(const Partition& mu,
                                               const Partition& bound) {
    std::vector<Partition> out;
    std::vector<int> acc;
    int rows = bound.length();
    // enumerate la row by row: mu_i <= la_i <= min(bound_i, mu_{i-1}) with
    // la weakly decreasing (implied), la/mu a horizontal strip
    std::function<void(int)> rec = [&](int row) {
        if (row > rows) {
            std::vector<int> parts;
            for (int x : acc)
                if (x > 0) parts.push_back(x);
            out.push_back(Partition(std::move(parts)));
            return;
        }
        int lo = mu.part(row);
        int hi = std::min(bound.part(row),
                          row == 1 ? bound.part(1) : mu.part(row - 1));
        for (int v = lo; v <= hi; ++v) {
            acc.push_back(v);
            rec(row + 1);
            acc.pop_back();
        }
    };
    if (rows == 0) {
        out.push_back(Partition());
        return out;
    }
    rec(1);
    return out;
}

SpectralPoly<RatCoeff> skew_P_single(const Partition& lambda,
                                     const Partition& mu,
                                     const std::string& var) {
    std::vector<std::string> vars{var};
    int n = lambda.size() - mu.size();
    if (n < 0 || !is_horizontal_strip(lambda, mu, n))
        return SpectralPoly<RatCoeff>::zero(vars);
    return SpectralPoly<RatCoeff>::monomial(vars, {n},
                                            psi_coefficient(lambda, mu));
}

// ---------------------------------------------------------------------------
// Generating operators

SymElem d_dp(int m, const SymElem& f) {
    if (f.basis() != SymElem::Basis::p)
        throw std::logic_error("d_dp: p-basis input required");
    SymElem out(SymElem::Basis::p);
    for (const auto& [la, c] : f.terms()) {
        int a = la.mult(m);
        if (a == 0) continue;
        out.add_term(la.minus_part(m), c * RatCoeff(a));
    }
    return out;
}

SymElem apply_qk_perp(int k, const SymElem& f) {
    if (k < 0) return SymElem::zero(SymElem::Basis::p);
    SymElem fp = f.to_p();
    if (k == 0) return fp;
    SymElem out = SymElem::zero(SymElem::Basis::p);
    for (const Partition& rho : partitions_of(k)) {
        SymElem g = fp;
        mpz_class denom = 1;
        for (int m = 1; m <= rho.part(1) && !g.is_zero(); ++m) {
            int a = rho.mult(m);
            for (int r = 0; r < a; ++r) g = d_dp(m, g);
            for (int r = 1; r <= a; ++r) denom *= r;
        }
        if (!g.is_zero())
            out += g.scaled(RatCoeff(mpq_class(mpz_class(1), denom)));
    }
    return out;
}

std::vector<SymElem> apply_H(int M, const SymElem& f) {
    SymElem fq = f.to_q();
    std::vector<SymElem> slots;
    slots.reserve(M + 1);
    for (int k = 0; k <= M; ++k) {
        if (k == 0) {
            slots.push_back(fq);
            continue;
        }
        slots.push_back(SymElem::q_monomial(Partition({k})) * fq);
    }
    return slots;
}

std::vector<SymElem> apply_H_perp(int M, const SymElem& f) {
    SymElem fp = f.to_p();
    std::vector<SymElem> slots;
    slots.reserve(M + 1);
    for (int k = 0; k <= M; ++k) slots.push_back(apply_qk_perp(k, fp));
    return slots;
}

}  // namespace chl
