#include "chl/coupled.hpp"

#include <algorithm>
#include <tuple>

namespace chl {

namespace {

Partition merged(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    return Partition::from_multiset(std::move(v));
}

std::string pair_str(const Partition& x, const Partition& y) {
    return "[" + parts_str(x) + "|" + parts_str(y) + "]";
}

}  // namespace

CoupledSymElem CoupledSymElem::monomial(Basis b, const Partition& x,
                                        const Partition& y, RatCoeff c) {
    CoupledSymElem r(b);
    r.add_term(x, y, c);
    return r;
}

RatCoeff CoupledSymElem::coeff(const Partition& x, const Partition& y) const {
    auto it = terms_.find({x, y});
    return it == terms_.end() ? RatCoeff() : it->second;
}

void CoupledSymElem::add_term(const Partition& x, const Partition& y,
                              const RatCoeff& c) {
    if (c.is_zero()) return;
    PartitionPair key{x, y};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int CoupledSymElem::max_x_weight() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.first.size());
    return m;
}

int CoupledSymElem::max_y_weight() const {
    int m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second.size());
    return m;
}

std::optional<long> CoupledSymElem::homogeneous_degree() const {
    std::optional<long> deg;
    for (const auto& [k, c] : terms_) {
        long d = static_cast<long>(k.first.size()) - k.second.size();
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

CoupledSymElem CoupledSymElem::operator+(const CoupledSymElem& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (basis_ != o.basis_)
        throw std::logic_error("CoupledSymElem: basis mismatch in +");
    CoupledSymElem r(*this);
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

CoupledSymElem CoupledSymElem::operator-(const CoupledSymElem& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return -o;
    if (basis_ != o.basis_)
        throw std::logic_error("CoupledSymElem: basis mismatch in -");
    CoupledSymElem r(*this);
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

CoupledSymElem CoupledSymElem::operator-() const {
    CoupledSymElem r(basis_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

CoupledSymElem CoupledSymElem::operator*(const CoupledSymElem& o) const {
    if (is_zero() || o.is_zero())
        return CoupledSymElem(is_zero() ? o.basis_ : basis_);
    if (basis_ != o.basis_)
        throw std::logic_error("CoupledSymElem: basis mismatch in *");
    CoupledSymElem r(basis_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(merged(ka.first, kb.first), merged(ka.second, kb.second),
                       ca * cb);
    return r;
}

CoupledSymElem CoupledSymElem::scaled(const RatCoeff& a) const {
    CoupledSymElem r(basis_);
    if (a.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * a);
    return r;
}

bool CoupledSymElem::operator==(const CoupledSymElem& o) const {
    if (is_zero() && o.is_zero()) return true;
    return basis_ == o.basis_ && terms_ == o.terms_;
}

CoupledSymElem CoupledSymElem::to_p() const {
    if (basis_ == Basis::p) return *this;
    CoupledSymElem r(Basis::p);
    for (const auto& [k, c] : terms_) {
        SymElem px = SymElem::q_monomial(k.first).to_p();
        SymElem py = SymElem::q_monomial(k.second).to_p();
        for (const auto& [rx, cx] : px.terms())
            for (const auto& [ry, cy] : py.terms())
                r.add_term(rx, ry, c * cx * cy);
    }
    return r;
}

CoupledSymElem CoupledSymElem::to_q() const {
    if (basis_ == Basis::q) return *this;
    // The p-expansion of q_[a|b] is supported on componentwise refinements
    // of (a, b), and refining lowers the canonical order, so the smallest
    // surviving key is always a diagonal.  Peel it off and repeat.
    CoupledSymElem residual(*this);
    CoupledSymElem out(Basis::q);
    while (!residual.is_zero()) {
        auto it = residual.terms().begin();
        const Partition ax = it->first.first;
        const Partition ay = it->first.second;
        RatCoeff diag = SymElem::q_monomial(ax).to_p().coeff(ax) *
                        SymElem::q_monomial(ay).to_p().coeff(ay);
        RatCoeff c = it->second / diag;
        out.add_term(ax, ay, c);
        residual -= q_monomial(ax, ay, c).to_p();
    }
    return out;
}

std::string CoupledSymElem::str() const {
    if (terms_.empty()) return "0";
    const char* tag = basis_ == Basis::q ? "q" : "p";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str() + " * " + tag + pair_str(k.first, k.second);
    }
    return out;
}

namespace {

// Multiplication by p_m on one alphabet, in the p-basis.
CoupledSymElem mul_pm(bool on_x, int m, const CoupledSymElem& f) {
    CoupledSymElem r(CoupledSymElem::Basis::p);
    for (const auto& [k, c] : f.terms()) {
        if (on_x)
            r.add_term(k.first.plus_part(m), k.second, c);
        else
            r.add_term(k.first, k.second.plus_part(m), c);
    }
    return r;
}

// d/dp_m on one alphabet, in the p-basis.
CoupledSymElem d_dpm(bool on_x, int m, const CoupledSymElem& f) {
    CoupledSymElem r(CoupledSymElem::Basis::p);
    for (const auto& [k, c] : f.terms()) {
        const Partition& side = on_x ? k.first : k.second;
        int mult = side.mult(m);
        if (mult == 0) continue;
        Partition reduced = side.minus_part(m);
        if (on_x)
            r.add_term(reduced, k.second, c * RatCoeff(mult));
        else
            r.add_term(k.first, reduced, c * RatCoeff(mult));
    }
    return r;
}

// z^(-k) slot of exp(+-sum_m z^(-m) d/dp_m) on the chosen alphabet:
// sum over rho |- k of (-+1)^len(rho) / prod_m a_m! times the iterated
// derivative.
CoupledSymElem derivative_slot(bool on_x, int k, const CoupledSymElem& fp,
                               bool negate) {
    CoupledSymElem out(CoupledSymElem::Basis::p);
    for (const Partition& rho : partitions_of(k)) {
        CoupledSymElem h = fp;
        for (int m : rho.parts()) {
            h = d_dpm(on_x, m, h);
            if (h.is_zero()) break;
        }
        if (h.is_zero()) continue;
        mpz_class denom = 1;
        int prev = -1;
        mpz_class run = 0;
        for (int m : rho.parts()) {
            if (m == prev) {
                run += 1;
                denom *= run;
            } else {
                prev = m;
                run = 1;
            }
        }
        RatCoeff c = RatCoeff(1) / RatCoeff(denom);
        if (negate && rho.length() % 2 != 0) c = -c;
        out += h.scaled(c);
    }
    return out;
}

}  // namespace

CoupledSymElem apply_substituted(const SymElem& g, bool alphabet_x,
                                 const CoupledSymElem& f) {
    SymElem gp = g.to_p();
    CoupledSymElem fp = f.to_p();
    CoupledSymElem out(CoupledSymElem::Basis::p);
    for (const auto& [rho, c] : gp.terms()) {
        CoupledSymElem h = fp;
        for (int m : rho.parts())
            h = mul_pm(alphabet_x, m, h) -
                d_dpm(!alphabet_x, m, h).scaled(RatCoeff(m));
        out += h.scaled(c);
    }
    return out;
}

GradedOperator::GradedOperator(Kernel kernel, int cap_x, int cap_y,
                               AlphabetUse use)
    : kernel_(std::move(kernel)),
      cap_x_(cap_x),
      cap_y_(cap_y),
      use_(use),
      memo_(std::make_shared<Memo>()) {}

CoupledSymElem GradedOperator::apply(const CoupledSymElem& f) const {
    CoupledSymElem fp = f.to_p();
    CoupledSymElem out(CoupledSymElem::Basis::p);
    for (const auto& [k, c] : fp.terms()) {
        if (k.first.size() > cap_x_ || k.second.size() > cap_y_)
            throw CapExceeded("graded operator fed p" +
                              pair_str(k.first, k.second) + " beyond cap (" +
                              std::to_string(cap_x_) + ", " +
                              std::to_string(cap_y_) + ")");
        CoupledSymElem img;
        bool found = false;
        {
            std::lock_guard<std::mutex> lock(memo_->mu);
            auto it = memo_->map.find(k);
            if (it != memo_->map.end()) {
                img = it->second;
                found = true;
            }
        }
        if (!found) {
            img = kernel_(k.first, k.second);
            std::lock_guard<std::mutex> lock(memo_->mu);
            memo_->map.emplace(k, img);
        }
        out += img.scaled(c);
    }
    return out;
}

GradedOperator substituted_operator(const SymElem& g, bool alphabet_x,
                                    int cap_x, int cap_y) {
    SymElem gp = g.to_p();
    AlphabetUse use;
    if (alphabet_x) {
        use.multiplies_x = true;
        use.differentiates_y = true;
    } else {
        use.multiplies_y = true;
        use.differentiates_x = true;
    }
    auto kernel = [gp, alphabet_x](const Partition& px, const Partition& py) {
        return apply_substituted(gp, alphabet_x,
                                 CoupledSymElem::p_monomial(px, py));
    };
    return GradedOperator(std::move(kernel), cap_x, cap_y, use);
}

RatCoeff coupled_D_coeff(int k) {
    if (k < 0) throw std::domain_error("coupled_D_coeff: negative index");
    if (k == 0) return RatCoeff(1);
    RatCoeff om = RatCoeff::one_minus_t_pow(1);
    return RatCoeff(-k) * om * om * RatCoeff::t_pow(k - 1);
}

RatCoeff coupled_D_inverse_coeff(int k) {
    if (k < 0)
        throw std::domain_error("coupled_D_inverse_coeff: negative index");
    if (k == 0) return RatCoeff(1);
    RatCoeff om = RatCoeff::one_minus_t_pow(1);
    RatCoeff geo(0);
    for (int j = 0; j < k; ++j) geo += RatCoeff::t_pow(2 * j);
    return om * om * geo;
}

SymElem expand_qn_reciprocal(int n) {
    if (n < 0) return SymElem::zero(SymElem::Basis::p);
    static std::mutex mu;
    static std::vector<SymElem> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (cache.empty()) cache.push_back(SymElem::one(SymElem::Basis::p));
    while (static_cast<int>(cache.size()) <= n) {
        int k = static_cast<int>(cache.size());
        SymElem acc = SymElem::zero(SymElem::Basis::p);
        for (int j = 0; j < k; ++j) acc += cache[j] * expand_qn(k - j);
        cache.push_back(-acc);
    }
    return cache[n];
}

namespace {

using IndexState = std::pair<std::vector<int>, std::vector<int>>;

template <typename K>
void acc_state(std::map<K, RatCoeff>& m, const K& key, const RatCoeff& c) {
    if (c.is_zero()) return;
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
}

// Ratio-factor series term coefficient: (1-R)/(1-tR) = 1 - (1-t) sum_{k>=1}
// t^(k-1) R^k.
RatCoeff ratio_coeff(int k) {
    return -(RatCoeff::one_minus_t_pow(1) * RatCoeff::t_pow(k - 1));
}

// Apply the ratio factors for pairs (i, j), i < j, with first index
// descending, to the chosen component of the index states.  Truncating the
// k-sum at the current j-th entry is exact: with this ordering nothing
// raises entry j afterwards, so states driven negative can never recover.
void ratio_phase(std::map<IndexState, RatCoeff>& states, bool x_side) {
    if (states.empty()) return;
    int l = static_cast<int>(x_side ? states.begin()->first.first.size()
                                    : states.begin()->first.second.size());
    for (int i = l - 1; i >= 1; --i) {
        for (int j = i + 1; j <= l; ++j) {
            std::map<IndexState, RatCoeff> next;
            for (const auto& [s, c] : states) {
                acc_state(next, s, c);
                const std::vector<int>& v = x_side ? s.first : s.second;
                for (int k = 1; k <= v[j - 1]; ++k) {
                    IndexState ns = s;
                    std::vector<int>& w = x_side ? ns.first : ns.second;
                    w[i - 1] += k;
                    w[j - 1] -= k;
                    acc_state(next, ns, c * ratio_coeff(k));
                }
            }
            states = std::move(next);
        }
    }
}

}  // namespace

CoupledSymElem coupled_Q_raising(const Partition& lambda,
                                 const Partition& mu) {
    std::map<IndexState, RatCoeff> states;
    states.emplace(IndexState(lambda.parts(), mu.parts()), RatCoeff(1));

    ratio_phase(states, true);
    ratio_phase(states, false);

    // Mixed lowering factors: every (x-row, y-row) pair; each term lowers
    // both entries by k, so min(current entries) bounds the sum exactly.
    int l = lambda.length(), lp = mu.length();
    for (int i = 1; i <= l; ++i) {
        for (int a = 1; a <= lp; ++a) {
            std::map<IndexState, RatCoeff> next;
            for (const auto& [s, c] : states) {
                int kmax = std::min(s.first[i - 1], s.second[a - 1]);
                for (int k = 0; k <= kmax; ++k) {
                    if (k == 0) {
                        acc_state(next, s, c);
                        continue;
                    }
                    IndexState ns = s;
                    ns.first[i - 1] -= k;
                    ns.second[a - 1] -= k;
                    acc_state(next, ns, c * coupled_D_coeff(k));
                }
            }
            states = std::move(next);
        }
    }

    CoupledSymElem out(CoupledSymElem::Basis::q);
    for (const auto& [s, c] : states)
        out.add_term(Partition::from_multiset(s.first),
                     Partition::from_multiset(s.second), c);
    return out;
}

namespace {

struct VertexState {
    std::vector<int> ze, we, nx, ny;
    bool operator<(const VertexState& o) const {
        return std::tie(ze, we, nx, ny) < std::tie(o.ze, o.we, o.nx, o.ny);
    }
};

}  // namespace

CoupledSymElem coupled_Q_vertex(const Partition& lambda, const Partition& mu,
                                int cap) {
    if (lambda.size() + mu.size() > cap)
        throw CapExceeded("coupled_Q_vertex: |lambda|+|mu| = " +
                          std::to_string(lambda.size() + mu.size()) +
                          " exceeds cap " + std::to_string(cap));
    int l = lambda.length(), lp = mu.length();
    std::map<VertexState, RatCoeff> states;
    states.emplace(
        VertexState{std::vector<int>(l, 0), std::vector<int>(lp, 0), {}, {}},
        RatCoeff(1));

    // Close the z-variables from the innermost factor outwards.  Within
    // stage j every remaining factor only raises the z_j exponent, so
    // capping it at lambda_j is exact; entries lowered below zero at
    // closing time would index a vanishing q and are dropped.
    for (int j = l; j >= 1; --j) {
        int target = lambda.part(j);
        for (int i = 1; i < j; ++i) {
            std::map<VertexState, RatCoeff> next;
            for (const auto& [s, c] : states) {
                acc_state(next, s, c);
                for (int k = 1; s.ze[j - 1] + k <= target; ++k) {
                    VertexState ns = s;
                    ns.ze[j - 1] += k;
                    ns.ze[i - 1] -= k;
                    acc_state(next, ns, c * ratio_coeff(k));
                }
            }
            states = std::move(next);
        }
        for (int a = 1; a <= lp; ++a) {
            std::map<VertexState, RatCoeff> next;
            for (const auto& [s, c] : states) {
                acc_state(next, s, c);
                for (int k = 1; s.ze[j - 1] + k <= target; ++k) {
                    VertexState ns = s;
                    ns.ze[j - 1] += k;
                    ns.we[a - 1] += k;
                    acc_state(next, ns, c * coupled_D_coeff(k));
                }
            }
            states = std::move(next);
        }
        std::map<VertexState, RatCoeff> closed;
        for (const auto& [s, c] : states) {
            int part = target - s.ze[j - 1];
            if (part < 0) continue;
            VertexState ns = s;
            ns.ze[j - 1] = 0;
            if (part > 0) {
                ns.nx.push_back(part);
                std::sort(ns.nx.begin(), ns.nx.end());
            }
            acc_state(closed, ns, c);
        }
        states = std::move(closed);
    }

    for (int b = lp; b >= 1; --b) {
        int target = mu.part(b);
        for (int a = 1; a < b; ++a) {
            std::map<VertexState, RatCoeff> next;
            for (const auto& [s, c] : states) {
                acc_state(next, s, c);
                for (int k = 1; s.we[b - 1] + k <= target; ++k) {
                    VertexState ns = s;
                    ns.we[b - 1] += k;
                    ns.we[a - 1] -= k;
                    acc_state(next, ns, c * ratio_coeff(k));
                }
            }
            states = std::move(next);
        }
        std::map<VertexState, RatCoeff> closed;
        for (const auto& [s, c] : states) {
            int part = target - s.we[b - 1];
            if (part < 0) continue;
            VertexState ns = s;
            ns.we[b - 1] = 0;
            if (part > 0) {
                ns.ny.push_back(part);
                std::sort(ns.ny.begin(), ns.ny.end());
            }
            acc_state(closed, ns, c);
        }
        states = std::move(closed);
    }

    CoupledSymElem out(CoupledSymElem::Basis::q);
    for (const auto& [s, c] : states)
        out.add_term(Partition::from_multiset(s.nx),
                     Partition::from_multiset(s.ny), c);
    return out;
}

CoupledSymElem coupled_Q_substituted(const Partition& lambda,
                                     const Partition& mu, int cap_x,
                                     int cap_y) {
    if (lambda.size() > cap_x || mu.size() > cap_y)
        throw CapExceeded("coupled_Q_substituted: " +
                          pair_str(lambda, mu) + " exceeds caps (" +
                          std::to_string(cap_x) + ", " +
                          std::to_string(cap_y) + ")");
    GradedOperator op_y = substituted_operator(hl_Q(mu), false, cap_x, cap_y);
    GradedOperator op_x = substituted_operator(hl_Q(lambda), true, cap_x,
                                               cap_y);
    return op_x.apply(op_y.apply(CoupledSymElem::one(CoupledSymElem::Basis::p)));
}

namespace {

std::mutex cq_mu;
std::map<PartitionPair, CoupledSymElem> cq_cache;

}  // namespace

CoupledSymElem coupled_Q(const Partition& lambda, const Partition& mu,
                         bool verify) {
    CoupledSymElem r;
    bool found = false;
    {
        std::lock_guard<std::mutex> lock(cq_mu);
        auto it = cq_cache.find({lambda, mu});
        if (it != cq_cache.end()) {
            r = it->second;
            found = true;
        }
    }
    if (!found) {
        r = coupled_Q_raising(lambda, mu);
        std::lock_guard<std::mutex> lock(cq_mu);
        cq_cache.emplace(PartitionPair{lambda, mu}, r);
    }
    if (verify) {
        CoupledSymElem v =
            coupled_Q_vertex(lambda, mu, lambda.size() + mu.size());
        if (v != r)
            throw std::logic_error(
                "coupled_Q: vertex extraction disagrees with raising form at " +
                pair_str(lambda, mu));
        CoupledSymElem s =
            coupled_Q_substituted(lambda, mu, lambda.size(), mu.size());
        if (s != r.to_p())
            throw std::logic_error(
                "coupled_Q: substituted form disagrees with raising form at " +
                pair_str(lambda, mu));
    }
    return r;
}

PairMap coupled_decompose(const CoupledSymElem& f) {
    CoupledSymElem residual = f.to_q();
    PairMap out;
    while (!residual.is_zero()) {
        // Pick the least-dominant key among those of maximal total weight:
        // subtracting its Q adds only smaller keys at this weight, plus
        // strictly lighter terms.
        int maxw = -1;
        for (const auto& [k, c] : residual.terms())
            maxw = std::max(maxw, k.first.size() + k.second.size());
        auto pick = residual.terms().end();
        for (auto it = residual.terms().begin(); it != residual.terms().end();
             ++it)
            if (it->first.first.size() + it->first.second.size() == maxw)
                pick = it;
        const Partition ax = pick->first.first;
        const Partition ay = pick->first.second;
        RatCoeff c = pick->second;
        out[{ax, ay}] = c;
        residual -= coupled_Q(ax, ay).scaled(c);
    }
    return out;
}

TriangularityReport triangularity_report(const Partition& lambda,
                                         const Partition& mu) {
    TriangularityReport rep;
    rep.lambda = lambda;
    rep.mu = mu;
    CoupledSymElem Q = coupled_Q(lambda, mu);
    rep.leading_is_one = Q.coeff(lambda, mu).is_one();
    if (!rep.leading_is_one)
        rep.violations.push_back("leading coefficient at " +
                                 pair_str(lambda, mu) + " is " +
                                 Q.coeff(lambda, mu).str());
    rep.support_ok = true;
    rep.coeffs_integral = true;
    for (const auto& [k, c] : Q.terms()) {
        const Partition& nu = k.first;
        const Partition& eta = k.second;
        if (!(nu == lambda && eta == mu)) {
            bool same_grade = nu.size() == lambda.size() &&
                              eta.size() == mu.size() &&
                              dominates(nu, lambda) && dominates(eta, mu);
            bool lower = nu.size() < lambda.size() && eta.size() < mu.size();
            if (!(same_grade || lower)) {
                rep.support_ok = false;
                rep.violations.push_back("term q" + pair_str(nu, eta) +
                                         " violates the support condition");
            }
        }
        bool integral = c.is_polynomial();
        if (integral)
            for (int d = 1; d <= c.num().degree(); d += 2)
                if (c.num().coeff(d) != 0) integral = false;
        if (!integral) {
            rep.coeffs_integral = false;
            rep.violations.push_back("coefficient at q" + pair_str(nu, eta) +
                                     " = " + c.str() +
                                     " is not an integer polynomial in t");
        }
    }
    return rep;
}

PairMap structure_constants(const Partition& kappa, const Partition& theta,
                            const Partition& nu, const Partition& eta,
                            int cap_x, int cap_y) {
    if (kappa.size() + nu.size() > cap_x || theta.size() + eta.size() > cap_y)
        throw CapExceeded("structure_constants: product " +
                          pair_str(kappa, theta) + " * " + pair_str(nu, eta) +
                          " exceeds caps (" + std::to_string(cap_x) + ", " +
                          std::to_string(cap_y) + ")");
    return coupled_decompose(coupled_Q(kappa, theta) * coupled_Q(nu, eta));
}

namespace {

void check_caps(const CoupledSymElem& fp, int cap_x, int cap_y,
                const char* who) {
    for (const auto& [k, c] : fp.terms())
        if (k.first.size() > cap_x || k.second.size() > cap_y)
            throw CapExceeded(std::string(who) + ": input term " +
                              pair_str(k.first, k.second) + " beyond cap (" +
                              std::to_string(cap_x) + ", " +
                              std::to_string(cap_y) + ")");
}

}  // namespace

SpectralPoly<CoupledSymElem> gamma_minus_action(int which,
                                                const std::string& zvar,
                                                const CoupledSymElem& f,
                                                int cap, int cap_x,
                                                int cap_y) {
    if (which != 1 && which != 2)
        throw std::domain_error("gamma_minus_action: which must be 1 or 2");
    CoupledSymElem fp = f.to_p();
    check_caps(fp, cap_x, cap_y, "gamma_minus_action");
    SpectralPoly<CoupledSymElem> out({zvar});
    for (int k = 0; k <= cap; ++k) {
        CoupledSymElem slot = apply_substituted(expand_qn(k), which == 1, fp);
        if (!slot.is_zero()) out.add_term({k}, slot);
    }
    return out;
}

SpectralPoly<CoupledSymElem> gamma_plus_action(int which,
                                               const std::string& zvar,
                                               const CoupledSymElem& f,
                                               int cap, int cap_x,
                                               int cap_y) {
    if (which != 1 && which != 2)
        throw std::domain_error("gamma_plus_action: which must be 1 or 2");
    CoupledSymElem fp = f.to_p();
    check_caps(fp, cap_x, cap_y, "gamma_plus_action");
    bool on_x = which == 1;
    int degmax = on_x ? fp.max_x_weight() : fp.max_y_weight();
    SpectralPoly<CoupledSymElem> out({zvar});
    for (int k = 0; k <= std::min(cap, degmax); ++k) {
        CoupledSymElem slot = derivative_slot(on_x, k, fp, false);
        if (!slot.is_zero()) out.add_term({-k}, slot);
    }
    return out;
}

namespace {

using ModeMemo =
    std::map<std::tuple<int, int, Partition, Partition>, CoupledSymElem>;

CoupledSymElem fermion_mode_monomial(FermionKind kind, int n,
                                     const PartitionPair& pk,
                                     ModeMemo* memo) {
    std::tuple<int, int, Partition, Partition> key{static_cast<int>(kind), n,
                                                   pk.first, pk.second};
    if (memo) {
        auto it = memo->find(key);
        if (it != memo->end()) return it->second;
    }
    bool xfield = kind == FermionKind::Xplus || kind == FermionKind::Xminus;
    bool plus = kind == FermionKind::Xplus || kind == FermionKind::Yplus;
    CoupledSymElem f = CoupledSymElem::p_monomial(pk.first, pk.second);
    int degmax = xfield ? pk.first.size() : pk.second.size();
    CoupledSymElem out(CoupledSymElem::Basis::p);
    for (int k = std::max(0, -n); k <= degmax; ++k) {
        SymElem series = plus ? expand_qn(n + k) : expand_qn_reciprocal(n + k);
        if (series.is_zero()) continue;
        CoupledSymElem g = derivative_slot(xfield, k, f, plus);
        if (g.is_zero()) continue;
        out += apply_substituted(series, xfield, g);
    }
    if (memo) memo->emplace(std::move(key), out);
    return out;
}

CoupledSymElem fermion_mode_elem(FermionKind kind, int n,
                                 const CoupledSymElem& fp, ModeMemo* memo) {
    CoupledSymElem out(CoupledSymElem::Basis::p);
    for (const auto& [k, c] : fp.terms())
        out += fermion_mode_monomial(kind, n, k, memo).scaled(c);
    return out;
}

}  // namespace

CoupledSymElem fermion_mode(FermionKind kind, int n, const CoupledSymElem& f,
                            int cap_x, int cap_y) {
    CoupledSymElem fp = f.to_p();
    check_caps(fp, cap_x, cap_y, "fermion_mode");
    return fermion_mode_elem(kind, n, fp, nullptr);
}

RelationReport fermion_relations_check(int index_range, int degree_cap) {
    RelationReport rep;
    ModeMemo memo;
    auto M = [&memo](FermionKind kind, int n, const CoupledSymElem& e) {
        return fermion_mode_elem(kind, n, e, &memo);
    };
    RatCoeff t = RatCoeff::t();
    RatCoeff om = RatCoeff::one_minus_t_pow(1);
    RatCoeff om2 = om * om;

    std::vector<PartitionPair> basis;
    for (int wx = 0; wx <= degree_cap; ++wx)
        for (int wy = 0; wx + wy <= degree_cap; ++wy)
            for (const Partition& ax : partitions_of(wx))
                for (const Partition& ay : partitions_of(wy))
                    basis.push_back({ax, ay});

    const FermionKind kinds[4] = {FermionKind::Xplus, FermionKind::Xminus,
                                  FermionKind::Yplus, FermionKind::Yminus};
    const char* kind_names[4] = {"X+", "X-", "Y+", "Y-"};

    for (const PartitionPair& pk : basis) {
        CoupledSymElem f =
            CoupledSymElem::q_monomial(pk.first, pk.second).to_p();
        std::string fdesc = "q" + pair_str(pk.first, pk.second);
        for (int n = -index_range; n <= index_range; ++n) {
            for (int m = -index_range; m <= index_range; ++m) {
                // Same-sign exchange relation, all four mode families.
                for (int fam = 0; fam < 4; ++fam) {
                    FermionKind K = kinds[fam];
                    CoupledSymElem lhs =
                        M(K, n - 1, M(K, m, f)) -
                        M(K, n, M(K, m - 1, f)).scaled(t) +
                        M(K, m - 1, M(K, n, f)) -
                        M(K, m, M(K, n - 1, f)).scaled(t);
                    ++rep.checked;
                    if (!lhs.is_zero())
                        rep.failures.push_back(
                            std::string("same-sign relation ") +
                            kind_names[fam] + " n=" + std::to_string(n) +
                            " m=" + std::to_string(m) + " f=" + fdesc);
                }
                // Mixed-sign relation with the (1-t)^2 delta term.
                for (int field = 0; field < 2; ++field) {
                    FermionKind P = field == 0 ? FermionKind::Xplus
                                               : FermionKind::Yplus;
                    FermionKind Q = field == 0 ? FermionKind::Xminus
                                               : FermionKind::Yminus;
                    CoupledSymElem lhs =
                        M(P, n, M(Q, m - 1, f)) -
                        M(P, n - 1, M(Q, m, f)).scaled(t) +
                        M(P, m, M(Q, n - 1, f)) -
                        M(P, m - 1, M(Q, n, f)).scaled(t);
                    CoupledSymElem rhs =
                        m + n == 1
                            ? f.scaled(om2)
                            : CoupledSymElem::zero(CoupledSymElem::Basis::p);
                    ++rep.checked;
                    if (lhs != rhs)
                        rep.failures.push_back(
                            std::string("mixed-sign relation ") +
                            (field == 0 ? "X" : "Y") +
                            " n=" + std::to_string(n) +
                            " m=" + std::to_string(m) + " f=" + fdesc);
                }
                // X and Y modes commute, all sign pairs.
                for (int a = 0; a < 2; ++a) {
                    for (int b = 2; b < 4; ++b) {
                        CoupledSymElem lhs =
                            M(kinds[a], n, M(kinds[b], m, f));
                        CoupledSymElem rhs =
                            M(kinds[b], m, M(kinds[a], n, f));
                        ++rep.checked;
                        if (lhs != rhs)
                            rep.failures.push_back(
                                std::string("commutator ") + kind_names[a] +
                                "/" + kind_names[b] +
                                " n=" + std::to_string(n) +
                                " m=" + std::to_string(m) + " f=" + fdesc);
                    }
                }
            }
        }
    }
    return rep;
}

RelationReport cross_commutation_check(int k_max,
                                       const std::vector<Partition>& lambda_set,
                                       int degree_cap) {
    RelationReport rep;
    std::vector<PartitionPair> basis;
    for (int wx = 0; wx <= degree_cap; ++wx)
        for (int wy = 0; wx + wy <= degree_cap; ++wy)
            for (const Partition& ax : partitions_of(wx))
                for (const Partition& ay : partitions_of(wy))
                    basis.push_back({ax, ay});

    for (const Partition& lambda : lambda_set) {
        SymElem Q = hl_Q(lambda);
        for (int k = 0; k <= k_max; ++k) {
            SymElem qk = expand_qn(k);
            for (const PartitionPair& pk : basis) {
                CoupledSymElem f =
                    CoupledSymElem::q_monomial(pk.first, pk.second).to_p();
                CoupledSymElem a =
                    apply_substituted(qk, false, apply_substituted(Q, true, f));
                CoupledSymElem b =
                    apply_substituted(Q, true, apply_substituted(qk, false, f));
                ++rep.checked;
                if (a != b)
                    rep.failures.push_back(
                        "k=" + std::to_string(k) + " lambda=" +
                        parts_str(lambda) + " f=q" +
                        pair_str(pk.first, pk.second));
            }
        }
    }
    return rep;
}

}  // namespace chl
