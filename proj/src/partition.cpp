#include "chl/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::domain_error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("Partition: parts must weakly decrease");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiset(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

int Partition::mult(int i) const {
    int c = 0;
    for (int p : parts_) c += (p == i);
    return c;
}

Partition Partition::conjugate() const {
    std::vector<int> cols;
    if (!parts_.empty()) {
        cols.resize(parts_[0]);
        for (int j = 1; j <= parts_[0]; ++j)
            for (int p : parts_) cols[j - 1] += (p >= j);
    }
    return Partition(std::move(cols));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

Partition Partition::minus_part(int p) const {
    std::vector<int> v(parts_);
    auto it = std::find(v.begin(), v.end(), p);
    if (it == v.end())
        throw std::domain_error("Partition: part not present");
    v.erase(it);
    return Partition(std::move(v));
}

Partition Partition::plus_part(int p) const {
    std::vector<int> v(parts_);
    v.push_back(p);
    return from_multiset(std::move(v));
}

std::string Partition::str() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

bool dominates(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return false;
    long sa = 0, sb = 0;
    int rows = std::max(a.length(), b.length());
    for (int i = 1; i <= rows; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa < sb) return false;
    }
    return true;
}

bool is_horizontal_strip(const Partition& lambda, const Partition& mu,
                         int n) {
    if (lambda.size() - mu.size() != n) return false;
    if (!lambda.contains(mu)) return false;
    // interlacing: lambda_i >= mu_i >= lambda_{i+1}
    for (int i = 1; i <= lambda.length(); ++i)
        if (mu.part(i) < lambda.part(i + 1)) return false;
    return true;
}

RatCoeff psi_coefficient(const Partition& lambda, const Partition& mu) {
    if (!is_horizontal_strip(lambda, mu, lambda.size() - mu.size()) ||
        lambda.size() < mu.size())
        throw std::domain_error("psi_coefficient: not a horizontal strip");
    Partition lc = lambda.conjugate();
    Partition mc = mu.conjugate();
    RatCoeff psi(1);
    // theta'_j = lc_j - mc_j is 0 or 1; collect columns where it steps up
    for (int j = 1; j <= lambda.part(1); ++j) {
        int here = lc.part(j) - mc.part(j);
        int next = lc.part(j + 1) - mc.part(j + 1);
        if (here < next) psi *= RatCoeff::one_minus_t_pow(mu.mult(j));
    }
    return psi;
}

mpz_class z_lambda(const Partition& lambda) {
    mpz_class z = 1;
    int i = 0;
    while (i < lambda.length()) {
        int p = lambda.parts()[i];
        int m = lambda.mult(p);
        for (int k = 1; k <= m; ++k) {
            z *= p;
            z *= k;
        }
        i += m;
    }
    return z;
}

namespace {

void gen_partitions(int remaining, int max_part,
                    std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_up_to(int w) {
    std::vector<Partition> out;
    for (int n = 0; n <= w; ++n) {
        auto pn = partitions_of(n);
        out.insert(out.end(), pn.begin(), pn.end());
    }
    return out;
}

std::vector<Partition> enumerate_in_box(int rows, int cols) {
    std::vector<Partition> out;
    for (int n = 0; n <= rows * cols; ++n)
        for (const Partition& p : partitions_of(n))
            if (p.length() <= rows && p.part(1) <= cols) out.push_back(p);
    return out;
}

Partition occupancy_to_partition(const std::vector<int>& n) {
    std::vector<int> parts;
    for (size_t i = 0; i < n.size(); ++i) {
        if (n[i] < 0)
            throw std::domain_error("occupancy_to_partition: negative count");
        for (int k = 0; k < n[i]; ++k) parts.push_back(static_cast<int>(i + 1));
    }
    return Partition::from_multiset(std::move(parts));
}

std::vector<int> partition_to_occupancy(const Partition& lambda, int M) {
    if (lambda.part(1) > M)
        throw std::domain_error("partition_to_occupancy: part exceeds M");
    std::vector<int> n(M, 0);
    for (int p : lambda.parts()) n[p - 1] += 1;
    return n;
}

std::string parts_str(const Partition& lambda) {
    if (lambda.empty()) return "-";
    std::string out;
    for (int p : lambda.parts()) {
        if (!out.empty()) out += ",";
        out += std::to_string(p);
    }
    return out;
}

Partition parse_parts(const std::string& text) {
    if (text == "-" || text.empty()) return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::domain_error("parse_parts: bad token '" + tok + "' in '" +
                                    text + "'");
        long v = std::stol(tok);
        if (v <= 0 || v > 1000000)
            throw std::domain_error("parse_parts: part out of range in '" +
                                    text + "'");
        parts.push_back(static_cast<int>(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

}  // namespace chl
