#pragma once

#include <string>
#include <vector>

#include "chl/ratcoeff.hpp"

namespace chl {

// Integer partition: weakly decreasing positive parts, trailing zeros
// stripped on construction.  Immutable value type, usable as a map key.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    // Builds from parts in any order (sorts descending).
    static Partition from_multiset(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int size() const { return weight_; }    // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    // 1-indexed part, 0 beyond the last row.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    // Multiplicity of i as a part.
    int mult(int i) const;

    Partition conjugate() const;
    bool contains(const Partition& mu) const;

    // Removes one copy of part p (must be present).
    Partition minus_part(int p) const;
    // Adds one part p > 0.
    Partition plus_part(int p) const;

    // Canonical global order: by weight, then lexicographically with larger
    // parts first, so weight-3 partitions list as (3), (2,1), (1,1,1).
    bool operator<(const Partition& o) const {
        if (weight_ != o.weight_) return weight_ < o.weight_;
        return parts_ > o.parts_;
    }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    std::string str() const;  // "[2,1]", "[]" for the empty partition

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// True iff a dominates b: equal weights and all partial sums of a are >=
// those of b.
bool dominates(const Partition& a, const Partition& b);

// True iff lambda/mu is a horizontal strip of size n: mu inside lambda,
// |lambda| - |mu| = n, and the rows interlace.
bool is_horizontal_strip(const Partition& lambda, const Partition& mu, int n);

// psi_{lambda/mu}(t) = prod over columns j where the strip's column count
// steps up of (1 - t^{m_j(mu)}).  Requires lambda/mu to be a horizontal
// strip of some size; throws std::domain_error otherwise.
RatCoeff psi_coefficient(const Partition& lambda, const Partition& mu);

// The symmetrization constant z_lambda = prod_i i^{m_i} m_i!.
mpz_class z_lambda(const Partition& lambda);

// All partitions of weight exactly n, in canonical order.
std::vector<Partition> partitions_of(int n);

// All partitions of weight <= w, in canonical order.
std::vector<Partition> partitions_up_to(int w);

// All partitions with at most `rows` rows and `cols` columns, in canonical
// order; there are binomial(rows+cols, rows) of them.
std::vector<Partition> enumerate_in_box(int rows, int cols);

// lambda = 1^{n_1} 2^{n_2} ... M^{n_M} from site occupancies (n[0] = n_1).
Partition occupancy_to_partition(const std::vector<int>& n);

// Inverse of occupancy_to_partition for partitions with parts <= M; throws
// std::domain_error when a part exceeds M.
std::vector<int> partition_to_occupancy(const Partition& lambda, int M);

// Plain text form: comma-separated parts, "-" for the empty partition.
std::string parts_str(const Partition& lambda);
// Inverse of parts_str; throws std::domain_error on malformed input.
Partition parse_parts(const std::string& text);

}  // namespace chl
