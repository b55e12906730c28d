#include <doctest.h>

#include <set>

#include "chl/partition.hpp"

using namespace chl;

TEST_SUITE("partition") {

TEST_CASE("construction and canonical form") {
    CHECK(Partition({2, 1, 0, 0}) == Partition({2, 1}));
    CHECK(Partition().empty());
    CHECK(Partition({3, 3, 1}).size() == 7);
    CHECK(Partition({3, 3, 1}).length() == 3);
    CHECK(Partition({3, 3, 1}).mult(3) == 2);
    CHECK(Partition({3, 3, 1}).part(4) == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::domain_error);
    CHECK_THROWS_AS(Partition({-1}), std::domain_error);
    CHECK(Partition::from_multiset({1, 3, 2}) == Partition({3, 2, 1}));
    CHECK(Partition({2, 1}).str() == "[2,1]");
    CHECK(Partition().str() == "[]");
}

TEST_CASE("conjugate") {
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
    CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));
    for (const Partition& p : partitions_up_to(10))
        CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("canonical order") {
    auto w3 = partitions_of(3);
    REQUIRE(w3.size() == 3);
    CHECK(w3[0] == Partition({3}));
    CHECK(w3[1] == Partition({2, 1}));
    CHECK(w3[2] == Partition({1, 1, 1}));
    CHECK(Partition({1}) < Partition({2}));  // weight graded first
}

TEST_CASE("dominance") {
    CHECK(dominates(Partition({2}), Partition({1, 1})));
    CHECK(!dominates(Partition({1, 1}), Partition({2})));
    CHECK(dominates(Partition({2, 1}), Partition({2, 1})));
    CHECK(!dominates(Partition({2}), Partition({1})));  // weights differ
    CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
    CHECK(!dominates(Partition({2, 2}), Partition({3, 1})));
}

TEST_CASE("horizontal strips") {
    CHECK(is_horizontal_strip(Partition({2, 1}), Partition({1}), 2));
    CHECK(!is_horizontal_strip(Partition({2, 2}), Partition({1}), 3));
    CHECK(is_horizontal_strip(Partition({2, 1}), Partition({2, 1}), 0));
    CHECK(!is_horizontal_strip(Partition({2, 1}), Partition({1}), 1));

    // strip <=> interlacing with matching weight difference, exhaustively
    for (const Partition& la : partitions_up_to(8)) {
        for (const Partition& mu : partitions_up_to(la.size())) {
            bool strip =
                is_horizontal_strip(la, mu, la.size() - mu.size());
            bool interlace = true;
            int rows = la.length() + 1;
            for (int i = 1; i <= rows && interlace; ++i)
                if (!(la.part(i) >= mu.part(i) && mu.part(i) >= la.part(i + 1)))
                    interlace = false;
            CHECK(strip == interlace);
        }
    }
}

TEST_CASE("psi coefficients") {
    RatCoeff omt = RatCoeff::one_minus_t_pow(1);
    CHECK(psi_coefficient(Partition({2}), Partition({1})) == omt);
    CHECK(psi_coefficient(Partition({1, 1}), Partition({1})) == RatCoeff(1));
    CHECK(psi_coefficient(Partition({2, 1}), Partition({2, 1})) == RatCoeff(1));
    CHECK_THROWS_AS(psi_coefficient(Partition({2, 2}), Partition({1})),
                    std::domain_error);
    CHECK_THROWS_AS(psi_coefficient(Partition({1}), Partition({2})),
                    std::domain_error);
    // (2,2)/(2,1): strip in column 2, mu has one part equal 2 and one 1;
    // step-up at column 2 gives 1 - t^{m_2} = 1 - t
    CHECK(psi_coefficient(Partition({2, 2}), Partition({2, 1})) == omt);
    // (3,1)/(2,1): theta' = (0,0,1) steps up at j=2, m_2((2,1)) = 1
    CHECK(psi_coefficient(Partition({3, 1}), Partition({2, 1})) == omt);
}

TEST_CASE("z_lambda") {
    CHECK(z_lambda(Partition()) == 1);
    CHECK(z_lambda(Partition({1})) == 1);
    CHECK(z_lambda(Partition({1, 1})) == 2);
    CHECK(z_lambda(Partition({2})) == 2);
    CHECK(z_lambda(Partition({2, 1})) == 2);
    CHECK(z_lambda(Partition({3, 2, 2, 1, 1, 1})) == 3 * (2 * 2 * 2) * 6);
}

TEST_CASE("box enumeration") {
    auto b11 = enumerate_in_box(1, 1);
    CHECK(b11 == std::vector<Partition>{Partition(), Partition({1})});
    auto b22 = enumerate_in_box(2, 2);
    CHECK(b22 == std::vector<Partition>{Partition(), Partition({1}),
                                        Partition({2}), Partition({1, 1}),
                                        Partition({2, 1}), Partition({2, 2})});
    CHECK(enumerate_in_box(0, 5) == std::vector<Partition>{Partition()});
    // count = C(N+M, N)
    CHECK(enumerate_in_box(3, 4).size() == 35);
    CHECK(enumerate_in_box(2, 5).size() == 21);
}

TEST_CASE("occupancy maps") {
    CHECK(occupancy_to_partition({1, 1}) == Partition({2, 1}));
    CHECK(occupancy_to_partition({0, 0, 0}) == Partition());
    CHECK(occupancy_to_partition({0, 0, 2}) == Partition({3, 3}));
    CHECK(partition_to_occupancy(Partition({2, 1}), 2) ==
          std::vector<int>{1, 1});
    CHECK_THROWS_AS(partition_to_occupancy(Partition({3}), 2),
                    std::domain_error);
    // round trip over all occupancy vectors with sum i*n_i <= 8
    for (int m = 1; m <= 4; ++m) {
        std::vector<int> n(m, 0);
        // odometer over bounded occupancies
        for (;;) {
            int wt = 0;
            for (int i = 0; i < m; ++i) wt += (i + 1) * n[i];
            if (wt <= 8)
                CHECK(partition_to_occupancy(occupancy_to_partition(n), m) ==
                      n);
            int i = 0;
            while (i < m) {
                if (++n[i] <= 8) break;
                n[i] = 0;
                ++i;
            }
            if (i == m) break;
        }
    }
}

}
