#include <doctest.h>

#include "fqexcess/densities.hpp"
#include "fqexcess/integers.hpp"

using namespace fqexcess;

TEST_CASE("prime generation") {
    CHECK(primes_up_to(30) ==
          std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(2) == std::vector<std::uint32_t>{2});
}

TEST_CASE("excess of an integer") {
    CHECK(integer_excess(1) == 0);
    CHECK(integer_excess(12) == 1);    // 2^2 * 3
    CHECK(integer_excess(360) == 3);   // 2^3 * 3^2 * 5
    CHECK(integer_excess(30) == 0);
    CHECK(integer_excess(1024) == 9);
    CHECK_THROWS_AS(integer_excess(0), std::invalid_argument);
}

TEST_CASE("sieved excess counts") {
    IntExcessCounts c = int_excess_counts(100, 5);
    CHECK(c.counts[0] == 61);
    std::uint64_t total = c.overflow;
    for (auto v : c.counts) total += v;
    CHECK(total == 100);

    IntExcessCounts ten = int_excess_counts(10, 3);
    CHECK(ten.counts[0] == 7);
    CHECK(ten.counts[1] == 2);  // 4, 9
    CHECK(ten.counts[2] == 1);  // 8
    CHECK(ten.counts[3] == 0);

    // against direct factorization
    IntExcessCounts big = int_excess_counts(5000, 8);
    std::vector<std::uint64_t> direct(16, 0);  // excess of 4096 is already 11
    for (std::uint64_t n = 1; n <= 5000; ++n) ++direct[integer_excess(n)];
    for (unsigned k = 0; k <= 8; ++k) CHECK(big.counts[k] == direct[k]);
    std::uint64_t over = 0;
    for (unsigned k = 9; k < 16; ++k) over += direct[k];
    CHECK(big.overflow == over);
}

TEST_CASE("counting pass is partition-invariant") {
    auto serial = int_excess_counts(20000, 6, 1);
    for (unsigned t : {2, 3, 7}) {
        auto par = int_excess_counts(20000, 6, t);
        CHECK(par.counts == serial.counts);
        CHECK(par.overflow == serial.overflow);
    }
}

TEST_CASE("sieve budget") {
    CHECK_THROWS_AS(int_excess_counts(200000000ull, 3), BudgetError);
    CHECK_THROWS_AS(int_excess_counts(0, 3), std::invalid_argument);
}

TEST_CASE("euler product densities") {
    auto d = renyi_density(6, 200000, 1e-4);
    // d_0 = 6/pi^2 = 0.6079271018540266...
    mpq_class six_pi2("607927101854026628663277577/1000000000000000000000000000");
    CHECK(d[0].widen(Enclosure::from_double(1e-5, 64)).contains(six_pi2));
    // sum tends to 1 from below
    mpq_class hi_sum = 0, lo_sum6 = 0;
    for (auto& e : d) {
        hi_sum += e.hi_rational();
        lo_sum6 += e.lo_rational();
    }
    CHECK(hi_sum < 1);
    auto d12 = renyi_density(12, 200000, 1e-4);
    mpq_class lo_sum12 = 0;
    for (auto& e : d12) lo_sum12 += e.lo_rational();
    CHECK(lo_sum12 > lo_sum6);
    CHECK(lo_sum12 > mpq_class(999, 1000));

    // empirical frequencies sit inside the enclosures plus sieve noise
    IntExcessCounts c = int_excess_counts(1000000, 4);
    for (unsigned k = 0; k <= 4; ++k) {
        double emp = (double)c.counts[k] / 1e6;
        CHECK(emp > d[k].lo_double() - 2e-3);
        CHECK(emp < d[k].hi_double() + 2e-3);
    }

    // refinement in P nests up to the stated widths
    auto coarse = renyi_density(4, 50000, 1e-3);
    auto fine = renyi_density(4, 400000, 1e-4);
    for (unsigned k = 0; k <= 4; ++k) {
        CHECK(coarse[k].intersects(fine[k]));
        CHECK(fine[k].width() < coarse[k].width());
    }

    CHECK_THROWS_AS(renyi_density(2, 100, 1e-9), AccuracyError);
    CHECK_THROWS_AS(renyi_density(2, 1, 1e-3), std::invalid_argument);
}

TEST_CASE("delta constant") {
    // pinned factors: p=3 gives 4/3, p=5 gives 16/15, prefactor 1/4
    CHECK(mpq_class(2 * 2, 3 * 1) == mpq_class(4, 3));
    CHECK(mpq_class(4 * 4, 5 * 3) == mpq_class(16, 15));
    Enclosure tiny = delta_constant(5, 1.0);  // p <= 5 head: 1/4 * 4/3 * 16/15
    CHECK(tiny.lo_rational() >= mpq_class(1, 4) * mpq_class(4, 3) *
                                    mpq_class(16, 15) * mpq_class(99, 100));

    Enclosure coarse = delta_constant(10000, 1e-3);
    Enclosure fine = delta_constant(1000000, 1e-5);
    CHECK(fine.width() <= 1e-5);
    CHECK(coarse.intersects(fine));
    CHECK(fine.lo_double() > 0.37);
    CHECK(fine.hi_double() < 0.39);
    try {
        delta_constant(1000, 1e-12);
        CHECK(false);
    } catch (const AccuracyError& e) {
        CHECK(e.achieved_width > 1e-12);
    }
}
