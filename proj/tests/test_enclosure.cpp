#include <doctest.h>

#include "fqexcess/enclosure.hpp"

using namespace fqexcess;

TEST_CASE("outward rounding") {
    Enclosure third = Enclosure::from_rational(mpq_class(1, 3), 64);
    CHECK(third.contains(mpq_class(1, 3)));
    CHECK(third.lo_rational() < mpq_class(1, 3));
    CHECK(third.hi_rational() > mpq_class(1, 3));
    CHECK(third.width() > 0);
    // dyadic values are exact
    Enclosure half = Enclosure::from_rational(mpq_class(1, 2), 64);
    CHECK(half.width() == 0);
}

TEST_CASE("interval arithmetic") {
    auto e = [](long lo, long hi) {
        return Enclosure::from_endpoints(mpq_class(lo), mpq_class(hi), 64);
    };
    Enclosure s = e(1, 2) + e(-3, 5);
    CHECK(s.lo_rational() == -2);
    CHECK(s.hi_rational() == 7);

    Enclosure d = e(1, 2) - e(1, 2);
    CHECK(d.contains(mpq_class(0)));
    CHECK(d.lo_rational() == -1);

    // sign cases of multiplication
    Enclosure m = e(-2, 3) * e(-5, 4);
    CHECK(m.lo_rational() == -15);
    CHECK(m.hi_rational() == 12);

    Enclosure q = e(1, 2) / e(2, 4);
    CHECK(q.contains(mpq_class(1, 2)));
    CHECK(q.lo_rational() == mpq_class(1, 4));
    CHECK_THROWS_AS(e(1, 2) / e(-1, 1), std::domain_error);

    Enclosure n = -e(1, 2);
    CHECK(n.lo_rational() == -2);
    CHECK(n.hi_rational() == -1);
}

TEST_CASE("exp and log") {
    Enclosure one = Enclosure::from_long(1, 128);
    Enclosure ee = one.exp();
    CHECK(ee.lo_double() < 2.718281829);
    CHECK(ee.hi_double() > 2.718281828);
    CHECK(ee.log().contains(mpq_class(1)));
    CHECK_THROWS_AS(Enclosure::from_long(0, 64).log(), std::domain_error);
    CHECK_THROWS_AS((-one).log(), std::domain_error);
}

TEST_CASE("containment and hull") {
    auto e = [](long lo, long hi) {
        return Enclosure::from_endpoints(mpq_class(lo), mpq_class(hi), 64);
    };
    CHECK(e(0, 10).contains(e(1, 2)));
    CHECK(e(0, 10).strictly_contains(e(1, 2)));
    CHECK(!e(0, 10).strictly_contains(e(0, 2)));
    CHECK(e(0, 2).intersects(e(2, 3)));
    CHECK(!e(0, 1).intersects(e(2, 3)));
    Enclosure h = e(0, 1).hull(e(5, 6));
    CHECK(h.lo_rational() == 0);
    CHECK(h.hi_rational() == 6);
    Enclosure w = e(1, 2).widen(Enclosure::from_long(1, 64));
    CHECK(w.lo_rational() == 0);
    CHECK(w.hi_rational() == 3);
    CHECK(e(1, 1).is_positive());
    CHECK(!e(0, 1).is_positive());
    CHECK_THROWS_AS(Enclosure::from_endpoints(mpq_class(2), mpq_class(1), 64),
                    std::invalid_argument);
}

TEST_CASE("decimal endpoint strings round outward") {
    Enclosure third = Enclosure::from_rational(mpq_class(1, 3), 96);
    std::string lo = third.lo_string(10), hi = third.hi_string(10);
    CHECK(std::stod(lo) <= 1.0 / 3.0);
    CHECK(std::stod(hi) >= 1.0 / 3.0);
    CHECK(lo.find('e') != std::string::npos);
}
