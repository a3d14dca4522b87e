#include <doctest.h>

#include "fqexcess/bruteforce.hpp"
#include "fqexcess/irreducibles.hpp"

using namespace fqexcess;

TEST_CASE("nu_formula pinned values") {
    CHECK(nu_formula(2, 1) == 2);
    CHECK(nu_formula(2, 2) == 1);
    CHECK(nu_formula(2, 3) == 2);
    CHECK(nu_formula(2, 4) == 3);
    CHECK(nu_formula(3, 2) == 3);
    CHECK(nu_formula(4, 1) == 4);  // nu_1 = q always
}

TEST_CASE("NuTable invariants") {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        NuTable t = NuTable::build(q, 12);
        CHECK(t.at(1) == q);
        for (unsigned i = 1; i <= 12; ++i) CHECK(t.at(i) >= 1);
        // degree-sum identity: sum_{d|n} d * nu_d = q^n
        mpz_class qn = 1;
        for (unsigned n = 1; n <= 12; ++n) {
            qn *= (unsigned long)q;
            mpz_class sum = 0;
            for (unsigned d = 1; d <= n; ++d)
                if (n % d == 0) sum += d * t.at(d);
            CHECK(sum == qn);
        }
    }
}

TEST_CASE("sieve pinned lists") {
    FieldSpec f = make_field(2, 1);
    IrreducibleStore irr = IrreducibleStore::sieve(f, 4);
    // the two cubics without roots: x^3+x+1 (1011) and x^3+x^2+1 (1101)
    CHECK(irr.irreducibles(3) == std::vector<std::uint32_t>{11, 13});
    CHECK(irr.irreducibles(4).size() == 3);
    // SPF of x^3+x (code 10) is x (code 2)
    CHECK(irr.spf(10) == 2);
    // SPF of an irreducible is itself
    CHECK(irr.spf(11) == 11);
}

TEST_CASE("formula matches sieve counts") {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        FieldSpec f = field_from_order(q);
        unsigned D = q == 2 ? 20 : (q == 3 ? 12 : 10);
        IrreducibleStore irr = IrreducibleStore::sieve(f, D);
        for (unsigned i = 1; i <= D; ++i)
            CHECK(mpz_class(irr.irreducibles(i).size()) == nu_formula(q, i));
    }
}

TEST_CASE("SPF entries are minimal divisors (spot check)") {
    FieldSpec f = make_field(3, 1);
    IrreducibleStore irr = IrreducibleStore::sieve(f, 6);
    for (std::uint64_t code = 729; code < 2 * 729; code += 53) {
        Poly p = Poly::decode(f, code);
        Poly s = Poly::decode(f, irr.spf(code));
        CHECK(p.divisible_by(s));
        // nothing strictly smaller in (degree, code) order divides p
        bool minimal = true;
        for (unsigned d = 1; d <= (unsigned)*s.degree(); ++d)
            for (std::uint32_t c : irr.irreducibles(d)) {
                if (d == (unsigned)*s.degree() && c >= s.encode()) break;
                if (p.divisible_by(Poly::decode(f, c))) minimal = false;
            }
        CHECK(minimal);
    }
}

TEST_CASE("memory budget is enforced") {
    FieldSpec f = make_field(5, 1);
    CHECK_THROWS_AS(IrreducibleStore::sieve(f, 10, 1000), std::length_error);
}
