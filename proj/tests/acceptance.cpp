// Acceptance gate: every release-blocking check in one binary, one line of
// PASS/FAIL per criterion, nonzero exit if anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "fqexcess/bruteforce.hpp"
#include "fqexcess/densities.hpp"
#include "fqexcess/integers.hpp"
#include "fqexcess/series.hpp"

using namespace fqexcess;
using clk = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const char* what, bool ok, double secs) {
    std::printf("%s  criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", id,
                what, secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

struct Timer {
    clk::time_point t0 = clk::now();
    double secs() const {
        return std::chrono::duration<double>(clk::now() - t0).count();
    }
};

// 1. squarefree counts: series, sieve, and closed form agree exactly,
//    q in {2,3,4,5}, 2 <= n <= 12, under a minute
void criterion1() {
    Timer t;
    bool ok = true;
    for (std::uint64_t q : {2, 3, 4, 5}) {
        FieldSpec f = field_from_order(q);
        IrreducibleStore irr = IrreducibleStore::sieve(f, 6);
        Series2 e = count_gf(q, 12, 0);
        mpz_class qn = q;
        for (unsigned n = 2; n <= 12; ++n) {
            qn *= (unsigned long)q;
            mpz_class closed = qn - qn / (unsigned long)q;
            mpz_class sieved((unsigned long)count_squarefree(f, n, irr));
            if (e.at(n, 0) != closed || sieved != closed) ok = false;
        }
    }
    ok = ok && t.secs() < 60;
    report(1, "squarefree counts: series = sieve = q^n - q^(n-1)", ok,
           t.secs());
}

// 2. d_0 enclosure of width <= 1e-12 contains 1 - 1/q
void criterion2() {
    Timer t;
    bool ok = true;
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        DensityReport rep = density_enclosures(q, 0, 1e-12);
        if (!rep.d[0].contains(1 - mpq_class(1, (long)q))) ok = false;
        if (rep.d[0].width() > 1e-12) ok = false;
    }
    report(2, "squarefree density enclosures contain 1 - 1/q", ok, t.secs());
}

// 3. prod (1 - t^i)^{nu_i} = 1 - q t exactly through t^30
void criterion3() {
    Timer t;
    bool ok = true;
    for (std::uint64_t q : {2, 3, 4, 5}) {
        Series1 s = one_minus_qt_product(q, 30);
        if (s[0] != 1 || s[1] != -(long)q) ok = false;
        for (unsigned n = 2; n <= 30; ++n)
            if (s[n] != 0) ok = false;
    }
    report(3, "formal identity: irreducible product collapses to 1 - q t", ok,
           t.secs());
}

// 4. exhaustive enumeration matches the generating function
void criterion4() {
    Timer t;
    bool ok = true;
    for (auto [q, n] : {std::pair<unsigned, unsigned>{2, 20},
                        {3, 13},
                        {4, 10},
                        {5, 9}}) {
        VerifyReport rep = verify_counts(q, n, n);
        if (!rep.ok()) ok = false;
    }
    ok = ok && t.secs() < 300;
    report(4, "oracle equivalence: exhaustive counts = series counts", ok,
           t.secs());
}

// 5. |d_{n,k} - mid(d_k)| decreases (up to width) over n = 20..60, final
//    gap below 1e-4, q=2, k <= 6
void criterion5() {
    Timer t;
    bool ok = true;
    DensityReport rep = density_enclosures(2, 6, 1e-12);
    auto d = dnk_table(2, 60, 6);
    for (unsigned k = 0; k <= 6; ++k) {
        mpq_class mid = rep.d[k].mid_rational();
        mpq_class width(rep.d[k].hi_rational() - rep.d[k].lo_rational());
        mpq_class prev = -1;
        for (unsigned n : {20u, 30u, 40u, 50u, 60u}) {
            mpq_class gap = abs(d[n][k] - mid);
            if (prev >= 0 && gap > prev + width) ok = false;
            prev = gap;
        }
        if (prev > mpq_class(1, 10000)) ok = false;
    }
    report(5, "telescoping: d_{n,k} converges monotonically to d_k", ok,
           t.secs());
}

// 6. sum of the first 31 density enclosures brackets a value within 1e-6 of 1
void criterion6() {
    Timer t;
    DensityReport rep = density_enclosures(2, 30, 1e-10);
    mpq_class lo = 0, hi = 0;
    for (auto& e : rep.d) {
        lo += e.lo_rational();
        hi += e.hi_rational();
    }
    bool ok = hi <= 1 + mpq_class(1, 1000000) &&
              lo >= 1 - mpq_class(1, 1000000);
    report(6, "mass: sum of d_k enclosures brackets 1 within 1e-6", ok,
           t.secs());
}

// 7. exponent adjudication: beta interval of width <= 0.1 containing exactly
//    one of {q-2, q-1}, amplitude intersecting the matching constant
void criterion7() {
    Timer t;
    bool ok = true;
    for (std::uint64_t q : {2, 3}) {
        DensityOptions o;
        o.eps = std::pow((double)q, -40.0) * 1e-8;
        DensityReport rep = density_enclosures(q, 40, o);
        PowerLawFit fit = exponent_fit(rep);
        if (fit.indeterminate || fit.beta.width() > 0.1) {
            ok = false;
            continue;
        }
        bool low = fit.beta.contains(mpq_class((long)q - 2));
        bool high = fit.beta.contains(mpq_class((long)q - 1));
        if (low == high) {
            ok = false;
            continue;
        }
        Enclosure target = high ? pole_order_asymptotic_A(q, 1e-12)
                                : low_exponent_asymptotic_A(q, 1e-12);
        if (!fit.amplitude.intersects(target)) ok = false;
        std::printf("      q=%llu: beta in [%.4f, %.4f] -> k^(q-%d) branch\n",
                    (unsigned long long)q, fit.beta.lo_double(),
                    fit.beta.hi_double(), high ? 1 : 2);
    }
    ok = ok && t.secs() < 120;
    report(7, "asymptotic exponent adjudication (q=2, q=3)", ok, t.secs());
}

// 8. integer side: empirical squarefree fraction near 6/pi^2, analytic
//    enclosures match frequencies, u_k = d_k 2^k stabilizes at delta
void criterion8() {
    Timer t;
    bool ok = true;
    IntExcessCounts c = int_excess_counts(10000000, 30);
    double sqfrac = (double)c.counts[0] / 1e7;
    if (std::fabs(sqfrac - 6.0 / (M_PI * M_PI)) > 1e-3) ok = false;

    auto d = renyi_density(30, 1000000, 1e-4);
    for (unsigned k = 0; k <= 4; ++k) {
        double emp = (double)c.counts[k] / 1e7;
        if (emp < d[k].lo_double() - 5e-4 || emp > d[k].hi_double() + 5e-4)
            ok = false;
    }

    std::vector<std::pair<unsigned, Enclosure>> u;
    Enclosure pw = Enclosure::from_long(1, 160);
    Enclosure two = Enclosure::from_long(2, 160);
    for (unsigned k = 0; k <= 30; ++k) {
        u.emplace_back(k, d[k] * pw);
        pw *= two;
    }
    PowerLawFit fit = fit_power_law(u);
    Enclosure delta = delta_constant(1000000, 1e-5);
    if (fit.indeterminate || !fit.beta.contains(mpq_class(0)) ||
        !fit.amplitude.intersects(delta))
        ok = false;
    ok = ok && t.secs() < 120;
    report(8, "classical side: 6/pi^2, Euler product, delta stabilization",
           ok, t.secs());
}

// 9. doubling truncation degree and precision strictly nests the enclosures
void criterion9() {
    Timer t;
    DensityOptions o1;
    o1.eps = 1e-8;
    DensityReport a = density_enclosures(2, 10, o1);
    DensityOptions o2;
    o2.eps = 1e-8;
    o2.truncation_degree = a.truncation_degree * 2;
    o2.precision = a.precision * 2;
    DensityReport b = density_enclosures(2, 10, o2);
    bool ok = true;
    for (unsigned k = 0; k <= 10; ++k)
        if (!a.d[k].strictly_contains(b.d[k])) ok = false;
    report(9, "refinement strictly nests all enclosures", ok, t.secs());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
