#include "fqexcess/densities.hpp"

#include <algorithm>
#include <cmath>

#include "fqexcess/irreducibles.hpp"
#include "fqexcess/series.hpp"

namespace fqexcess {

namespace {

bool is_prime_power(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    }
    return true;  // q itself prime
}

mpz_class pow_z(std::uint64_t base, unsigned e) {
    mpz_class b(static_cast<unsigned long>(base)), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// [0, max(|lo|, |hi|)]
Enclosure abs_upper(const Enclosure& x) {
    mpq_class m = std::max(abs(x.lo_rational()), abs(x.hi_rational()));
    return Enclosure::from_endpoints(mpq_class(0), m, x.prec());
}

std::vector<Enclosure> zseries_mul(const std::vector<Enclosure>& a,
                                   const std::vector<Enclosure>& b,
                                   mpfr_prec_t prec) {
    std::vector<Enclosure> r(a.size(), Enclosure(prec));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

DensityReport density_attempt(std::uint64_t q, unsigned K, unsigned I,
                              mpfr_prec_t prec) {
    std::vector<Enclosure> head(K + 1, Enclosure(prec));
    head[0] = Enclosure::from_long(1, prec);

    for (unsigned i = 1; i <= I; ++i) {
        mpz_class qi = pow_z(q, i);
        mpq_class u(1, qi);
        mpq_class one_minus_u = 1 - u;
        mpq_class c0 = 1 - u * u;
        // W(z) = sum_{j>=1} (1-u) u^{j+1} z^j
        std::vector<Enclosure> w(K + 1, Enclosure(prec));
        mpq_class uj = u * u;  // u^{j+1} at j=1
        for (unsigned j = 1; j <= K; ++j) {
            w[j] = Enclosure::from_rational(one_minus_u * uj, prec);
            uj *= u;
        }
        mpz_class nu = nu_formula(q, i);
        Enclosure log_c0 = Enclosure::from_rational(c0, prec).log();
        std::vector<Enclosure> fac(K + 1, Enclosure(prec));
        std::vector<Enclosure> wm(K + 1, Enclosure(prec));
        wm[0] = Enclosure::from_long(1, prec);
        for (unsigned m = 0; m <= K; ++m) {
            if (m > 0) wm = zseries_mul(wm, w, prec);
            Enclosure scale =
                (Enclosure::from_integer(nu - m, prec) * log_c0).exp() *
                Enclosure::from_integer(binomial(nu, m), prec);
            for (unsigned k = m; k <= K; ++k) fac[k] += scale * wm[k];
        }
        head = zseries_mul(head, fac, prec);
    }

    // additive tail correction: the omitted factors over i > I multiply the
    // head by 1 + R(z) with coefficient mass of R at most e^S - 1,
    // S = sum_{i>I} nu_i * 2 q^{-2i} <= 2 q^{-I} / (q - 1)
    mpq_class s_bound(2, pow_z(q, I) * (q - 1));
    Enclosure rho = Enclosure::from_endpoints(mpq_class(0), s_bound, prec).exp()
                    - Enclosure::from_long(1, prec);
    Enclosure sigma(prec);
    for (unsigned k = 0; k <= K; ++k) sigma += abs_upper(head[k]);
    Enclosure radius = abs_upper(rho * sigma);

    DensityReport rep;
    rep.q = q;
    rep.K = K;
    rep.truncation_degree = I;
    rep.tail_bound = radius.hi_double();
    rep.precision = prec;
    rep.d.reserve(K + 1);
    for (unsigned k = 0; k <= K; ++k) rep.d.push_back(head[k].widen(radius));
    return rep;
}

} // namespace

DensityReport density_enclosures(std::uint64_t q, unsigned K,
                                 const DensityOptions& opts) {
    if (!is_prime_power(q))
        throw std::invalid_argument("density_enclosures: q must be a prime power");
    if (!(opts.eps > 0 && opts.eps < 1))
        throw std::invalid_argument("density_enclosures: eps must be in (0,1)");

    unsigned I = opts.truncation_degree;
    if (I == 0) {
        // smallest I with projected tail width (e^S - 1) * sigma <= eps/2,
        // using the a-priori coefficient-mass bound sigma <= 8
        double target = opts.eps / 32.0;
        I = (unsigned)std::ceil(std::log(2.0 / ((double)(q - 1) * target)) /
                                std::log((double)q)) + 1;
        I = std::max(I, 8u);
    }
    mpfr_prec_t prec = opts.precision;
    if (prec == 0)
        prec = std::max<mpfr_prec_t>(
            128, (mpfr_prec_t)std::ceil(-std::log2(opts.eps)) + 64);

    double achieved = 0;
    for (unsigned attempt = 0; attempt < std::max(1u, opts.max_attempts);
         ++attempt) {
        DensityReport rep = density_attempt(q, K, I, prec);
        rep.eps = opts.eps;
        achieved = 0;
        for (const Enclosure& e : rep.d) achieved = std::max(achieved, e.width());
        if (achieved <= opts.eps) return rep;
        if (opts.truncation_degree != 0 && opts.precision != 0) break;
        if (opts.truncation_degree == 0) I += (I + 1) / 2;
        if (opts.precision == 0) prec *= 2;
    }
    throw AccuracyError("density_enclosures: target width unachieved; best " +
                            std::to_string(achieved),
                        achieved);
}

DensityReport density_enclosures(std::uint64_t q, unsigned K, double eps) {
    DensityOptions opts;
    opts.eps = eps;
    return density_enclosures(q, K, opts);
}

std::vector<std::vector<mpq_class>> dnk_table(std::uint64_t q, unsigned N,
                                              unsigned K) {
    Series2 e = count_gf(q, N, K);
    std::vector<std::vector<mpq_class>> d(N + 1,
                                          std::vector<mpq_class>(K + 1));
    mpz_class qn = 1;
    for (unsigned n = 0; n <= N; ++n) {
        for (unsigned k = 0; k <= K; ++k) {
            d[n][k] = mpq_class(e.at(n, k), qn);
            d[n][k].canonicalize();
        }
        qn *= (unsigned long)q;
    }
    return d;
}

mpq_class zeta_affine(std::uint64_t q, unsigned s) {
    if (s < 2)
        throw std::domain_error("zeta_affine diverges for s <= 1");
    mpz_class qs1 = pow_z(q, s - 1);
    mpq_class z(qs1, qs1 - 1);
    z.canonicalize();
    return z;
}

namespace {

mpz_class factorial_z(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// sum over i = 2..I of nu_i * log((1 - q^-i)(1 +- 1/(q^i - q)))
Enclosure grouped_log_sum(std::uint64_t q, unsigned I, int sign,
                          mpfr_prec_t prec) {
    Enclosure sum(prec);
    for (unsigned i = 2; i <= I; ++i) {
        mpz_class qi = pow_z(q, i);
        mpq_class f = (1 - mpq_class(1, qi)) *
                      (1 + sign * mpq_class(1, qi - (long)q));
        sum += Enclosure::from_integer(nu_formula(q, i), prec) *
               Enclosure::from_rational(f, prec).log();
    }
    return sum;
}

} // namespace

Enclosure low_exponent_asymptotic_A(std::uint64_t q, double eps) {
    if (!is_prime_power(q) || q < 2)
        throw std::invalid_argument("q must be a prime power >= 2");
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    mpfr_prec_t prec =
        std::max<mpfr_prec_t>(128, (mpfr_prec_t)std::ceil(-std::log2(eps)) + 64);
    const unsigned I = 24;

    mpq_class pref = mpq_class(q - 1, mpz_class((long)q) * (long)q);
    mpq_class prefactor;
    mpz_pow_ui(prefactor.get_num_mpz_t(), pref.get_num_mpz_t(), q - 1);
    mpz_pow_ui(prefactor.get_den_mpz_t(), pref.get_den_mpz_t(), q - 1);
    prefactor /= factorial_z((unsigned)(q - 2));
    prefactor.canonicalize();

    Enclosure head = Enclosure::from_rational(prefactor, prec) *
                     grouped_log_sum(q, I, -1, prec).exp();
    mpq_class head_hi = head.hi_rational();

    // every omitted grouped factor f_i^{nu_i} lies in (0, 1); moreover
    // nu_i * (-log f_i) >= 1/i for i > 4, so the tail through degree M is
    // at most (I+1)/(M+1), which can be pushed below eps/head analytically
    mpq_class ratio = head_hi * (I + 1) / mpq_class(eps);
    mpz_class M = ratio.get_num() / ratio.get_den() + 2;
    mpq_class t_up(I + 1, M + 1);
    Enclosure result = head * Enclosure::from_endpoints(mpq_class(0), t_up, prec);
    return Enclosure::from_endpoints(mpq_class(0), result.hi_rational(), prec);
}

Enclosure pole_order_asymptotic_A(std::uint64_t q, double eps) {
    if (!is_prime_power(q) || q < 2)
        throw std::invalid_argument("q must be a prime power >= 2");
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    mpfr_prec_t prec =
        std::max<mpfr_prec_t>(128, (mpfr_prec_t)std::ceil(-std::log2(eps)) + 64);
    unsigned I = std::max<unsigned>(
        8, (unsigned)std::ceil(std::log(4.0 / eps) / std::log((double)q)) + 2);

    mpq_class pref = mpq_class(q - 1, mpz_class((long)q) * (long)q);
    mpq_class prefactor;
    mpz_pow_ui(prefactor.get_num_mpz_t(), pref.get_num_mpz_t(), q);
    mpz_pow_ui(prefactor.get_den_mpz_t(), pref.get_den_mpz_t(), q);
    prefactor /= factorial_z((unsigned)(q - 1));
    prefactor.canonicalize();

    Enclosure head = Enclosure::from_rational(prefactor, prec) *
                     grouped_log_sum(q, I, +1, prec).exp();

    // each omitted factor exceeds 1; log tail is at most
    // sum_{i>I} nu_i (q-1) q^{-2i} / (1 - q^{1-i}) <= q^{-I}
    mpq_class log_tail(1, pow_z(q, I));
    Enclosure t = Enclosure::from_endpoints(mpq_class(0), log_tail, prec).exp();
    return head * t;
}

PowerLawFit exponent_fit(const DensityReport& report) {
    std::vector<std::pair<unsigned, Enclosure>> u;
    u.reserve(report.d.size());
    mpz_class qk = 1;
    for (unsigned k = 0; k <= report.K; ++k) {
        u.emplace_back(k, report.d[k] *
                              Enclosure::from_integer(qk, report.precision));
        qk *= (unsigned long)report.q;
    }
    return fit_power_law(u);
}

} // namespace fqexcess
