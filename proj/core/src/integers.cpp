#include "fqexcess/integers.hpp"

#include "fqexcess/densities.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace fqexcess {

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    std::vector<std::uint64_t> composite((std::uint64_t(limit) + 64) / 64, 0);
    auto test = [&](std::uint64_t n) {
        return (composite[n >> 6] >> (n & 63)) & 1;
    };
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (test(n)) continue;
        primes.push_back((std::uint32_t)n);
        for (std::uint64_t m = n * n; m <= limit; m += n)
            composite[m >> 6] |= std::uint64_t(1) << (m & 63);
    }
    return primes;
}

unsigned integer_excess(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("excess undefined for 0");
    unsigned exc = 0;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        while (n % p == 0) { n /= p; ++exc; }
    }
    return exc;
}

IntExcessCounts int_excess_counts(std::uint64_t N, unsigned K,
                                  unsigned threads) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (N > 100000000ull) throw BudgetError("sieve limit capped at 10^8");

    std::vector<std::uint32_t> spf(N + 1, 0);
    for (std::uint64_t p = 2; p <= N; ++p) {
        if (spf[p]) continue;
        for (std::uint64_t m = p; m <= N; m += p)
            if (!spf[m]) spf[m] = (std::uint32_t)p;
    }

    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = (unsigned)std::min<std::uint64_t>(threads, N);

    std::vector<std::vector<std::uint64_t>> local(
        threads, std::vector<std::uint64_t>(K + 2, 0));
    auto work = [&](unsigned t) {
        std::uint64_t begin = 1 + N * t / threads;
        std::uint64_t end = 1 + N * (t + 1) / threads;
        auto& counts = local[t];
        for (std::uint64_t n = begin; n < end; ++n) {
            std::uint64_t m = n;
            std::uint32_t prev = 0;
            unsigned exc = 0;
            while (m > 1) {
                std::uint32_t p = spf[m];
                if (p == prev) ++exc;
                prev = p;
                m /= p;
            }
            ++counts[std::min(exc, K + 1)];
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    IntExcessCounts r;
    r.N = N;
    r.counts.assign(K + 1, 0);
    for (const auto& l : local) {
        for (unsigned k = 0; k <= K; ++k) r.counts[k] += l[k];
        r.overflow += l[K + 1];
    }
    return r;
}

namespace {

Enclosure abs_upper(const Enclosure& x) {
    mpq_class m = std::max(abs(x.lo_rational()), abs(x.hi_rational()));
    return Enclosure::from_endpoints(mpq_class(0), m, x.prec());
}

} // namespace

std::vector<Enclosure> renyi_density(unsigned K, std::uint32_t P, double eps) {
    if (P < 2) throw std::invalid_argument("prime cutoff P must be >= 2");
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    const mpfr_prec_t prec = 160;

    std::vector<Enclosure> head(K + 1, Enclosure(prec));
    head[0] = Enclosure::from_long(1, prec);
    std::vector<Enclosure> nxt(K + 1, Enclosure(prec));

    // per-prime factor 1 + (z-1)/(p^2 (1 - z/p)): constant 1 - 1/p^2, then
    // c_j = (1 - 1/p) p^{-(j+1)}. Coefficients past J_p fall below dyadic
    // significance; their total mass is exactly p^{-(J_p+2)} per prime and
    // is folded into one uniform correction at the end.
    Enclosure drop_mass(prec);
    for (std::uint32_t p : primes_up_to(P)) {
        double bits = std::log2((double)p);
        unsigned J = K;
        if (bits * (K + 2) > 180)
            J = std::min<unsigned>(K, (unsigned)(180 / bits));
        mpq_class pc((long)p);
        mpq_class c0 = 1 - 1 / (pc * pc);
        Enclosure e0 = Enclosure::from_rational(c0, prec);
        std::vector<Enclosure> w(J + 1, Enclosure(prec));
        mpq_class cj = (1 - 1 / pc) / (pc * pc);
        for (unsigned j = 1; j <= J; ++j) {
            w[j] = Enclosure::from_rational(cj, prec);
            cj /= pc;
        }
        for (unsigned k = 0; k <= K; ++k) {
            nxt[k] = e0 * head[k];
            for (unsigned j = 1; j <= std::min(J, k); ++j)
                nxt[k] += w[j] * head[k - j];
        }
        std::swap(head, nxt);
        if (J < K) {
            mpq_class dm(2);
            for (unsigned i = 0; i < J + 2; ++i) dm /= pc;
            drop_mass += Enclosure::from_endpoints(mpq_class(0), dm, prec);
        }
    }

    // uniform correction for the dropped in-prime coefficients (astronomically
    // small by the choice of J_p)
    Enclosure sigma(prec);
    for (unsigned k = 0; k <= K; ++k) sigma += abs_upper(head[k]);
    Enclosure rho = drop_mass.exp() - Enclosure::from_long(1, prec);
    Enclosure unif = abs_upper(rho * sigma);

    // per-coefficient correction for the primes beyond P: the omitted factors
    // multiply the head by 1 + R(z) with |R_0| <= e^{1/P} - 1 and
    // |R_j| <= e^{1/P} P^{-j}
    Enclosure inv_p = Enclosure::from_rational(mpq_class(1, (long)P), prec);
    Enclosure e1p = inv_p.exp();
    std::vector<Enclosure> tau(K + 1, Enclosure(prec));
    tau[0] = e1p - Enclosure::from_long(1, prec);
    for (unsigned j = 1; j <= K; ++j)
        tau[j] = (j == 1 ? e1p : tau[j - 1]) * inv_p;

    std::vector<Enclosure> out;
    out.reserve(K + 1);
    double worst = 0;
    for (unsigned k = 0; k <= K; ++k) {
        Enclosure delta = unif;
        for (unsigned j = 0; j <= k; ++j)
            delta += tau[j] * abs_upper(head[k - j]);
        Enclosure d = head[k].widen(abs_upper(delta));
        worst = std::max(worst, d.width());
        out.push_back(std::move(d));
    }
    if (worst > eps)
        throw AccuracyError("renyi_density: target width unachieved; best " +
                                std::to_string(worst),
                            worst);
    return out;
}

Enclosure delta_constant(std::uint32_t P, double eps) {
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    const mpfr_prec_t prec = 128;
    Enclosure head = Enclosure::from_rational(mpq_class(1, 4), prec);
    for (std::uint32_t p : primes_up_to(P)) {
        if (p < 3) continue;
        mpq_class pc((long)p);
        head *= Enclosure::from_rational((pc - 1) * (pc - 1) / (pc * (pc - 2)),
                                         prec);
    }
    // remaining factors 1 + 1/(p(p-2)) multiply by at most e^{sum 2/n^2} over
    // n > P, which is below e^{2/P}
    Enclosure t = Enclosure::from_rational(mpq_class(2, (long)P), prec).exp();
    Enclosure r = head * Enclosure::from_endpoints(mpq_class(1), t.hi_rational(),
                                                   prec);
    if (r.width() > eps)
        throw AccuracyError("delta_constant: target width unachieved; best " +
                                std::to_string(r.width()),
                            r.width());
    return r;
}

} // namespace fqexcess
