#include "fqexcess/bruteforce.hpp"

#include <chrono>
#include <thread>

#include "fqexcess/poly.hpp"
#include "fqexcess/series.hpp"

namespace fqexcess {

FieldSpec field_from_order(std::uint64_t q) {
    if (q < 2) throw FieldError("q must be a prime power >= 2");
    std::uint64_t p = 0, rest = q;
    for (std::uint64_t d = 2; d * d <= rest; ++d)
        if (rest % d == 0) { p = d; break; }
    if (p == 0) p = q;  // q prime
    unsigned e = 0;
    while (rest > 1) {
        if (rest % p != 0) throw FieldError("q must be a prime power");
        rest /= p;
        ++e;
    }
    return make_field((unsigned)p, e);
}

namespace {

constexpr int kMaxDeg = 63;

// in-place exact division of the monic polynomial a (degree da) by the
// monic b (degree db); afterwards a[0..da-db] holds the quotient
void divide_exact(const FieldSpec& F, Elem* a, int da, const Elem* b,
                  int db) {
    for (int i = da; i >= db; --i) {
        Elem f = a[i];
        if (f)
            for (int j = 0; j < db; ++j)
                a[i - db + j] = F.sub(a[i - db + j], F.mul(f, b[j]));
    }
    for (int i = 0; i + db <= da; ++i) a[i] = a[i + db];
}

struct CodeOps {
    const FieldSpec* F;
    std::uint64_t qpow[kMaxDeg + 2];

    explicit CodeOps(const FieldSpec& field) : F(&field) {
        qpow[0] = 1;
        for (int i = 1; i <= kMaxDeg + 1; ++i) qpow[i] = qpow[i - 1] * field.q();
    }

    int degree_of(std::uint64_t code) const {
        int d = 0;
        while (qpow[d + 1] <= code) ++d;
        return d;
    }

    void decode(std::uint64_t code, Elem* a, int deg) const {
        for (int i = 0; i <= deg; ++i) {
            a[i] = (Elem)(code % F->q());
            code /= F->q();
        }
    }

    std::uint64_t encode(const Elem* a, int deg) const {
        std::uint64_t c = 0;
        for (int i = deg; i >= 0; --i) c = c * F->q() + a[i];
        return c;
    }
};

unsigned excess_of_code(const CodeOps& ops, const IrreducibleStore& irr,
                        std::uint64_t code, unsigned n) {
    Elem a[kMaxDeg + 1], b[kMaxDeg + 1];
    ops.decode(code, a, (int)n);
    int deg = (int)n;
    std::uint64_t cur = code, prev = 0;
    unsigned exc = 0;
    while (deg >= 1) {
        std::uint64_t s = irr.spf(cur);
        if (s == prev) ++exc;
        prev = s;
        if (s == cur) break;  // irreducible leftover
        int db = ops.degree_of(s);
        ops.decode(s, b, db);
        divide_exact(*ops.F, a, deg, b, db);
        deg -= db;
        cur = ops.encode(a, deg);
    }
    return exc;
}

} // namespace

std::vector<std::uint64_t> enumerate_excess(const FieldSpec& field, unsigned n,
                                            const IrreducibleStore& irr,
                                            unsigned threads,
                                            std::uint64_t budget) {
    if (n == 0) return {1};
    if (n > (unsigned)kMaxDeg) throw BudgetError("degree exceeds enumeration cap");
    if (!irr.covers(n))
        throw PolyError("irreducible store does not cover the degree");
    CodeOps ops(field);
    std::uint64_t total = ops.qpow[n];
    if (total > budget) throw BudgetError("q^n exceeds enumeration budget");

    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    threads = (unsigned)std::min<std::uint64_t>(threads, total);

    std::vector<std::vector<std::uint64_t>> local(
        threads, std::vector<std::uint64_t>(n, 0));
    auto work = [&](unsigned t) {
        std::uint64_t begin = total + total * t / threads;
        std::uint64_t end = total + total * (t + 1) / threads;
        auto& counts = local[t];
        for (std::uint64_t code = begin; code < end; ++code)
            ++counts[excess_of_code(ops, irr, code, n)];
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    std::vector<std::uint64_t> counts(n, 0);
    for (const auto& l : local)
        for (unsigned k = 0; k < n; ++k) counts[k] += l[k];
    return counts;
}

std::uint64_t count_squarefree(const FieldSpec& field, unsigned n,
                               const IrreducibleStore& irr) {
    if (n == 0) return 1;
    if (n == 1) return field.q();
    if (n > (unsigned)kMaxDeg) throw BudgetError("degree exceeds enumeration cap");
    if (!irr.covers(n / 2))
        throw PolyError("irreducible store does not cover degree n/2");
    CodeOps ops(field);
    const std::uint64_t q = field.q();
    const std::uint64_t total = ops.qpow[n];
    std::vector<std::uint64_t> marked((total + 63) / 64, 0);
    auto mark = [&](std::uint64_t offset) {
        marked[offset >> 6] |= std::uint64_t(1) << (offset & 63);
    };

    for (unsigned d = 1; 2 * d <= n; ++d) {
        unsigned m = n - 2 * d;
        for (std::uint32_t pc : irr.irreducibles(d)) {
            Poly pi = Poly::decode(field, pc);
            Poly h = pi * pi;  // monic of degree 2d
            const auto& hc = h.coeffs();
            // step[j][c] = contribution of changing g's digit j by the field
            // element c: h * c shifted by j (only the digit deltas matter)
            // prod tracks h * g for the odometer-enumerated monic g
            Elem prod[kMaxDeg + 1] = {0};
            std::vector<Elem> digits(m, 0);  // g = x^m + sum digits[j] x^j
            for (unsigned i = 0; i < hc.size(); ++i) prod[m + i] = hc[i];
            std::uint64_t code = ops.encode(prod, (int)n);
            while (true) {
                mark(code - total);
                // odometer increment of g's low digits
                unsigned j = 0;
                while (j < m && digits[j] == q - 1) {
                    // digit wraps q-1 -> 0: subtract h * (q-1-th element) * x^j
                    Elem delta = field.neg((Elem)(q - 1));
                    for (unsigned i = 0; i < hc.size(); ++i) {
                        Elem& slot = prod[j + i];
                        Elem nv = field.add(slot, field.mul(hc[i], delta));
                        code += ((std::int64_t)nv - (std::int64_t)slot) *
                                (std::int64_t)ops.qpow[j + i];
                        slot = nv;
                    }
                    digits[j] = 0;
                    ++j;
                }
                if (j == m) break;
                // digit j steps from value v to v+1 (element indices of the
                // prime subfield enumerate 0,1,...,p-1; for extension fields
                // consecutive indices differ by a varying field element)
                Elem delta = field.sub((Elem)(digits[j] + 1), (Elem)digits[j]);
                for (unsigned i = 0; i < hc.size(); ++i) {
                    Elem& slot = prod[j + i];
                    Elem nv = field.add(slot, field.mul(hc[i], delta));
                    code += ((std::int64_t)nv - (std::int64_t)slot) *
                            (std::int64_t)ops.qpow[j + i];
                    slot = nv;
                }
                ++digits[j];
            }
        }
    }

    std::uint64_t nonsq = 0;
    for (std::uint64_t w : marked) nonsq += (std::uint64_t)__builtin_popcountll(w);
    return total - nonsq;
}

VerifyReport verify_counts(
    std::uint64_t q, unsigned n_max, unsigned K, unsigned threads,
    const std::vector<std::vector<mpz_class>>* series_override) {
    VerifyReport rep;
    rep.q = q;
    rep.n_max = n_max;
    rep.K = K;

    FieldSpec field = field_from_order(q);
    IrreducibleStore irr = IrreducibleStore::sieve(field, n_max);
    if (series_override) {
        rep.series = *series_override;
    } else {
        ExcessTable tab = ExcessTable::from_series(q, n_max, K);
        rep.series = tab.rows;
    }

    auto t0 = std::chrono::steady_clock::now();
    std::uint64_t polys = 0, qn = 1;
    for (unsigned n = 0; n <= n_max; ++n) {
        rep.oracle.push_back(enumerate_excess(field, n, irr, threads));
        polys += qn;
        qn *= q;
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
    rep.polys_per_second =
        rep.wall_seconds > 0 ? (double)polys / rep.wall_seconds : 0;

    for (unsigned n = 0; n <= n_max; ++n) {
        for (unsigned k = 0; k <= K; ++k) {
            mpz_class oracle =
                k < rep.oracle[n].size() ? mpz_class((unsigned long)rep.oracle[n][k])
                                         : mpz_class(0);
            if (oracle != rep.series[n][k])
                rep.mismatches.push_back({n, k, oracle, rep.series[n][k]});
        }
    }
    return rep;
}

} // namespace fqexcess
