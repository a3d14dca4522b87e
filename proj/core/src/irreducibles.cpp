#include "fqexcess/irreducibles.hpp"

#include <stdexcept>

namespace fqexcess {

namespace {

int mobius(unsigned n) {
    int m = 1;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

} // namespace

mpz_class nu_formula(std::uint64_t q, unsigned i) {
    if (q < 2) throw std::invalid_argument("nu_formula: q must be >= 2");
    if (i < 1) throw std::invalid_argument("nu_formula: degree must be >= 1");
    mpz_class sum = 0;
    mpz_class qz(static_cast<unsigned long>(q));
    for (unsigned d = 1; d <= i; ++d) {
        if (i % d != 0) continue;
        int mu = mobius(d);
        if (mu == 0) continue;
        mpz_class term;
        mpz_pow_ui(term.get_mpz_t(), qz.get_mpz_t(), i / d);
        sum += mu * term;
    }
    if (sum % i != 0)
        throw std::logic_error("nu_formula: Mobius sum not divisible by i");
    return sum / i;
}

NuTable NuTable::build(std::uint64_t q, unsigned max_degree) {
    NuTable t;
    t.q = q;
    t.nu.reserve(max_degree);
    for (unsigned i = 1; i <= max_degree; ++i) t.nu.push_back(nu_formula(q, i));
    return t;
}

IrreducibleStore IrreducibleStore::sieve(const FieldSpec& field, unsigned D,
                                         std::uint64_t max_entries) {
    if (D < 1) throw std::invalid_argument("sieve: D must be >= 1");
    const std::uint64_t q = field.q();

    IrreducibleStore store;
    store.field_ = &field;
    store.D_ = D;
    store.qpow_.resize(D + 2);
    store.qpow_[0] = 1;
    std::uint64_t total = 0;
    for (unsigned i = 1; i <= D + 1; ++i) {
        if (store.qpow_[i - 1] > (std::uint64_t(1) << 62) / q)
            throw std::length_error("sieve: q^D overflows");
        store.qpow_[i] = store.qpow_[i - 1] * q;
        if (i <= D) total += store.qpow_[i];
    }
    if (total > max_entries)
        throw std::length_error("sieve: memory budget exceeded");

    store.irr_.resize(D);
    store.spf_.resize(D);

    // scratch digit buffers
    std::vector<Elem> gd, pd, prod;

    for (unsigned n = 1; n <= D; ++n) {
        auto& spf = store.spf_[n - 1];
        spf.assign(store.qpow_[n], 0);

        // mark composites: products pi * g, smallest pi first so the first
        // mark wins the (degree, code) order
        for (unsigned d = 1; 2 * d <= n; ++d) {
            unsigned m = n - d;
            for (std::uint32_t picode : store.irr_[d - 1]) {
                pd.assign(d + 1, 0);
                std::uint64_t t = picode;
                for (unsigned i = 0; i <= d; ++i) { pd[i] = (Elem)(t % q); t /= q; }
                // odometer over monic g of degree m
                gd.assign(m + 1, 0);
                gd[m] = 1;
                for (std::uint64_t gcount = store.qpow_[m]; gcount-- > 0;) {
                    prod.assign(n + 1, 0);
                    for (unsigned i = 0; i <= d; ++i) {
                        if (pd[i] == 0) continue;
                        for (unsigned j = 0; j <= m; ++j)
                            prod[i + j] = field.add(
                                prod[i + j], field.mul(pd[i], gd[j]));
                    }
                    std::uint64_t code = 0;
                    for (unsigned i = n + 1; i-- > 0;) code = code * q + prod[i];
                    std::uint32_t& slot = spf[code - store.qpow_[n]];
                    if (slot == 0) slot = picode;
                    // increment g
                    for (unsigned i = 0; i <= m; ++i) {
                        if (++gd[i] < q) break;
                        gd[i] = 0;
                    }
                }
            }
        }

        // unmarked entries are irreducible
        auto& list = store.irr_[n - 1];
        for (std::uint64_t off = 0; off < store.qpow_[n]; ++off) {
            if (spf[off] == 0) {
                std::uint32_t code = (std::uint32_t)(store.qpow_[n] + off);
                spf[off] = code;
                list.push_back(code);
            }
        }
    }
    return store;
}

std::uint32_t IrreducibleStore::spf(std::uint64_t code) const {
    for (unsigned n = 1; n <= D_; ++n) {
        if (code >= qpow_[n] && code < 2 * qpow_[n])
            return spf_[n - 1][code - qpow_[n]];
    }
    throw std::out_of_range("spf: code not a monic polynomial in sieve range");
}

} // namespace fqexcess
