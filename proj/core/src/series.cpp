#include "fqexcess/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqexcess/irreducibles.hpp"

namespace fqexcess {

mpz_class binomial(const mpz_class& n, unsigned m) {
    mpz_class num = 1;
    mpz_class den = 1;
    for (unsigned j = 0; j < m; ++j) {
        num *= n - j;
        den *= j + 1;
    }
    return num / den;
}

Series1 Series1::operator+(const Series1& o) const {
    if (order() != o.order()) throw std::invalid_argument("order mismatch");
    Series1 r(order());
    for (unsigned n = 0; n <= order(); ++n) r.c_[n] = c_[n] + o.c_[n];
    return r;
}

Series1 Series1::operator-(const Series1& o) const {
    if (order() != o.order()) throw std::invalid_argument("order mismatch");
    Series1 r(order());
    for (unsigned n = 0; n <= order(); ++n) r.c_[n] = c_[n] - o.c_[n];
    return r;
}

Series1 Series1::operator*(const Series1& o) const {
    if (order() != o.order()) throw std::invalid_argument("order mismatch");
    Series1 r(order());
    for (unsigned a = 0; a <= order(); ++a) {
        if (c_[a] == 0) continue;
        for (unsigned b = 0; a + b <= order(); ++b) {
            if (o.c_[b] == 0) continue;
            r.c_[a + b] += c_[a] * o.c_[b];
        }
    }
    return r;
}

Series1 Series1::inverse() const {
    if (c_[0] == 0)
        throw std::invalid_argument("inverse of series with zero constant term");
    Series1 r(order());
    mpq_class c0inv = 1 / c_[0];
    r.c_[0] = c0inv;
    for (unsigned n = 1; n <= order(); ++n) {
        mpq_class acc = 0;
        for (unsigned j = 1; j <= n; ++j) acc += c_[j] * r.c_[n - j];
        r.c_[n] = -acc * c0inv;
    }
    return r;
}

Series1 Series1::pow(std::uint64_t n) const {
    Series1 r(order(), 1);
    Series1 base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

Series1 Series1::truncate(unsigned new_order) const {
    Series1 r(new_order);
    for (unsigned n = 0; n <= std::min(new_order, order()); ++n) r.c_[n] = c_[n];
    return r;
}

Series2 Series2::operator+(const Series2& o) const {
    if (nt_ != o.nt_ || nz_ != o.nz_)
        throw std::invalid_argument("order mismatch");
    Series2 r(nt_, nz_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

Series2 Series2::operator-(const Series2& o) const {
    if (nt_ != o.nt_ || nz_ != o.nz_)
        throw std::invalid_argument("order mismatch");
    Series2 r(nt_, nz_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

Series2 Series2::operator*(const Series2& o) const {
    if (nt_ != o.nt_ || nz_ != o.nz_)
        throw std::invalid_argument("order mismatch");
    Series2 r(nt_, nz_);
    for (unsigned na = 0; na <= nt_; ++na)
        for (unsigned ka = 0; ka <= nz_; ++ka) {
            const mpz_class& va = at(na, ka);
            if (va == 0) continue;
            for (unsigned nb = 0; na + nb <= nt_; ++nb)
                for (unsigned kb = 0; ka + kb <= nz_; ++kb) {
                    const mpz_class& vb = o.at(nb, kb);
                    if (vb == 0) continue;
                    r.at(na + nb, ka + kb) += va * vb;
                }
        }
    return r;
}

Series1 one_minus_qt_product(std::uint64_t q, unsigned t_order) {
    if (t_order < 1) throw std::invalid_argument("t_order must be >= 1");
    Series1 acc(t_order, 1);
    for (unsigned i = 1; i <= t_order; ++i) {
        mpz_class nu = nu_formula(q, i);
        // (1 - t^i)^{nu} truncated: only m <= t_order/i binomial terms matter
        Series1 fac(t_order);
        for (unsigned m = 0; (std::uint64_t)m * i <= t_order; ++m) {
            mpz_class b = binomial(nu, m);
            if (m % 2) b = -b;
            fac[m * i] = mpq_class(b);
        }
        acc = acc * fac;
    }
    return acc;
}

namespace {

// (base)^nu for a Series2 base = 1 + h where h has t-valuation >= val;
// binomial expansion needs only m <= t_order/val terms.
Series2 unit_series_pow(const Series2& base, const mpz_class& nu,
                        unsigned val) {
    unsigned nt = base.t_order(), nz = base.z_order();
    Series2 h = base - Series2::one(nt, nz);
    Series2 acc = Series2::one(nt, nz);
    Series2 hm = Series2::one(nt, nz);
    for (unsigned m = 1; (std::uint64_t)m * val <= nt; ++m) {
        hm = hm * h;
        mpz_class b = binomial(nu, m);
        for (unsigned n = 0; n <= nt; ++n)
            for (unsigned k = 0; k <= nz; ++k)
                if (hm.at(n, k) != 0) acc.at(n, k) += b * hm.at(n, k);
    }
    return acc;
}

// 1 + t^i/(1 - t^i z) = 1 + sum_{j>=1} t^{ij} z^{j-1}
Series2 degree_factor(unsigned i, unsigned nt, unsigned nz) {
    Series2 f = Series2::one(nt, nz);
    for (unsigned j = 1; (std::uint64_t)j * i <= nt && j - 1 <= nz; ++j)
        f.at(j * i, j - 1) = 1;
    return f;
}

} // namespace

Series2 count_gf(std::uint64_t q, unsigned t_order, unsigned z_order) {
    Series2 acc = Series2::one(t_order, z_order);
    for (unsigned i = 1; i <= t_order; ++i) {
        mpz_class nu = nu_formula(q, i);
        acc = acc * unit_series_pow(degree_factor(i, t_order, z_order), nu, i);
    }
    return acc;
}

Series2 product_G(std::uint64_t q, unsigned t_order, unsigned z_order) {
    Series2 acc = Series2::one(t_order, z_order);
    // combined factor (1 - t^i)(1 + t^i/(1 - t^i z)) has t-valuation 2i,
    // so degrees i > t_order/2 contribute nothing
    for (unsigned i = 1; 2 * i <= t_order; ++i) {
        mpz_class nu = nu_formula(q, i);
        Series2 one_minus_ti = Series2::one(t_order, z_order);
        if (i <= t_order) one_minus_ti.at(i, 0) = -1;
        Series2 base = one_minus_ti * degree_factor(i, t_order, z_order);
        acc = acc * unit_series_pow(base, nu, 2 * i);
    }
    return acc;
}

Series1 squarefree_gf(std::uint64_t q, unsigned t_order) {
    Series1 acc(t_order, 1);
    for (unsigned i = 1; i <= t_order; ++i) {
        mpz_class nu = nu_formula(q, i);
        Series1 fac(t_order);
        for (unsigned m = 0; (std::uint64_t)m * i <= t_order; ++m)
            fac[m * i] = mpq_class(binomial(nu, m));
        acc = acc * fac;
    }
    return acc;
}

ExcessTable ExcessTable::from_series(std::uint64_t q, unsigned max_degree,
                                     unsigned max_excess) {
    Series2 e = count_gf(q, max_degree, max_excess);
    ExcessTable t;
    t.q = q;
    t.rows.resize(max_degree + 1);
    for (unsigned n = 0; n <= max_degree; ++n) {
        t.rows[n].resize(max_excess + 1);
        for (unsigned k = 0; k <= max_excess; ++k) t.rows[n][k] = e.at(n, k);
    }
    return t;
}

} // namespace fqexcess
