#ifndef FQEXCESS_SERIES_HPP
#define FQEXCESS_SERIES_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace fqexcess {

/// C(n, m) for arbitrary-precision n and small m.
mpz_class binomial(const mpz_class& n, unsigned m);

/// Truncated power series in t with exact rational coefficients,
/// coeffs[n] = [t^n]; fixed truncation order (length stays order+1).
class Series1 {
public:
    explicit Series1(unsigned order) : c_(order + 1, mpq_class(0)) {}
    Series1(unsigned order, const mpq_class& constant) : Series1(order) {
        c_[0] = constant;
    }

    unsigned order() const { return (unsigned)c_.size() - 1; }
    const mpq_class& operator[](unsigned n) const { return c_.at(n); }
    mpq_class& operator[](unsigned n) { return c_.at(n); }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    Series1 operator+(const Series1& o) const;
    Series1 operator-(const Series1& o) const;
    Series1 operator*(const Series1& o) const;

    /// Multiplicative inverse mod t^(order+1); requires nonzero constant term.
    Series1 inverse() const;
    Series1 pow(std::uint64_t n) const;
    Series1 truncate(unsigned new_order) const;

private:
    std::vector<mpq_class> c_;
};

/// Truncated power series in (t, z) with exact integer coefficients,
/// at(n, k) = [t^n z^k]. Both truncation orders fixed at construction.
class Series2 {
public:
    Series2(unsigned t_order, unsigned z_order)
        : nt_(t_order), nz_(z_order),
          c_((t_order + 1) * (z_order + 1), mpz_class(0)) {}

    unsigned t_order() const { return nt_; }
    unsigned z_order() const { return nz_; }
    const mpz_class& at(unsigned n, unsigned k) const {
        return c_.at(idx(n, k));
    }
    mpz_class& at(unsigned n, unsigned k) { return c_.at(idx(n, k)); }

    Series2 operator+(const Series2& o) const;
    Series2 operator-(const Series2& o) const;
    Series2 operator*(const Series2& o) const;

    static Series2 one(unsigned t_order, unsigned z_order) {
        Series2 s(t_order, z_order);
        s.at(0, 0) = 1;
        return s;
    }

private:
    std::size_t idx(unsigned n, unsigned k) const {
        return (std::size_t)n * (nz_ + 1) + k;
    }
    unsigned nt_, nz_;
    std::vector<mpz_class> c_;
};

/// prod_{i=1..N_t} (1 - t^i)^{nu_i} truncated at t^{N_t}; equals 1 - q t
/// exactly (all higher coefficients cancel).
Series1 one_minus_qt_product(std::uint64_t q, unsigned t_order);

/// E(t, z): coefficient (n, k) counts monic degree-n polynomials of
/// excess k. Built as prod_i (1 + t^i/(1 - t^i z))^{nu_i}.
Series2 count_gf(std::uint64_t q, unsigned t_order, unsigned z_order);

/// (1 - q t) E(t, z) built factor-by-factor as
/// prod_i [(1 - t^i)(1 + t^i/(1 - t^i z))]^{nu_i}; coefficient (n, k) is
/// e_{n,k} - q e_{n-1,k}.
Series2 product_G(std::uint64_t q, unsigned t_order, unsigned z_order);

/// E(t, 0), the squarefree counting series, built as prod_i (1+t^i)^{nu_i};
/// closed form (1 - q t^2)/(1 - q t).
Series1 squarefree_gf(std::uint64_t q, unsigned t_order);

/// Rows n = 0..N of e_{n,k}, k = 0..K; row sums are q^n when K >= n-1.
struct ExcessTable {
    std::uint64_t q = 0;
    std::vector<std::vector<mpz_class>> rows;

    static ExcessTable from_series(std::uint64_t q, unsigned max_degree,
                                   unsigned max_excess);
};

} // namespace fqexcess

#endif
