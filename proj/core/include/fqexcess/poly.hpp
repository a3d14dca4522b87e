#ifndef FQEXCESS_POLY_HPP
#define FQEXCESS_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqexcess/field.hpp"

namespace fqexcess {

class IrreducibleStore;

class PolyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense univariate polynomial over a FieldSpec. Coefficients are stored
/// lowest degree first with no trailing zeros; the zero polynomial has an
/// empty coefficient vector and degree() == nullopt (the "neg-infinity"
/// sentinel). Values are immutable in practice: every operation returns a
/// fresh Poly. The referenced FieldSpec must outlive the polynomial.
class Poly {
public:
    Poly(const FieldSpec& field, std::vector<Elem> coeffs);

    static Poly zero(const FieldSpec& f) { return Poly(f, {}); }
    static Poly one(const FieldSpec& f) { return Poly(f, {1}); }
    static Poly x(const FieldSpec& f) { return Poly(f, {0, 1}); }
    static Poly constant(const FieldSpec& f, Elem c) {
        return c == 0 ? zero(f) : Poly(f, {c});
    }

    const FieldSpec& field() const { return *field_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return (int)c_.size() - 1;
    }
    Elem leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return leading() == 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;

    /// Quotient and remainder with deg r < deg b. Throws on zero divisor.
    std::pair<Poly, Poly> divrem(const Poly& b) const;
    bool divisible_by(const Poly& b) const;

    Poly derivative() const;
    Poly make_monic() const;
    Elem eval(Elem a) const;

    /// code = sum index(c_i) * q^i. Monic degree-n polynomials occupy
    /// [q^n, 2*q^n).
    std::uint64_t encode() const;
    static Poly decode(const FieldSpec& f, std::uint64_t code);

    /// Textual format: '+'-separated terms "c*x^k", "x^k", "x", "c";
    /// integer coefficients are reduced into the field (mod p for prime
    /// fields, mod q as an element index otherwise).
    static Poly parse(const FieldSpec& f, const std::string& text);
    std::string to_string() const;

private:
    void check_same_field(const Poly& o) const;

    const FieldSpec* field_;
    std::vector<Elem> c_;
};

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// true iff gcd(f, f') = 1, equivalently excess(factor(f)) == 0.
/// Requires f monic of degree >= 1.
bool is_squarefree(const Poly& f);

/// Multiset of (monic irreducible, multiplicity) pairs sorted by
/// (degree, code), plus the unit so that unit * prod pi^alpha == f.
struct Factorization {
    std::vector<std::pair<Poly, unsigned>> factors;
    Elem unit = 1;
};

/// Factors a nonzero polynomial by trial division against the store's
/// irreducible lists (SPF arrays are used when they cover deg f).
/// The store must cover degrees up to deg(f)/2.
Factorization factor(const Poly& f, const IrreducibleStore& irr);

/// Sum of (alpha_i - 1); zero for the empty factorization.
unsigned excess(const Factorization& fac);

/// unit * prod pi^alpha.
Poly reconstruct(const FieldSpec& field, const Factorization& fac);

} // namespace fqexcess

#endif
