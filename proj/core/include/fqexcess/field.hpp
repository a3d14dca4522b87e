#ifndef FQEXCESS_FIELD_HPP
#define FQEXCESS_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fqexcess {

/// Index of a field element in [0, q). The index encodes the coefficient
/// vector (c_0, ..., c_{e-1}) over GF(p) as sum c_j p^j, so 0 and 1 are the
/// additive and multiplicative identities of every field.
using Elem = std::uint32_t;

class FieldError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Returns the first monic irreducible of degree e over GF(p), in ascending
/// lexicographic order of (c_{e-1}, ..., c_0). Coefficients low-first,
/// length e+1, leading coefficient 1. Deterministic across runs/platforms.
std::vector<unsigned> find_default_modulus(unsigned p, unsigned e);

/// Irreducibility of a monic polynomial over GF(p) by exhaustive trial
/// division (degrees are tiny here).
bool is_irreducible_gfp(unsigned p, const std::vector<unsigned>& coeffs);

/// A concrete finite field GF(q), q = p^e. Elements are immutable integer
/// indices; all operations are pure. Immutable after construction and
/// safely shareable across threads.
///
/// Dense mul/inv tables are precomputed for q <= table_bound (default 2^12);
/// larger fields fall back to table-free polynomial-basis arithmetic.
class FieldSpec {
public:
    static constexpr std::uint64_t kDefaultTableBound = 1u << 12;

    FieldSpec(unsigned p, unsigned e,
              std::uint64_t table_bound = kDefaultTableBound);
    FieldSpec(unsigned p, unsigned e, std::vector<unsigned> modulus,
              std::uint64_t table_bound = kDefaultTableBound);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint64_t q() const { return q_; }
    bool has_tables() const { return !mul_table_.empty(); }

    /// Modulus coefficients over GF(p), low-first, length e+1. Empty for e=1.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    Elem add(Elem a, Elem b) const {
        if (e_ == 1) { std::uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
        return add_ext(a, b);
    }
    Elem sub(Elem a, Elem b) const {
        if (e_ == 1) return a >= b ? a - b : a + p_ - b;
        return sub_ext(a, b);
    }
    Elem neg(Elem a) const { return sub(0, a); }
    Elem mul(Elem a, Elem b) const {
        if (!mul_table_.empty()) return mul_table_[a * q_ + b];
        return mul_slow(a, b);
    }
    Elem inv(Elem a) const {
        if (a == 0) throw FieldError("inv(0) is undefined");
        if (!inv_table_.empty()) return inv_table_[a];
        return pow(a, q_ - 2);
    }
    Elem pow(Elem a, std::uint64_t n) const;

    /// index <-> coefficient vector over GF(p), low-first, length e.
    std::vector<unsigned> coeff_vector(Elem a) const;
    Elem from_coeff_vector(const std::vector<unsigned>& c) const;

    bool same_field(const FieldSpec& o) const {
        return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

private:
    void init(std::uint64_t table_bound);
    Elem add_ext(Elem a, Elem b) const;
    Elem sub_ext(Elem a, Elem b) const;
    Elem mul_slow(Elem a, Elem b) const;

    unsigned p_ = 0;
    unsigned e_ = 0;
    std::uint64_t q_ = 0;
    std::vector<unsigned> modulus_;   // empty iff e == 1
    std::vector<Elem> mul_table_;     // q*q entries when tabled
    std::vector<Elem> inv_table_;     // q entries when tabled
};

/// Convenience factory mirroring the construction contract: p must be prime,
/// e >= 1, and a user-supplied modulus must be monic irreducible of degree e.
FieldSpec make_field(unsigned p, unsigned e);
FieldSpec make_field(unsigned p, unsigned e, std::vector<unsigned> modulus);

} // namespace fqexcess

#endif
