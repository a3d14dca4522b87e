#ifndef FQEXCESS_ENCLOSURE_HPP
#define FQEXCESS_ENCLOSURE_HPP

#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace fqexcess {

/// Certified interval [lo, hi] of dyadic rationals (MPFR values at a fixed
/// working precision). Every operation rounds lo down and hi up, so the true
/// real value is contained by construction.
class Enclosure {
public:
    explicit Enclosure(mpfr_prec_t prec = 128);
    Enclosure(const Enclosure& o);
    Enclosure(Enclosure&& o) noexcept;
    Enclosure& operator=(const Enclosure& o);
    Enclosure& operator=(Enclosure&& o) noexcept;
    ~Enclosure();

    static Enclosure from_rational(const mpq_class& v, mpfr_prec_t prec);
    static Enclosure from_integer(const mpz_class& v, mpfr_prec_t prec);
    static Enclosure from_long(long v, mpfr_prec_t prec);
    static Enclosure from_double(double v, mpfr_prec_t prec);
    static Enclosure from_endpoints(const mpq_class& lo, const mpq_class& hi,
                                    mpfr_prec_t prec);

    mpfr_prec_t prec() const { return prec_; }
    mpfr_srcptr lo() const { return lo_; }
    mpfr_srcptr hi() const { return hi_; }

    Enclosure operator+(const Enclosure& o) const;
    Enclosure operator-(const Enclosure& o) const;
    Enclosure operator*(const Enclosure& o) const;
    /// Requires the divisor interval to exclude 0.
    Enclosure operator/(const Enclosure& o) const;
    Enclosure operator-() const;

    Enclosure& operator+=(const Enclosure& o) { return *this = *this + o; }
    Enclosure& operator*=(const Enclosure& o) { return *this = *this * o; }

    /// exp/log are monotonic, so endpoint evaluation suffices.
    Enclosure exp() const;
    Enclosure log() const;   // requires lo > 0

    /// Interval hull of this and o.
    Enclosure hull(const Enclosure& o) const;
    /// Symmetric widening: [lo - r.hi, hi + r.hi] for a nonnegative radius.
    Enclosure widen(const Enclosure& radius) const;

    bool contains(const mpq_class& v) const;
    bool contains(const Enclosure& o) const;          // o subset of this
    bool strictly_contains(const Enclosure& o) const; // lo < o.lo, o.hi < hi
    bool intersects(const Enclosure& o) const;
    bool is_positive() const;  // lo > 0

    double width() const;      // rounded up
    double lo_double() const;  // rounded down
    double hi_double() const;  // rounded up
    double mid_double() const;
    mpq_class lo_rational() const;  // exact dyadic endpoints
    mpq_class hi_rational() const;
    mpq_class mid_rational() const;

    /// Outward-rounded decimal endpoint strings with the given number of
    /// significant digits.
    std::string lo_string(int digits) const;
    std::string hi_string(int digits) const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

} // namespace fqexcess

#endif
