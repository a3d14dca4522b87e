#include "fqexcess/enclosure.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace fqexcess {

Enclosure::Enclosure(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Enclosure& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Enclosure& Enclosure::operator=(const Enclosure& o) {
    if (this != &o) {
        if (prec_ != o.prec_) {
            mpfr_set_prec(lo_, o.prec_);
            mpfr_set_prec(hi_, o.prec_);
            prec_ = o.prec_;
        }
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

Enclosure::~Enclosure() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Enclosure Enclosure::from_rational(const mpq_class& v, mpfr_prec_t prec) {
    Enclosure r(prec);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::from_integer(const mpz_class& v, mpfr_prec_t prec) {
    Enclosure r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::from_long(long v, mpfr_prec_t prec) {
    Enclosure r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::from_double(double v, mpfr_prec_t prec) {
    Enclosure r(prec);
    mpfr_set_d(r.lo_, v, MPFR_RNDD);
    mpfr_set_d(r.hi_, v, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::from_endpoints(const mpq_class& lo, const mpq_class& hi,
                                    mpfr_prec_t prec) {
    if (lo > hi) throw std::invalid_argument("enclosure endpoints reversed");
    Enclosure r(prec);
    mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator+(const Enclosure& o) const {
    Enclosure r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator-(const Enclosure& o) const {
    Enclosure r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator*(const Enclosure& o) const {
    Enclosure r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lo = min of the four products rounded down
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // hi = max of the four products rounded up
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Enclosure Enclosure::operator/(const Enclosure& o) const {
    if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
        throw std::domain_error("interval division by interval containing 0");
    Enclosure r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

Enclosure Enclosure::operator-() const {
    Enclosure r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::exp() const {
    Enclosure r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::log() const {
    if (mpfr_sgn(lo_) <= 0)
        throw std::domain_error("interval log requires lo > 0");
    Enclosure r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::hull(const Enclosure& o) const {
    Enclosure r(std::max(prec_, o.prec_));
    mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::widen(const Enclosure& radius) const {
    if (mpfr_sgn(radius.hi_) < 0)
        throw std::invalid_argument("widen requires nonnegative radius");
    Enclosure r(prec_);
    mpfr_sub(r.lo_, lo_, radius.hi_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, radius.hi_, MPFR_RNDU);
    return r;
}

bool Enclosure::contains(const mpq_class& v) const {
    return mpfr_cmp_q(lo_, v.get_mpq_t()) <= 0 &&
           mpfr_cmp_q(hi_, v.get_mpq_t()) >= 0;
}

bool Enclosure::contains(const Enclosure& o) const {
    return mpfr_cmp(lo_, o.lo_) <= 0 && mpfr_cmp(hi_, o.hi_) >= 0;
}

bool Enclosure::strictly_contains(const Enclosure& o) const {
    return mpfr_cmp(lo_, o.lo_) < 0 && mpfr_cmp(hi_, o.hi_) > 0;
}

bool Enclosure::intersects(const Enclosure& o) const {
    return mpfr_cmp(lo_, o.hi_) <= 0 && mpfr_cmp(o.lo_, hi_) <= 0;
}

bool Enclosure::is_positive() const { return mpfr_sgn(lo_) > 0; }

double Enclosure::width() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

double Enclosure::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Enclosure::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Enclosure::mid_double() const { return (lo_double() + hi_double()) / 2; }

namespace {
mpq_class to_rational(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return mpq_class(0);
    mpq_class r;
    mpfr_get_q(r.get_mpq_t(), x);
    return r;
}
} // namespace

mpq_class Enclosure::lo_rational() const { return to_rational(lo_); }
mpq_class Enclosure::hi_rational() const { return to_rational(hi_); }
mpq_class Enclosure::mid_rational() const {
    return (lo_rational() + hi_rational()) / 2;
}

namespace {
std::string format_directed(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
    std::vector<char> buf(64 + digits);
    mpfr_snprintf(buf.data(), buf.size(), "%.*R*e", digits - 1, rnd, x);
    return std::string(buf.data());
}
} // namespace

std::string Enclosure::lo_string(int digits) const {
    return format_directed(lo_, digits, MPFR_RNDD);
}

std::string Enclosure::hi_string(int digits) const {
    return format_directed(hi_, digits, MPFR_RNDU);
}

} // namespace fqexcess
