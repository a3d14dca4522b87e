#include "fqexcess/field.hpp"

#include <algorithm>

namespace fqexcess {

namespace {

bool is_prime_u(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; (std::uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// GF(p)[x] helpers on low-first coefficient vectors, used only at
// construction time (modulus search/validation).
void trim(std::vector<unsigned>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<unsigned> mod_gfp(std::vector<unsigned> a,
                              const std::vector<unsigned>& b, unsigned p) {
    // b monic
    while (a.size() >= b.size() && !a.empty()) {
        unsigned c = a.back();
        std::size_t shift = a.size() - b.size();
        if (c != 0) {
            for (std::size_t i = 0; i < b.size(); ++i) {
                unsigned t = (unsigned)(((std::uint64_t)c * b[i]) % p);
                unsigned& ai = a[i + shift];
                ai = (ai + p - t) % p;
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() < b.size()) break;
    }
    trim(a);
    return a;
}

std::vector<unsigned> decode_gfp(unsigned p, std::uint64_t code) {
    std::vector<unsigned> c;
    while (code) { c.push_back((unsigned)(code % p)); code /= p; }
    return c;
}

} // namespace

bool is_irreducible_gfp(unsigned p, const std::vector<unsigned>& coeffs) {
    std::size_t deg = coeffs.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t pd = 1;
        for (std::size_t i = 0; i < d; ++i) pd *= p;
        for (std::uint64_t lower = 0; lower < pd; ++lower) {
            std::vector<unsigned> div = decode_gfp(p, lower);
            div.resize(d + 1, 0);
            div[d] = 1;
            if (mod_gfp(coeffs, div, p).empty()) return false;
        }
    }
    return true;
}

std::vector<unsigned> find_default_modulus(unsigned p, unsigned e) {
    if (e < 2) throw FieldError("find_default_modulus requires e >= 2");
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    // lexicographic order on (c_{e-1}, ..., c_0) equals ascending code order
    for (std::uint64_t lower = 0; lower < pe; ++lower) {
        std::vector<unsigned> c = decode_gfp(p, lower);
        c.resize(e + 1, 0);
        c[e] = 1;
        if (is_irreducible_gfp(p, c)) return c;
    }
    throw FieldError("no irreducible found (unreachable)");
}

FieldSpec::FieldSpec(unsigned p, unsigned e, std::uint64_t table_bound)
    : p_(p), e_(e) {
    if (!is_prime_u(p)) throw FieldError("field characteristic must be prime");
    if (e < 1) throw FieldError("extension degree must be >= 1");
    if (e > 1) modulus_ = find_default_modulus(p, e);
    init(table_bound);
}

FieldSpec::FieldSpec(unsigned p, unsigned e, std::vector<unsigned> modulus,
                     std::uint64_t table_bound)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (!is_prime_u(p)) throw FieldError("field characteristic must be prime");
    if (e < 1) throw FieldError("extension degree must be >= 1");
    if (e == 1) {
        if (!modulus_.empty())
            throw FieldError("prime field takes no modulus");
    } else {
        if (modulus_.size() != e + 1 || modulus_[e] != 1)
            throw FieldError("modulus must be monic of degree e");
        for (unsigned c : modulus_)
            if (c >= p) throw FieldError("modulus coefficient out of range");
        if (!is_irreducible_gfp(p, modulus_))
            throw FieldError("modulus is reducible over GF(p)");
    }
    init(table_bound);
}

void FieldSpec::init(std::uint64_t table_bound) {
    q_ = 1;
    for (unsigned i = 0; i < e_; ++i) {
        if (q_ > (std::uint64_t(1) << 31) / p_)
            throw FieldError("field order exceeds 2^31");
        q_ *= p_;
    }
    if (q_ <= table_bound) {
        mul_table_.resize(q_ * q_);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b <= a; ++b) {
                Elem m = mul_slow(a, b);
                mul_table_[a * q_ + b] = m;
                mul_table_[b * q_ + a] = m;
            }
        inv_table_.assign(q_, 0);
        for (Elem a = 1; a < q_; ++a) {
            if (inv_table_[a]) continue;
            for (Elem b = a; b < q_; ++b) {
                if (mul_table_[a * q_ + b] == 1) {
                    inv_table_[a] = b;
                    inv_table_[b] = a;
                    break;
                }
            }
        }
    }
}

Elem FieldSpec::add_ext(Elem a, Elem b) const {
    Elem r = 0, mul = 1;
    for (unsigned i = 0; i < e_; ++i) {
        unsigned da = a % p_, db = b % p_;
        a /= p_; b /= p_;
        r += ((da + db) % p_) * mul;
        mul *= p_;
    }
    return r;
}

Elem FieldSpec::sub_ext(Elem a, Elem b) const {
    Elem r = 0, mul = 1;
    for (unsigned i = 0; i < e_; ++i) {
        unsigned da = a % p_, db = b % p_;
        a /= p_; b /= p_;
        r += ((da + p_ - db) % p_) * mul;
        mul *= p_;
    }
    return r;
}

Elem FieldSpec::mul_slow(Elem a, Elem b) const {
    if (e_ == 1) return (Elem)(((std::uint64_t)a * b) % p_);
    // schoolbook product of coefficient vectors, then reduction by modulus
    unsigned da[32], db[32];
    unsigned prod[64] = {0};
    Elem t = a;
    for (unsigned i = 0; i < e_; ++i) { da[i] = t % p_; t /= p_; }
    t = b;
    for (unsigned i = 0; i < e_; ++i) { db[i] = t % p_; t /= p_; }
    for (unsigned i = 0; i < e_; ++i) {
        if (!da[i]) continue;
        for (unsigned j = 0; j < e_; ++j)
            prod[i + j] = (unsigned)((prod[i + j] +
                                      (std::uint64_t)da[i] * db[j]) % p_);
    }
    // reduce degree 2e-2 .. e by x^e = -(modulus minus leading term)
    for (int d = 2 * (int)e_ - 2; d >= (int)e_; --d) {
        unsigned c = prod[d];
        if (!c) continue;
        prod[d] = 0;
        for (unsigned j = 0; j < e_; ++j) {
            unsigned sub = (unsigned)(((std::uint64_t)c * modulus_[j]) % p_);
            unsigned idx = d - e_ + j;
            prod[idx] = (prod[idx] + p_ - sub) % p_;
        }
    }
    Elem r = 0, mul = 1;
    for (unsigned i = 0; i < e_; ++i) { r += prod[i] * mul; mul *= p_; }
    return r;
}

Elem FieldSpec::pow(Elem a, std::uint64_t n) const {
    Elem r = 1, base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

std::vector<unsigned> FieldSpec::coeff_vector(Elem a) const {
    std::vector<unsigned> c(e_);
    for (unsigned i = 0; i < e_; ++i) { c[i] = a % p_; a /= p_; }
    return c;
}

Elem FieldSpec::from_coeff_vector(const std::vector<unsigned>& c) const {
    if (c.size() != e_) throw FieldError("coefficient vector length != e");
    Elem r = 0, mul = 1;
    for (unsigned i = 0; i < e_; ++i) {
        if (c[i] >= p_) throw FieldError("coefficient out of range");
        r += c[i] * mul;
        mul *= p_;
    }
    return r;
}

FieldSpec make_field(unsigned p, unsigned e) { return FieldSpec(p, e); }

FieldSpec make_field(unsigned p, unsigned e, std::vector<unsigned> modulus) {
    return FieldSpec(p, e, std::move(modulus));
}

} // namespace fqexcess
