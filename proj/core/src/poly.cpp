#include "fqexcess/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace fqexcess {

namespace {
void trim(std::vector<Elem>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}
} // namespace

Poly::Poly(const FieldSpec& field, std::vector<Elem> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
    for (Elem c : c_)
        if (c >= field.q()) throw PolyError("coefficient index out of range");
    trim(c_);
}

void Poly::check_same_field(const Poly& o) const {
    if (field_ != o.field_ && !field_->same_field(*o.field_))
        throw PolyError("operands belong to different fields");
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(o);
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = field_->add(coeff(i), o.coeff(i));
    trim(r);
    return Poly(*field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    check_same_field(o);
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = field_->sub(coeff(i), o.coeff(i));
    trim(r);
    return Poly(*field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    check_same_field(o);
    if (is_zero() || o.is_zero()) return zero(*field_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
    }
    return Poly(*field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divrem(const Poly& b) const {
    check_same_field(b);
    if (b.is_zero()) throw PolyError("division by zero polynomial");
    if (c_.size() < b.c_.size()) return {zero(*field_), *this};
    Elem lead_inv = field_->inv(b.leading());
    std::vector<Elem> rem = c_;
    std::vector<Elem> quo(c_.size() - b.c_.size() + 1, 0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (i + 1 < b.c_.size()) break;
        Elem c = rem[i];
        if (c != 0) {
            Elem qc = field_->mul(c, lead_inv);
            std::size_t shift = i - (b.c_.size() - 1);
            quo[shift] = qc;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                rem[shift + j] =
                    field_->sub(rem[shift + j], field_->mul(qc, b.c_[j]));
        }
    }
    trim(rem);
    trim(quo);
    return {Poly(*field_, std::move(quo)), Poly(*field_, std::move(rem))};
}

bool Poly::divisible_by(const Poly& b) const { return divrem(b).second.is_zero(); }

Poly Poly::derivative() const {
    if (c_.size() <= 1) return zero(*field_);
    std::vector<Elem> r(c_.size() - 1, 0);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        // coefficient i*c_i with i reduced in the prime field
        Elem mult = (Elem)(i % field_->p());
        Elem m = 0;
        for (Elem k = 0; k < mult; ++k) m = field_->add(m, c_[i]);
        r[i - 1] = m;
    }
    trim(r);
    return Poly(*field_, std::move(r));
}

Poly Poly::make_monic() const {
    if (is_zero() || is_monic()) return *this;
    Elem s = field_->inv(leading());
    std::vector<Elem> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->mul(c_[i], s);
    return Poly(*field_, std::move(r));
}

Elem Poly::eval(Elem a) const {
    Elem r = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = field_->add(field_->mul(r, a), c_[i]);
    return r;
}

std::uint64_t Poly::encode() const {
    std::uint64_t code = 0;
    for (std::size_t i = c_.size(); i-- > 0;) code = code * field_->q() + c_[i];
    return code;
}

Poly Poly::decode(const FieldSpec& f, std::uint64_t code) {
    std::vector<Elem> c;
    while (code) { c.push_back((Elem)(code % f.q())); code /= f.q(); }
    return Poly(f, std::move(c));
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.make_monic();
}

bool is_squarefree(const Poly& f) {
    if (!f.is_monic() || f.degree().value_or(0) < 1)
        throw PolyError("is_squarefree requires monic f of degree >= 1");
    Poly g = gcd(f, f.derivative());
    return g.degree() == 0;
}

unsigned excess(const Factorization& fac) {
    unsigned e = 0;
    for (const auto& [pi, alpha] : fac.factors) e += alpha - 1;
    return e;
}

Poly reconstruct(const FieldSpec& field, const Factorization& fac) {
    Poly r = Poly::constant(field, fac.unit);
    for (const auto& [pi, alpha] : fac.factors)
        for (unsigned i = 0; i < alpha; ++i) r = r * pi;
    return r;
}

// ---- textual format ----

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) out << '+';
        first = false;
        if (i == 0) {
            out << c_[i];
        } else {
            if (c_[i] != 1) out << c_[i] << '*';
            out << 'x';
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

Poly Poly::parse(const FieldSpec& f, const std::string& text) {
    std::vector<Elem> coeffs;
    auto add_term = [&](std::uint64_t c, std::size_t k) {
        c %= f.q();
        if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
        coeffs[k] = f.add(coeffs[k], (Elem)c);
    };
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s.push_back(ch);
    if (s.empty()) throw PolyError("empty polynomial text");
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find('+', pos);
        std::string term = s.substr(pos, next == std::string::npos
                                             ? std::string::npos
                                             : next - pos);
        if (term.empty()) throw PolyError("empty term in polynomial text");
        std::uint64_t c = 1;
        std::size_t k = 0;
        std::size_t i = 0;
        bool saw_coeff = false;
        if (std::isdigit((unsigned char)term[0])) {
            c = 0;
            while (i < term.size() && std::isdigit((unsigned char)term[i]))
                c = c * 10 + (term[i++] - '0');
            saw_coeff = true;
            if (i < term.size() && term[i] == '*') ++i;
        }
        if (i < term.size()) {
            if (term[i] != 'x') throw PolyError("bad term: " + term);
            ++i;
            k = 1;
            if (i < term.size()) {
                if (term[i] != '^') throw PolyError("bad term: " + term);
                ++i;
                if (i >= term.size() || !std::isdigit((unsigned char)term[i]))
                    throw PolyError("bad exponent in term: " + term);
                k = 0;
                while (i < term.size() && std::isdigit((unsigned char)term[i]))
                    k = k * 10 + (term[i++] - '0');
            }
        } else if (!saw_coeff) {
            throw PolyError("bad term: " + term);
        }
        if (i != term.size()) throw PolyError("trailing junk in term: " + term);
        add_term(c, k);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return Poly(f, std::move(coeffs));
}

} // namespace fqexcess
