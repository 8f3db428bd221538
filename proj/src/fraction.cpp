#include "mslope/fraction.hpp"

#include <cstdlib>
#include <numeric>

namespace mslope {

Fraction::Fraction(i64 n, i64 d) {
    if (d == 0)
        throw std::invalid_argument("fraction: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    num_ = n;
    den_ = d;
}

Fraction Fraction::infinity() {
    return Fraction(1, 0, raw_tag{});
}

static void require_finite(const Fraction& f, const char* op) {
    if (f.is_infinity())
        throw std::invalid_argument(std::string(op) + ": infinite operand");
}

i64 Fraction::floor() const {
    require_finite(*this, "floor");
    i64 q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

Fraction Fraction::frac_part() const {
    return *this - Fraction(floor());
}

Fraction Fraction::operator-() const {
    if (is_infinity()) return *this;
    return Fraction(-num_, den_, raw_tag{});
}

Fraction Fraction::operator+(const Fraction& o) const {
    require_finite(*this, "add");
    require_finite(o, "add");
    return Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction Fraction::operator-(const Fraction& o) const {
    return *this + (-o);
}

Fraction Fraction::operator*(const Fraction& o) const {
    require_finite(*this, "mul");
    require_finite(o, "mul");
    return Fraction(num_ * o.num_, den_ * o.den_);
}

Fraction Fraction::operator/(const Fraction& o) const {
    return *this * o.reciprocal();
}

Fraction Fraction::reciprocal() const {
    require_finite(*this, "reciprocal");
    if (num_ == 0)
        throw std::invalid_argument("reciprocal: zero");
    return Fraction(den_, num_);
}

bool Fraction::operator<(const Fraction& o) const {
    require_finite(*this, "compare");
    require_finite(o, "compare");
    return num_ * o.den_ < o.num_ * den_;
}

std::string Fraction::str() const {
    if (is_infinity()) return "1/0";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction make_fraction(i64 num, i64 den) {
    if (den == 0)
        throw std::invalid_argument("make_fraction: zero denominator rejected");
    return Fraction(num, den);
}

Fraction parse_fraction(const std::string& text) {
    size_t slash = text.find('/');
    auto parse_int = [&](const std::string& s) -> i64 {
        if (s.empty())
            throw std::invalid_argument("parse_fraction: empty integer in '" + text + "'");
        size_t pos = 0;
        i64 v;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_fraction: bad integer '" + s + "'");
        }
        if (pos != s.size())
            throw std::invalid_argument("parse_fraction: trailing junk in '" + s + "'");
        return v;
    };
    if (slash == std::string::npos)
        return Fraction(parse_int(text));
    i64 num = parse_int(text.substr(0, slash));
    i64 den = parse_int(text.substr(slash + 1));
    if (den == 0)
        return Fraction::infinity();      // caught later as an infinite tangle
    return Fraction(num, den);
}

std::string ContinuedFraction::str() const {
    std::string out = "[";
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(terms[i]);
    }
    return out + "]";
}

// Greedy Euclidean expansion for positive values; negative values are the
// termwise negation (the nested tower negates termwise).
ContinuedFraction standard_continued_fraction(const Fraction& f) {
    if (f.is_infinity())
        throw std::invalid_argument("standard_continued_fraction: infinite fraction");
    if (f.is_integer())
        return ContinuedFraction{{f.num()}};
    bool neg = f < Fraction(0);
    Fraction x = neg ? -f : f;
    std::vector<i64> terms;
    for (;;) {
        i64 a = x.floor();
        terms.push_back(a);
        Fraction r = x - Fraction(a);
        if (r.num() == 0) break;
        x = r.reciprocal();
    }
    if (neg)
        for (auto& t : terms) t = -t;
    return ContinuedFraction{terms};
}

Fraction evaluate_continued_fraction(const ContinuedFraction& cf) {
    if (cf.terms.empty())
        throw std::invalid_argument("evaluate_continued_fraction: empty expansion");
    Fraction v(cf.terms.back());
    for (size_t i = cf.terms.size() - 1; i-- > 0;) {
        if (v.num() == 0)
            throw std::invalid_argument("evaluate_continued_fraction: division by zero tail");
        v = Fraction(cf.terms[i]) + v.reciprocal();
    }
    return v;
}

bool is_standard_form(const ContinuedFraction& cf) {
    const auto& t = cf.terms;
    if (t.empty()) return false;
    if (t.size() == 1) return true;
    bool pos = t.back() > 0;
    if (pos) {
        if (t[0] < 0) return false;
        for (size_t i = 1; i + 1 < t.size(); ++i)
            if (t[i] < 1) return false;
        return t.back() >= 2;
    }
    if (t[0] > 0) return false;
    for (size_t i = 1; i + 1 < t.size(); ++i)
        if (t[i] > -1) return false;
    return t.back() <= -2;
}

std::pair<Fraction, Fraction> farey_parents(const Fraction& f) {
    if (f.is_infinity())
        throw std::invalid_argument("farey_parents: infinite fraction");
    if (f.is_integer())
        throw std::invalid_argument("farey_parents: integer vertex has no parents");
    i64 p = f.num(), q = f.den();
    // extended Euclid: find 0 < s < q with p*s == 1 (mod q)
    i64 s = 0, s1 = 1, r = q, r1 = ((p % q) + q) % q;
    while (r1 != 0) {
        i64 k = r / r1;
        i64 tmp = r - k * r1; r = r1; r1 = tmp;
        tmp = s - k * s1; s = s1; s1 = tmp;
    }
    // r == gcd == 1, and s is the inverse of p mod q (maybe negative)
    s = ((s % q) + q) % q;
    i64 rr = (p * s - 1) / q;
    Fraction small(rr, s);                   // p/q - r/s = 1/(qs) > 0
    Fraction large(p - rr, q - s);
    return {small, large};
}

bool farey_adjacent(const Fraction& a, const Fraction& b) {
    i64 p = a.num(), q = a.den(), r = b.num(), s = b.den();
    i64 d = p * s - q * r;
    return d == 1 || d == -1;
}

}  // namespace mslope
