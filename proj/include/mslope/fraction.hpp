#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mslope {

using i64 = long long;

// Exact rational p/q with gcd(|p|, q) = 1 and q >= 1.  The slope 1/0 gets a
// dedicated representation (den == 0); it only ever names the vertex <1/0> of
// the diagram D and is rejected by all arithmetic.
class Fraction {
public:
    Fraction() : num_(0), den_(1) {}
    Fraction(i64 n) : num_(n), den_(1) {}
    Fraction(i64 n, i64 d);               // reduces, normalizes sign; throws on d == 0

    static Fraction infinity();

    i64 num() const { return num_; }
    i64 den() const { return den_; }
    bool is_infinity() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // floor(p/q) with the usual rounding toward -infinity
    i64 floor() const;
    Fraction frac_part() const;           // this - floor(this), in [0, 1)

    Fraction operator-() const;
    Fraction operator+(const Fraction& o) const;
    Fraction operator-(const Fraction& o) const;
    Fraction operator*(const Fraction& o) const;
    Fraction operator/(const Fraction& o) const;
    Fraction reciprocal() const;

    bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }
    bool operator<(const Fraction& o) const;
    bool operator<=(const Fraction& o) const { return *this < o || *this == o; }
    bool operator>(const Fraction& o) const { return o < *this; }
    bool operator>=(const Fraction& o) const { return o <= *this; }

    int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

    std::string str() const;              // "P/Q", integers as "P", infinity as "1/0"

private:
    i64 num_;
    i64 den_;
    struct raw_tag {};
    Fraction(i64 n, i64 d, raw_tag) : num_(n), den_(d) {}
};

// "P/Q" or "P"; optional leading '-'.  Denominator 0 yields the infinity
// value so that expression validation can report it as an infinite tangle.
Fraction make_fraction(i64 num, i64 den);
Fraction parse_fraction(const std::string& text);

// Continued fraction [a1, ..., ak] in the standard form used throughout:
// value a1 + 1/(a2 + 1/(... + 1/ak)).  Positive fractions: a1 >= 0,
// middle terms >= 1, last term >= 2.  Negative: all terms negated.
// Integers z get the length-1 expansion [z].
struct ContinuedFraction {
    std::vector<i64> terms;

    bool operator==(const ContinuedFraction& o) const { return terms == o.terms; }
    std::string str() const;              // "[0,3,3]"
};

ContinuedFraction standard_continued_fraction(const Fraction& f);
Fraction evaluate_continued_fraction(const ContinuedFraction& cf);
bool is_standard_form(const ContinuedFraction& cf);

// The two Farey neighbours r/s of p/q with s < q (|ps - qr| = 1), returned
// as (smaller, larger); p/q is their mediant.  Requires q >= 2.
std::pair<Fraction, Fraction> farey_parents(const Fraction& f);

// |ps - qr| == 1, treating 1/0 as p=1, q=0 (so <1/0> is adjacent to exactly
// the integer vertices).
bool farey_adjacent(const Fraction& a, const Fraction& b);

}  // namespace mslope
