#include "mslope/montesinos.hpp"

namespace mslope {

Fraction MontesinosExpression::sum() const {
    Fraction s(0);
    for (const auto& f : tangles) s = s + f;
    return s;
}

std::string MontesinosExpression::str() const {
    std::string out;
    for (size_t i = 0; i < tangles.size(); ++i) {
        if (i) out += ",";
        out += tangles[i].str();
    }
    return out;
}

const char* to_string(KnotClass c) {
    switch (c) {
        case KnotClass::KnotOneEvenDenominator: return "knot_one_even_denominator";
        case KnotClass::KnotAllOddDenominators: return "knot_all_odd_denominators";
        case KnotClass::Link: return "link";
    }
    return "?";
}

const char* to_string(RestrictedKind k) {
    switch (k) {
        case RestrictedKind::AllPositive: return "all_positive";
        case RestrictedKind::AllNegative: return "all_negative";
        case RestrictedKind::Mixed: return "mixed";
    }
    return "?";
}

void validate(const MontesinosExpression& e) {
    if (e.tangles.size() < 3)
        throw std::invalid_argument("montesinos expression needs at least 3 tangles, got " +
                                    std::to_string(e.tangles.size()));
    for (size_t i = 0; i < e.tangles.size(); ++i) {
        if (e.tangles[i].is_infinity())
            throw std::invalid_argument("tangle " + std::to_string(i + 1) + " is infinite (1/0)");
        if (e.tangles[i].is_integer())
            throw std::invalid_argument("tangle " + std::to_string(i + 1) + " is integral (" +
                                        e.tangles[i].str() + ")");
    }
}

KnotClass is_knot(const MontesinosExpression& e) {
    validate(e);
    int even_den = 0, odd_num = 0;
    for (const auto& f : e.tangles) {
        if (f.den() % 2 == 0) ++even_den;
        else if (f.num() % 2 != 0) ++odd_num;
    }
    if (even_den == 1) return KnotClass::KnotOneEvenDenominator;
    if (even_den == 0 && odd_num % 2 == 1) return KnotClass::KnotAllOddDenominators;
    return KnotClass::Link;
}

MontesinosExpression tangle_rotation_move(const MontesinosExpression& e, size_t i, int dir) {
    validate(e);
    if (dir != 1 && dir != -1)
        throw std::invalid_argument("tangle_rotation_move: direction must be +1 or -1");
    if (i + 1 >= e.tangles.size())
        throw std::invalid_argument("tangle_rotation_move: index out of range");
    MontesinosExpression out = e;
    out.tangles[i] = out.tangles[i] + Fraction(dir);
    out.tangles[i + 1] = out.tangles[i + 1] - Fraction(dir);
    // +-1 shifts keep the fractional parts, so integrality cannot appear,
    // but keep the guard for robustness of the public API.
    if (out.tangles[i].is_integer() || out.tangles[i + 1].is_integer())
        throw std::invalid_argument("tangle_rotation_move: move would create an integral tangle");
    return out;
}

// Every tangle is split as Pi/Qi = zi + fi with fi in (0,1); the integer
// surplus e = sum(zi) decides the case.  Surplus always lands in the last
// tangle, which makes the output deterministic.
RestrictedForm to_restricted_expression(const MontesinosExpression& e) {
    validate(e);
    const size_t n = e.tangles.size();
    i64 surplus = 0;
    std::vector<Fraction> f(n);
    for (size_t i = 0; i < n; ++i) {
        surplus += e.tangles[i].floor();
        f[i] = e.tangles[i].frac_part();
    }
    MontesinosExpression out;
    out.tangles = f;
    RestrictedKind kind;
    if (surplus >= 0) {
        out.tangles[n - 1] = out.tangles[n - 1] + Fraction(surplus);
        kind = RestrictedKind::AllPositive;
    } else if (surplus > -static_cast<i64>(n)) {
        for (size_t i = n - static_cast<size_t>(-surplus); i < n; ++i)
            out.tangles[i] = out.tangles[i] - Fraction(1);
        kind = RestrictedKind::Mixed;
    } else {
        for (size_t i = 0; i < n; ++i)
            out.tangles[i] = out.tangles[i] - Fraction(1);
        out.tangles[n - 1] = out.tangles[n - 1] + Fraction(surplus + static_cast<i64>(n));
        kind = RestrictedKind::AllNegative;
    }
    return RestrictedForm{kind, out};
}

MontesinosExpression mirror(const MontesinosExpression& e) {
    MontesinosExpression out = e;
    for (auto& f : out.tangles) f = -f;
    return out;
}

}  // namespace mslope
