#pragma once

#include "mslope/fraction.hpp"

#include <string>
#include <vector>

namespace mslope {

// M(P1/Q1, ..., PN/QN): an ordered list of at least three finite,
// non-integral tangle fractions.
struct MontesinosExpression {
    std::vector<Fraction> tangles;

    size_t size() const { return tangles.size(); }
    Fraction sum() const;
    std::string str() const;              // "1/2,1/3,-2/3"
    bool operator==(const MontesinosExpression& o) const { return tangles == o.tangles; }
};

// Condition 1 classification.
enum class KnotClass {
    KnotOneEvenDenominator,   // exactly one Qi even
    KnotAllOddDenominators,   // all Qi odd, odd number of odd Pi
    Link,
};
const char* to_string(KnotClass c);

enum class RestrictedKind { AllPositive, AllNegative, Mixed };
const char* to_string(RestrictedKind k);

struct RestrictedForm {
    RestrictedKind kind;
    MontesinosExpression expression;
};

// Throws std::invalid_argument with a distinct message for: fewer than three
// tangles, an integral tangle, an infinite tangle.
void validate(const MontesinosExpression& e);

KnotClass is_knot(const MontesinosExpression& e);

// (..., Pi/Qi + dir, P(i+1)/Q(i+1) - dir, ...); dir = +1 or -1.
// Realizes the tangle rotation move; preserves the link type and the sum.
MontesinosExpression tangle_rotation_move(const MontesinosExpression& e, size_t i, int dir);

// Normalization into one of the three restricted cases of the slope bound:
// all entries positive, all negative, or mixed with every |Pi/Qi| < 1.
// Deterministic; reachable from e by tangle rotation moves; idempotent.
RestrictedForm to_restricted_expression(const MontesinosExpression& e);

MontesinosExpression mirror(const MontesinosExpression& e);

}  // namespace mslope
