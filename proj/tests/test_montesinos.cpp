#include "mslope/montesinos.hpp"

#include <doctest.h>

using namespace mslope;

namespace {
MontesinosExpression expr(std::initializer_list<Fraction> fs) {
    return MontesinosExpression{std::vector<Fraction>(fs)};
}
}  // namespace

TEST_CASE("validation messages are distinct") {
    CHECK_THROWS_WITH_AS(validate(expr({Fraction(1, 2), Fraction(1, 3)})),
                         doctest::Contains("at least 3"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(validate(expr({Fraction(1, 2), Fraction(1, 3), Fraction(2)})),
                         doctest::Contains("integral"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(
        validate(expr({Fraction(1, 2), Fraction(1, 3), Fraction::infinity()})),
        doctest::Contains("infinite"), std::invalid_argument);
    CHECK_NOTHROW(validate(expr({Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)})));
}

TEST_CASE("condition 1") {
    CHECK(is_knot(expr({Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)})) ==
          KnotClass::KnotOneEvenDenominator);
    CHECK(is_knot(expr({Fraction(1, 2), Fraction(1, 2), Fraction(1, 3)})) == KnotClass::Link);
    CHECK(is_knot(expr({Fraction(1, 3), Fraction(1, 5), Fraction(1, 7)})) ==
          KnotClass::KnotAllOddDenominators);
    // two odd numerators out of three: even count, so a link
    CHECK(is_knot(expr({Fraction(1, 3), Fraction(2, 5), Fraction(1, 7)})) == KnotClass::Link);
    CHECK(is_knot(expr({Fraction(1, 3), Fraction(2, 5), Fraction(2, 7)})) ==
          KnotClass::KnotAllOddDenominators);
    CHECK(is_knot(expr({Fraction(-1, 2), Fraction(1, 3), Fraction(1, 7)})) ==
          KnotClass::KnotOneEvenDenominator);
}

TEST_CASE("tangle rotation move") {
    auto e = expr({Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)});
    auto m = tangle_rotation_move(e, 0, +1);
    CHECK(m == expr({Fraction(3, 2), Fraction(-2, 3), Fraction(-2, 3)}));
    CHECK(m.sum() == e.sum());
    CHECK(is_knot(m) == is_knot(e));
    CHECK(tangle_rotation_move(m, 0, -1) == e);
    auto w = tangle_rotation_move(e, 1, -1);
    CHECK(w == expr({Fraction(1, 2), Fraction(-2, 3), Fraction(1, 3)}));
    CHECK(w.sum() == e.sum());
    CHECK(is_knot(w) == is_knot(e));
    CHECK_THROWS_AS(tangle_rotation_move(e, 2, +1), std::invalid_argument);
    CHECK_THROWS_AS(tangle_rotation_move(e, 0, 2), std::invalid_argument);
}

TEST_CASE("rotation preserves the knot class on a grid") {
    for (i64 q1 = 2; q1 <= 5; ++q1)
        for (i64 p1 = 1; p1 < 2 * q1; ++p1) {
            if (p1 % q1 == 0) continue;
            auto e = expr({Fraction(p1, q1), Fraction(1, 3), Fraction(-3, 5)});
            for (size_t i = 0; i < 2; ++i)
                for (int dir : {-1, 1}) {
                    auto m = tangle_rotation_move(e, i, dir);
                    CAPTURE(e.str());
                    CAPTURE(i);
                    CAPTURE(dir);
                    CHECK(is_knot(m) == is_knot(e));
                    CHECK(m.sum() == e.sum());
                }
        }
}

TEST_CASE("restricted form of the worked examples") {
    auto r1 = to_restricted_expression(expr({Fraction(3, 2), Fraction(1, 3), Fraction(1, 3)}));
    CHECK(r1.kind == RestrictedKind::AllPositive);
    CHECK(r1.expression == expr({Fraction(1, 2), Fraction(1, 3), Fraction(4, 3)}));

    auto r2 = to_restricted_expression(
        expr({Fraction(-1, 2), Fraction(-7, 3), Fraction(1, 3)}));
    CHECK(r2.kind == RestrictedKind::AllNegative);
    CHECK(r2.expression == expr({Fraction(-1, 2), Fraction(-1, 3), Fraction(-5, 3)}));

    auto r3 = to_restricted_expression(expr({Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)}));
    CHECK(r3.kind == RestrictedKind::Mixed);
    CHECK(r3.expression == expr({Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)}));

    auto r4 = to_restricted_expression(expr({Fraction(-1, 2), Fraction(1, 3), Fraction(1, 7)}));
    CHECK(r4.kind == RestrictedKind::Mixed);
    CHECK(r4.expression == expr({Fraction(1, 2), Fraction(1, 3), Fraction(-6, 7)}));
}

// Rotation moves change entries by +-1 and preserve the sum, so a target is
// reachable exactly when the positionwise fractional parts and the total sum
// agree.  That is the reachability oracle for the normalization.
TEST_CASE("restricted form invariants on a grid") {
    std::vector<MontesinosExpression> sample;
    for (i64 a = -7; a <= 7; ++a)
        for (i64 b : {-5, -1, 1, 4})
            for (i64 c : {-8, -2, 3, 9}) {
                if (a % 2 == 0 || b % 3 == 0 || c % 5 == 0) continue;
                sample.push_back(expr({Fraction(a, 2), Fraction(b, 3), Fraction(c, 5)}));
            }
    REQUIRE(!sample.empty());
    for (const auto& e : sample) {
        CAPTURE(e.str());
        auto r = to_restricted_expression(e);
        CHECK(r.expression.sum() == e.sum());
        CHECK(is_knot(r.expression) == is_knot(e));
        for (size_t i = 0; i < e.tangles.size(); ++i)
            CHECK(r.expression.tangles[i].frac_part() == e.tangles[i].frac_part());
        auto again = to_restricted_expression(r.expression);
        CHECK(again.expression == r.expression);
        CHECK(again.kind == r.kind);
        bool allpos = true, allneg = true, small = true;
        for (const auto& f : r.expression.tangles) {
            allpos = allpos && f > Fraction(0);
            allneg = allneg && f < Fraction(0);
            small = small && Fraction(-1) < f && f < Fraction(1);
        }
        int cases = (allpos ? 1 : 0) + (allneg ? 1 : 0) +
                    (!allpos && !allneg && small ? 1 : 0);
        CHECK(cases == 1);
        switch (r.kind) {
            case RestrictedKind::AllPositive: CHECK(allpos); break;
            case RestrictedKind::AllNegative: CHECK(allneg); break;
            case RestrictedKind::Mixed: CHECK((!allpos && !allneg && small)); break;
        }
    }
}

TEST_CASE("mirror") {
    auto e = expr({Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)});
    auto m = mirror(e);
    CHECK(m == expr({Fraction(-1, 2), Fraction(-1, 3), Fraction(2, 3)}));
    CHECK(mirror(m) == e);
    CHECK(is_knot(m) == is_knot(e));
}

TEST_CASE("expression text") {
    auto e = expr({Fraction(1, 2), Fraction(1, 3), Fraction(-2, 3)});
    CHECK(e.str() == "1/2,1/3,-2/3");
    CHECK(e.sum() == Fraction(1, 6));
}
