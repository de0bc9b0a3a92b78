#include <doctest.h>

#include <cmath>
#include <vector>

#include "polymerlab/rng.hpp"
#include "polymerlab/signed_log.hpp"

using polymerlab::SignedLog;
using polymerlab::SignedLogSum;

namespace {
double roundtrip(const SignedLog& v) { return v.value(); }
}

TEST_CASE("construction and basic algebra") {
    CHECK(SignedLog::zero().is_zero());
    CHECK(SignedLog::from_value(0.0).is_zero());
    CHECK(SignedLog::from_value(-3.5).sign == -1);
    CHECK(roundtrip(SignedLog::from_value(2.0) * SignedLog::from_value(-3.0)) ==
          doctest::Approx(-6.0));
    CHECK(roundtrip(SignedLog::from_value(2.0) + SignedLog::from_value(3.0)) ==
          doctest::Approx(5.0));
    CHECK(roundtrip(SignedLog::from_value(2.0) + SignedLog::from_value(-3.0)) ==
          doctest::Approx(-1.0));
    CHECK(roundtrip(SignedLog::from_value(-2.0) - SignedLog::from_value(-2.5)) ==
          doctest::Approx(0.5));
}

TEST_CASE("exactly opposite terms cancel to zero") {
    SignedLog a = SignedLog::from_value(7.25);
    CHECK((a + a.negated()).is_zero());
    CHECK((a - a).is_zero());
}

TEST_CASE("zero is the additive identity and annihilates products") {
    SignedLog a = SignedLog::from_value(-1.75);
    CHECK(roundtrip(a + SignedLog::zero()) == doctest::Approx(-1.75));
    CHECK((a * SignedLog::zero()).is_zero());
}

TEST_CASE("magnitudes far beyond double range survive") {
    SignedLog big{1, 5000.0};  // e^5000
    SignedLog sum = big + big;
    CHECK(sum.sign == 1);
    CHECK(sum.logmag == doctest::Approx(5000.0 + std::log(2.0)));
    SignedLog prod = big * big;
    CHECK(prod.logmag == doctest::Approx(10000.0));
}

TEST_CASE("addition is commutative and associative to tolerance") {
    polymerlab::rng::Stream s(0xabcdef);
    for (int trial = 0; trial < 2000; ++trial) {
        auto draw = [&]() {
            double mag = 40.0 * (s.next_unit() - 0.5);
            int sign = s.next_unit() < 0.5 ? -1 : 1;
            return SignedLog::from_log(sign, mag);
        };
        SignedLog a = draw(), b = draw(), c = draw();
        SignedLog ab = a + b, ba = b + a;
        CHECK(ab.sign == ba.sign);
        if (ab.sign != 0) CHECK(ab.logmag == doctest::Approx(ba.logmag).epsilon(1e-12));
        SignedLog left = (a + b) + c, right = a + (b + c);
        CHECK(left.sign == right.sign);
        if (left.sign != 0 && std::fabs(left.logmag) < 35)
            CHECK(left.logmag == doctest::Approx(right.logmag).epsilon(1e-9));
    }
}

TEST_CASE("accumulator flags heavy cancellation instead of lying") {
    SignedLogSum sum;
    sum.add(SignedLog::from_log(1, 10.0));
    sum.add(SignedLog::from_log(-1, 10.0));
    CHECK(sum.total().is_zero());
    CHECK(sum.precision_warning());

    SignedLogSum ok;
    ok.add(SignedLog::from_log(1, 10.0));
    ok.add(SignedLog::from_log(1, 9.0));
    CHECK(!ok.precision_warning());
}
