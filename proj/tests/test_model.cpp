#include "doctest.h"

#include <cmath>

#include "bruns/errors.hpp"
#include "bruns/model.hpp"
#include "bruns/rng.hpp"

using namespace bruns;

namespace {
const PlayerRecord kRichards{"Viv Richards", Role::Batsman, 47.00, 90.20};
const PlayerRecord kAmbrose{"Curtly Ambrose", Role::Bowler, 24.12, 3.48};
} // namespace

TEST_CASE("runs per ball normalizes both roles onto the same scale") {
    CHECK(runs_per_ball(kRichards) == doctest::Approx(0.9020).epsilon(1e-12));
    CHECK(runs_per_ball(kAmbrose) == doctest::Approx(0.58).epsilon(1e-12));
    // zero rate is outside the record invariant but the arithmetic is defined
    CHECK(runs_per_ball({"x", Role::Batsman, 50.0, 0.0}) == 0.0);
}

TEST_CASE("dismissal probability is r over avg") {
    CHECK(dismissal_probability(kRichards) ==
          doctest::Approx(0.9020 / 47.00).epsilon(1e-15));
    CHECK(dismissal_probability(kRichards) == doctest::Approx(0.019191).epsilon(1e-4));
    CHECK(dismissal_probability(kAmbrose) ==
          doctest::Approx((3.48 / 6.0) / 24.12).epsilon(1e-15));
    CHECK(dismissal_probability(kAmbrose) == doctest::Approx(0.024046).epsilon(1e-4));
}

TEST_CASE("dismissal probability boundary and rejection") {
    // avg == r: dismissed on average after every scoring ball; q = 1 accepted
    CHECK(dismissal_probability({"edge", Role::Batsman, 0.902, 90.2}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(dismissal_probability({"bad", Role::Batsman, 0.5, 90.2}),
                    InvalidStats);
    CHECK_THROWS_AS(dismissal_probability({"bad", Role::Batsman, 0.0, 90.2}),
                    InvalidStats);
    CHECK_THROWS_AS(dismissal_probability({"bad", Role::Batsman, -3.0, 90.2}),
                    InvalidStats);
}

TEST_CASE("balls per wicket") {
    CHECK(balls_per_wicket(kRichards) == doctest::Approx(52.106).epsilon(1e-4));
    CHECK(balls_per_wicket({"even", Role::Batsman, 50.0, 100.0}) == 50.0);
    CHECK(balls_per_wicket(kAmbrose) == doctest::Approx(41.5862).epsilon(1e-4));
}

TEST_CASE("model identities hold across random records") {
    SplitMix64 rng(9001);
    int accepted = 0;
    for (int i = 0; i < 500; ++i) {
        const double avg = 1.0 + rng.next_double() * 99.0;
        const double rate = 0.5 + rng.next_double() * 149.5;
        const Role role = (rng.next() & 1) != 0 ? Role::Batsman : Role::Bowler;
        const PlayerRecord record{"p", role, avg, rate};
        double q = 0.0;
        try {
            q = dismissal_probability(record);
        } catch (const InvalidStats&) {
            CHECK(runs_per_ball(record) / avg > 1.0);
            continue;
        }
        ++accepted;
        CHECK(q * balls_per_wicket(record) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(q > 0.0);
        CHECK(q <= 1.0);
        if (role == Role::Batsman) {
            CHECK(runs_per_ball(record) * balls_per_wicket(record) ==
                  doctest::Approx(avg).epsilon(1e-12));
        }
        const BernoulliParams params = derive_params(record);
        CHECK(params.dismissal_prob + params.scoring_prob() == 1.0);
    }
    CHECK(accepted > 100);
}

TEST_CASE("innings spec validation") {
    CHECK_NOTHROW(validate(InningsSpec{}));
    CHECK_NOTHROW(validate(InningsSpec{1, 1}));
    CHECK_THROWS_AS(validate(InningsSpec{0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate(InningsSpec{300, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate(InningsSpec{5, 6}), std::invalid_argument);
}
