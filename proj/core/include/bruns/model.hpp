#pragma once

#include <string>
#include <string_view>

namespace bruns {

enum class Role { Batsman, Bowler };

std::string_view to_string(Role role);

/// Published career figures for one player in one role.
///
/// `rate` is role-dependent: a batsman's strike rate (runs per 100 balls)
/// or a bowler's economy (runs conceded per over of 6 balls). A player who
/// both bats and bowls is represented by two separate records.
struct PlayerRecord {
    std::string name;
    Role role = Role::Batsman;
    double avg = 0.0;  // runs per dismissal
    double rate = 0.0; // strike rate (batsman) or economy (bowler)
};

/// Two-parameter per-ball coin-toss model derived from career figures.
/// Every delivery either scores exactly `runs_per_ball` runs or takes a
/// wicket with probability `dismissal_prob`.
struct BernoulliParams {
    double runs_per_ball = 0.0;  // r, expected runs per scoring ball
    double dismissal_prob = 0.0; // q = 1 - p

    double scoring_prob() const { return 1.0 - dismissal_prob; } // p
};

/// Format limits for one innings. Defaults are the one-day international
/// quota: 300 deliveries, 10 wickets.
struct InningsSpec {
    int max_balls = 300;
    int max_wickets = 10;
};

/// Throws std::invalid_argument unless 1 <= max_wickets <= max_balls.
void validate(const InningsSpec& spec);

/// Expected runs per ball: rate/100 for a batsman, rate/6 for a bowler.
/// Bowlers are normalized into the same parameter space as batsmen so no
/// downstream code branches on role.
double runs_per_ball(const PlayerRecord& record);

/// Per-ball dismissal probability q = runs_per_ball / avg.
/// Throws InvalidStats when avg <= 0 or the computed q exceeds 1; such
/// figures indicate a data-entry error, not a degenerate model.
double dismissal_probability(const PlayerRecord& record);

/// Mean deliveries between dismissals, 1 / dismissal_probability.
/// For a batsman this is 100 * avg / sr.
double balls_per_wicket(const PlayerRecord& record);

/// Bundles runs_per_ball and dismissal_probability into BernoulliParams.
BernoulliParams derive_params(const PlayerRecord& record);

} // namespace bruns
