#include "bruns/model.hpp"

#include <stdexcept>

#include "bruns/errors.hpp"

namespace bruns {

std::string_view to_string(Role role) {
    return role == Role::Batsman ? "batsman" : "bowler";
}

void validate(const InningsSpec& spec) {
    if (spec.max_balls < 1) {
        throw std::invalid_argument("innings spec: max_balls must be positive");
    }
    if (spec.max_wickets < 1) {
        throw std::invalid_argument("innings spec: max_wickets must be positive");
    }
    if (spec.max_wickets > spec.max_balls) {
        throw std::invalid_argument(
            "innings spec: max_wickets must not exceed max_balls");
    }
}

double runs_per_ball(const PlayerRecord& record) {
    // One over is 6 balls, so economy/6 puts bowlers on the same
    // runs-per-ball scale as strike-rate/100 puts batsmen.
    return record.role == Role::Batsman ? record.rate / 100.0 : record.rate / 6.0;
}

double dismissal_probability(const PlayerRecord& record) {
    if (!(record.avg > 0.0)) {
        throw InvalidStats("average must be positive: " + record.name);
    }
    const double q = runs_per_ball(record) / record.avg;
    if (q > 1.0) {
        // More runs per ball than per dismissal; no coin model fits.
        throw InvalidStats("rate and average imply a dismissal probability above 1: " +
                           record.name);
    }
    return q;
}

double balls_per_wicket(const PlayerRecord& record) {
    return record.avg / runs_per_ball(record);
}

BernoulliParams derive_params(const PlayerRecord& record) {
    return {runs_per_ball(record), dismissal_probability(record)};
}

} // namespace bruns
