#include "bruns/analytical.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bruns/compensated.hpp"
#include "bruns/errors.hpp"

namespace bruns {
namespace {

double log_choose(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// a * log_y under the x^0 == 1 convention: zero exponent wins even when
// log_y is -inf, so p = 0 and q = 0 fall out of the general term.
double exponent_term(int a, double log_y) {
    return a == 0 ? 0.0 : a * log_y;
}

void require_moment_order(int k) {
    if (k < 1) {
        throw std::invalid_argument("moment order must be >= 1, got " + std::to_string(k));
    }
}

} // namespace

double all_out_term(const BernoulliParams& params, const InningsSpec& spec, int k) {
    validate(spec);
    require_moment_order(k);
    const int max_balls = spec.max_balls;
    const int wickets = spec.max_wickets;
    const double q = params.dismissal_prob;
    if (q == 0.0) {
        return 0.0; // the all-out event has probability zero
    }
    const double log_p = std::log(params.scoring_prob());
    const double log_q = std::log(q);
    CompensatedSum sum;
    // The b = wickets term carries (b - wickets)^k = 0, so start one past it.
    for (int b = wickets + 1; b <= max_balls; ++b) {
        const int scoring_balls = b - wickets;
        const double log_prob = log_choose(b - 1, wickets - 1) +
                                exponent_term(scoring_balls, log_p) + wickets * log_q;
        sum.add(std::pow(static_cast<double>(scoring_balls), k) * std::exp(log_prob));
    }
    return std::pow(params.runs_per_ball, k) * sum.value();
}

double not_all_out_term(const BernoulliParams& params, const InningsSpec& spec, int k) {
    validate(spec);
    require_moment_order(k);
    const int max_balls = spec.max_balls;
    const double log_p = std::log(params.scoring_prob());
    const double log_q = std::log(params.dismissal_prob);
    CompensatedSum sum;
    for (int w = 0; w < spec.max_wickets; ++w) {
        const int scoring_balls = max_balls - w;
        const double log_prob = log_choose(max_balls, w) +
                                exponent_term(scoring_balls, log_p) +
                                exponent_term(w, log_q);
        sum.add(std::pow(static_cast<double>(scoring_balls), k) * std::exp(log_prob));
    }
    return std::pow(params.runs_per_ball, k) * sum.value();
}

double raw_moment(const BernoulliParams& params, const InningsSpec& spec, int k) {
    return all_out_term(params, spec, k) + not_all_out_term(params, spec, k);
}

MomentSummary summary_from_raw_moments(double m1, double m2) {
    const double variance = m2 - m1 * m1;
    // E(Y^2) - E(Y)^2 is nonnegative in exact arithmetic; a small negative
    // residue is floating-point cancellation, a large one is a bug upstream.
    const double guard = 1e-6 * m1 * m1;
    if (variance < -guard) {
        throw NumericalInstability("variance " + std::to_string(variance) +
                                   " is negative beyond the cancellation guard");
    }
    MomentSummary summary;
    summary.mean = m1;
    summary.sd = variance > 0.0 ? std::sqrt(variance) : 0.0;
    summary.raw_moments = {m1, m2};
    return summary;
}

MomentSummary moment_summary(const BernoulliParams& params, const InningsSpec& spec) {
    validate(spec);
    if (params.dismissal_prob == 0.0) {
        // Deterministic innings: every ball scores, so the variance is an
        // exact zero rather than whatever cancellation residue the general
        // path leaves behind.
        const double mean = params.runs_per_ball * spec.max_balls;
        MomentSummary summary;
        summary.mean = mean;
        summary.sd = 0.0;
        summary.raw_moments = {mean, mean * mean};
        return summary;
    }
    const double m1 = raw_moment(params, spec, 1);
    const double m2 = raw_moment(params, spec, 2);
    return summary_from_raw_moments(m1, m2);
}

double outcome_probability(const BernoulliParams& params, const InningsSpec& spec,
                           int wickets, int balls_used) {
    validate(spec);
    const int max_balls = spec.max_balls;
    const int max_wickets = spec.max_wickets;
    const double log_p = std::log(params.scoring_prob());
    const double log_q = std::log(params.dismissal_prob);
    if (wickets == max_wickets && balls_used >= max_wickets && balls_used <= max_balls) {
        // All out on ball balls_used: the first W-1 wickets fell somewhere
        // in the previous balls_used-1 deliveries.
        return std::exp(log_choose(balls_used - 1, max_wickets - 1) +
                        exponent_term(balls_used - max_wickets, log_p) +
                        exponent_term(max_wickets, log_q));
    }
    if (wickets >= 0 && wickets < max_wickets && balls_used == max_balls) {
        return std::exp(log_choose(max_balls, wickets) +
                        exponent_term(max_balls - wickets, log_p) +
                        exponent_term(wickets, log_q));
    }
    throw InvalidState("not a terminal innings state: " + std::to_string(wickets) +
                       " wickets after " + std::to_string(balls_used) + " balls");
}

} // namespace bruns
