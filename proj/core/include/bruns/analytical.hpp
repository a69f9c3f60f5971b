#pragma once

#include <vector>

#include "bruns/model.hpp"

namespace bruns {

/// Distribution summary of the total runs Y scored by a team of eleven
/// identical players in one innings.
struct MomentSummary {
    double mean = 0.0; // E(Y)
    double sd = 0.0;   // sigma_Y
    std::vector<double> raw_moments; // raw_moments[k-1] = E(Y^k)
};

/// Contribution of the all-out innings endings to the k-th raw moment:
///
///   r^k * sum_{b=W}^{B} (b-W)^k * C(b-1, W-1) * p^(b-W) * q^W
///
/// partitioned on the ball b the last wicket fell. Terms are evaluated in
/// log space (log-gamma binomials) and accumulated with compensated
/// summation so the result stays stable for any finite B, W.
double all_out_term(const BernoulliParams& params, const InningsSpec& spec, int k);

/// Contribution of innings that exhaust the ball quota with w < W wickets:
///
///   r^k * sum_{w=0}^{W-1} (B-w)^k * C(B, w) * p^(B-w) * q^w
double not_all_out_term(const BernoulliParams& params, const InningsSpec& spec, int k);

/// k-th raw moment E(Y^k): all_out_term + not_all_out_term. Requires k >= 1.
double raw_moment(const BernoulliParams& params, const InningsSpec& spec, int k);

/// Assembles mean and sd from the first two raw moments.
/// A variance in [-1e-6 * mean^2, 0) clamps to sd = 0; anything more
/// negative throws NumericalInstability.
MomentSummary summary_from_raw_moments(double m1, double m2);

/// Mean, sd, and raw moments k = 1, 2 for one innings.
MomentSummary moment_summary(const BernoulliParams& params, const InningsSpec& spec);

/// Probability of a terminal innings state. Legal shapes:
///   - all out: wickets == W and W <= balls_used <= B
///   - quota exhausted: 0 <= wickets < W and balls_used == B
/// Throws InvalidState otherwise. The probabilities over all legal states
/// sum to 1.
double outcome_probability(const BernoulliParams& params, const InningsSpec& spec,
                           int wickets, int balls_used);

} // namespace bruns
