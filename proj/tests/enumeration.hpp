#pragma once

#include <cmath>
#include <functional>

// Exhaustive-enumeration oracle for small innings. Walks every toss
// sequence (scoring shot with probability p, wicket otherwise) until the
// wicket or ball limit, so it certifies the combinatorial formulas by brute
// force. Independent of the library's summation path by construction.
namespace oracle {

struct Moments {
    double total_probability = 0.0;
    double all_out = 0.0;     // E[(r * scoring balls)^k; all out]
    double not_all_out = 0.0; // E[(r * scoring balls)^k; quota exhausted]

    double raw_moment() const { return all_out + not_all_out; }
};

inline Moments enumerate_moments(double p, int max_balls, int max_wickets, double r,
                                 int k) {
    Moments m;
    std::function<void(int, int, int, double)> walk = [&](int balls, int wickets,
                                                          int scoring, double prob) {
        if (wickets == max_wickets) {
            m.total_probability += prob;
            m.all_out += prob * std::pow(r * scoring, k);
            return;
        }
        if (balls == max_balls) {
            m.total_probability += prob;
            m.not_all_out += prob * std::pow(r * scoring, k);
            return;
        }
        walk(balls + 1, wickets, scoring + 1, prob * p);
        walk(balls + 1, wickets + 1, scoring, prob * (1.0 - p));
    };
    walk(0, 0, 0, 1.0);
    return m;
}

} // namespace oracle
