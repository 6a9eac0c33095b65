#include "dscode/weighted.hpp"

#include <stdexcept>

namespace dscode {

WeightedWord WeightedWord::hard(const Word& received) {
    WeightedWord w;
    w.values = received;
    w.weights.assign(received.size(), Rat(0));
    return w;
}

void WeightedWord::validate() const {
    if (values.size() != weights.size()) {
        throw std::invalid_argument("WeightedWord: values/weights size mismatch");
    }
    for (const Rat& u : weights) {
        if (u < 0 || u > 1) {
            throw std::invalid_argument("WeightedWord: weight " + rat_str(u) + " outside [0, 1]");
        }
    }
}

Rat weighted_distance(const WeightedWord& w, const std::vector<Fp>& g) {
    if (w.values.size() != g.size()) {
        throw std::invalid_argument("weighted_distance: index sets differ");
    }
    // Delta = sum_agree u/2 + sum_disagree (1 - u/2)
    //       = #disagree + (sum_agree u - sum_disagree u) / 2.
    std::size_t disagreements = 0;
    Rat signed_u(0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool agree = (w.values[i] == g[i]);
        if (!agree) ++disagreements;
        if (sgn(w.weights[i]) != 0) {
            if (agree) {
                signed_u += w.weights[i];
            } else {
                signed_u -= w.weights[i];
            }
        }
    }
    Rat d(static_cast<unsigned long>(disagreements));
    d += signed_u / 2;
    return d;
}

Rat half_min_distance(const CodeSpec& spec) {
    return make_rat(static_cast<std::int64_t>(spec.min_distance()), 2);
}

}  // namespace dscode
