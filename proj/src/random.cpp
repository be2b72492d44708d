#include "oropeak/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "oropeak/errors.hpp"

namespace oropeak {

std::vector<std::size_t> weighted_sample_without_replacement(
    const std::vector<double>& weights, std::size_t k, std::mt19937_64& gen) {
    if (k > weights.size())
        throw input_error("weighted sample: k exceeds population size");
    // Exponential race: item i finishes at time Exp(1)/w_i; the k earliest
    // finishers are exactly a successive weighted sample without replacement.
    std::vector<std::pair<double, std::size_t>> keys;
    keys.reserve(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
        double w = weights[i];
        if (!(w > 0.0))
            throw input_error("weighted sample: weights must be positive");
        double u = uniform01(gen);
        // -log(1-u) in (0, inf); 1-u avoids log(0) since u < 1.
        double key = -std::log1p(-u) / w;
        keys.emplace_back(key, i);
    }
    std::sort(keys.begin(), keys.end());
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(keys[i].second);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oropeak
