#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fpsel/bits.hpp"
#include "fpsel/rng.hpp"

namespace fpsel {

// Parent-selection rule. Proportionate and ScaledProportionate are ordered by
// fitness; Uniform and Truncation are baselines.
struct SelectionMode {
    enum class Kind { Proportionate, ScaledProportionate, Uniform, Truncation };

    Kind kind = Kind::Proportionate;
    double scale_base = 0.0;  // c > 1, ScaledProportionate only
    std::size_t mu = 0;       // Truncation only

    static SelectionMode proportionate() { return {Kind::Proportionate, 0.0, 0}; }
    static SelectionMode scaled(double base) { return {Kind::ScaledProportionate, base, 0}; }
    static SelectionMode uniform() { return {Kind::Uniform, 0.0, 0}; }
    static SelectionMode truncation(std::size_t mu) { return {Kind::Truncation, 0.0, mu}; }

    // ScaledProportionate consumes log-fitness values f(x)*ln(base); every
    // other mode consumes raw fitness values.
    bool uses_log_values() const { return kind == Kind::ScaledProportionate; }

    std::string name() const;

    friend bool operator==(const SelectionMode&, const SelectionMode&) = default;
};

// Bitwise mutation parameters: each of the n bits flips independently with
// probability chi/n.
struct MutationParams {
    double chi = 1.0;
    std::size_t n = 1;

    MutationParams(double chi_value, std::size_t length);
    double rate() const { return chi / static_cast<double>(n); }
};

struct SelectionDistribution {
    std::vector<double> p;
    // Proportionate selection over an all-zero-fitness population is
    // undefined; it degrades to uniform and this flag records that.
    bool uniform_fallback = false;
};

// Probability of selecting each member. values[i] is member i's fitness
// (ScaledProportionate: its log-fitness). The vector sums to 1 up to
// rounding. ScaledProportionate works entirely in the log domain via a
// max-shift, so arbitrarily large log values are safe.
SelectionDistribution selection_probabilities(std::span<const double> values,
                                              const SelectionMode& mode);

// Draws against the cumulative distribution with binary search. Build once
// per population, sample many times.
class SelectionSampler {
public:
    explicit SelectionSampler(std::span<const double> probabilities);
    std::size_t sample(Xoshiro256StarStar& rng) const;

private:
    std::vector<double> cumulative_;
};

// One draw from an explicit probability vector.
std::size_t sample_selection(std::span<const double> probabilities, Xoshiro256StarStar& rng);

// Flip each bit of x independently with probability chi/n. The sparse case
// walks geometric gaps between flips, so cost is O(expected flips), and the
// induced flip pattern is exactly i.i.d. Bernoulli per bit.
void bitwise_mutate_into(const BitString& x, const MutationParams& params,
                         Xoshiro256StarStar& rng, BitString& out);
BitString bitwise_mutate(const BitString& x, const MutationParams& params,
                         Xoshiro256StarStar& rng);

// Exact transition probability (chi/n)^H(x,y) * (1-chi/n)^(n-H(x,y)),
// evaluated in the log domain.
double mutation_probability(const BitString& x, const BitString& y,
                            const MutationParams& params);
double mutation_probability_at_distance(std::size_t hamming_distance,
                                        const MutationParams& params);

}  // namespace fpsel
