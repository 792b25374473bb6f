#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "fpsel/bits.hpp"

namespace fpsel {

// Fitness-interval levels derived from descending weights: threshold t_j is
// the sum of the j largest weights, level j is the interval [t_j, t_{j+1}),
// and the top level is exactly the optimum value. Any two strings in
// consecutive levels are strictly ordered by fitness.
class LevelPartition {
public:
    LevelPartition() = default;
    explicit LevelPartition(const std::vector<double>& descending_weights);

    std::size_t level_count() const { return thresholds_.size(); }  // m
    double threshold(std::size_t j) const { return thresholds_[j]; }
    const std::vector<double>& thresholds() const { return thresholds_; }

    // Unique j with t_j <= fitness < t_{j+1}; the top level m-1 iff
    // fitness equals the optimum.
    std::size_t level_of(double fitness) const;

private:
    std::vector<double> thresholds_;  // t_0 = 0 < t_1 < ... < t_{m-1} = f*
};

// Weighted sum of bits with positive weights stored in descending order.
// Weight j applies to position j (0-based). OneMax is the all-unit case.
class LinearSpec {
public:
    explicit LinearSpec(std::vector<double> weights);
    static LinearSpec one_max(std::size_t n);

    std::size_t dimension() const { return weights_.size(); }
    const std::vector<double>& weights() const { return weights_; }
    double max_weight() const { return weights_.front(); }  // a_1
    bool integer_weights() const { return integral_; }
    bool unit_weights() const { return unit_; }

    double evaluate(const BitString& x) const;
    double optimum() const { return optimum_; }
    const LevelPartition& levels() const { return levels_; }

private:
    std::vector<double> weights_;
    double optimum_ = 0.0;
    bool integral_ = true;
    bool unit_ = true;
    LevelPartition levels_;
};

// One block of a separable decomposed function: a set of positions plus a
// truth table over them. table[idx] != 0 marks a satisfying assignment, where
// bit k of idx is the value at positions[k].
struct DecompBlock {
    std::vector<std::uint16_t> positions;
    std::vector<std::uint8_t> table;
};

// Weighted sum of Boolean block predicates over disjoint position sets that
// cover the whole string. Weights are positive, sorted descending, with the
// blocks permuted alongside. Royal Road is the special case of contiguous
// equal-length blocks whose predicate is "all ones".
class DecompSpec {
public:
    static constexpr std::size_t kMaxBlockBits = 20;

    DecompSpec(std::size_t n, std::vector<DecompBlock> blocks, std::vector<double> weights);

    static DecompSpec royal_road(std::size_t n, std::size_t r);
    static DecompSpec royal_road(std::size_t n, std::size_t r, std::vector<double> weights);

    std::size_t dimension() const { return n_; }
    std::size_t block_count() const { return blocks_.size(); }  // N
    std::size_t max_block_size() const { return max_block_size_; }  // r
    const std::vector<DecompBlock>& blocks() const { return blocks_; }
    const std::vector<double>& weights() const { return weights_; }
    double max_weight() const { return weights_.front(); }
    bool integer_weights() const { return integral_; }

    double evaluate(const BitString& x) const;
    bool block_satisfied(std::size_t block_index, const BitString& x) const;
    double optimum() const { return optimum_; }
    const LevelPartition& levels() const { return levels_; }

private:
    std::size_t n_ = 0;
    std::vector<DecompBlock> blocks_;
    std::vector<double> weights_;
    double optimum_ = 0.0;
    bool integral_ = true;
    std::size_t max_block_size_ = 0;
    LevelPartition levels_;
};

using FitnessSpec = std::variant<LinearSpec, DecompSpec>;

double evaluate(const FitnessSpec& spec, const BitString& x);
double optimum_value(const FitnessSpec& spec);
std::size_t dimension(const FitnessSpec& spec);
const LevelPartition& levels(const FitnessSpec& spec);
std::size_t level_of(const FitnessSpec& spec, const BitString& x);
double max_weight(const FitnessSpec& spec);
bool integer_weights(const FitnessSpec& spec);

// Exponentially scaled view of a base spec: selection sees base^f(x). The
// raw power is never formed; all consumers work with log values.
struct ScaledSpec {
    FitnessSpec inner;
    double base;  // > 1

    ScaledSpec(FitnessSpec inner_spec, double scale_base);
};

// log of base^{f(x)}, i.e. f(x) * ln(base).
double scaled_log_value(const ScaledSpec& spec, const BitString& x);

// Maps user coordinates to the canonical positive descending-weight form.
// Canonical position j reads original position source_position[j], inverted
// when flipped[j]; fitness satisfies
//   original(x) = canonical(to_canonical(x)) + offset.
struct WeightTransform {
    std::vector<std::size_t> source_position;
    std::vector<bool> flipped;
    double offset = 0.0;

    bool identity() const;
    BitString to_canonical(const BitString& original) const;
    BitString to_original(const BitString& canonical) const;
};

struct CanonicalLinear {
    LinearSpec spec;
    WeightTransform transform;
};

// Accepts nonzero weights of any sign and order; rejects zeros. Negative
// weights become positive with the affected position marked for inversion.
CanonicalLinear canonicalize_weights(const std::vector<double>& raw_weights);

}  // namespace fpsel
