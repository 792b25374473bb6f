#include "fpsel/fitness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fpsel {

namespace {

constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

bool is_integral_value(double v) { return v == std::floor(v); }

void validate_positive_weights(const std::vector<double>& weights) {
    if (weights.empty()) {
        throw std::invalid_argument("weights: at least one weight required");
    }
    for (const double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("weights: all weights must be positive and finite");
        }
    }
}

}  // namespace

LevelPartition::LevelPartition(const std::vector<double>& descending_weights) {
    thresholds_.reserve(descending_weights.size() + 1);
    thresholds_.push_back(0.0);
    double sum = 0.0;
    for (const double w : descending_weights) {
        sum += w;
        thresholds_.push_back(sum);
    }
}

std::size_t LevelPartition::level_of(double fitness) const {
    auto it = std::upper_bound(thresholds_.begin(), thresholds_.end(), fitness);
    return static_cast<std::size_t>(it - thresholds_.begin()) - 1;
}

LinearSpec::LinearSpec(std::vector<double> weights) : weights_(std::move(weights)) {
    validate_positive_weights(weights_);
    std::sort(weights_.begin(), weights_.end(), std::greater<>());
    for (const double w : weights_) {
        integral_ = integral_ && is_integral_value(w);
        unit_ = unit_ && (w == 1.0);
        optimum_ += w;
    }
    if (integral_ && optimum_ > kMaxExactInteger) {
        throw std::invalid_argument("weights: total weight exceeds exact integer range");
    }
    levels_ = LevelPartition(weights_);
}

LinearSpec LinearSpec::one_max(std::size_t n) {
    return LinearSpec(std::vector<double>(n, 1.0));
}

double LinearSpec::evaluate(const BitString& x) const {
    if (x.size() != weights_.size()) {
        throw std::invalid_argument("evaluate: bitstring length does not match spec dimension");
    }
    if (unit_) {
        return static_cast<double>(x.count_ones());
    }
    double sum = 0.0;
    const auto& words = x.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
        std::uint64_t bits = words[w];
        const std::size_t base = w << 6;
        while (bits != 0) {
            const int k = std::countr_zero(bits);
            sum += weights_[base + static_cast<std::size_t>(k)];
            bits &= bits - 1;
        }
    }
    return sum;
}

DecompSpec::DecompSpec(std::size_t n, std::vector<DecompBlock> blocks,
                       std::vector<double> weights)
    : n_(n), blocks_(std::move(blocks)), weights_(std::move(weights)) {
    if (n_ == 0) throw std::invalid_argument("decomp: dimension must be positive");
    if (blocks_.empty()) throw std::invalid_argument("decomp: at least one block required");
    if (weights_.size() != blocks_.size()) {
        throw std::invalid_argument("decomp: one weight per block required");
    }
    validate_positive_weights(weights_);

    std::vector<bool> covered(n_, false);
    for (const auto& block : blocks_) {
        if (block.positions.empty() || block.positions.size() > kMaxBlockBits) {
            throw std::invalid_argument("decomp: block size must be in [1, 20]");
        }
        if (block.table.size() != (std::size_t{1} << block.positions.size())) {
            throw std::invalid_argument("decomp: truth table size must be 2^|block|");
        }
        if (std::none_of(block.table.begin(), block.table.end(),
                         [](std::uint8_t v) { return v != 0; })) {
            throw std::invalid_argument("decomp: block predicate has no satisfying assignment");
        }
        for (const auto pos : block.positions) {
            if (pos >= n_ || covered[pos]) {
                throw std::invalid_argument("decomp: blocks must partition the positions");
            }
            covered[pos] = true;
        }
        max_block_size_ = std::max(max_block_size_, block.positions.size());
    }
    if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) {
        throw std::invalid_argument("decomp: blocks must cover every position");
    }

    // Canonical order: weights descending, blocks permuted alongside.
    std::vector<std::size_t> order(blocks_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return weights_[a] > weights_[b];
    });
    std::vector<DecompBlock> sorted_blocks;
    std::vector<double> sorted_weights;
    sorted_blocks.reserve(blocks_.size());
    sorted_weights.reserve(blocks_.size());
    for (const auto idx : order) {
        sorted_blocks.push_back(std::move(blocks_[idx]));
        sorted_weights.push_back(weights_[idx]);
    }
    blocks_ = std::move(sorted_blocks);
    weights_ = std::move(sorted_weights);

    for (const double w : weights_) {
        integral_ = integral_ && is_integral_value(w);
        optimum_ += w;
    }
    if (integral_ && optimum_ > kMaxExactInteger) {
        throw std::invalid_argument("decomp: total weight exceeds exact integer range");
    }
    levels_ = LevelPartition(weights_);
}

DecompSpec DecompSpec::royal_road(std::size_t n, std::size_t r) {
    return royal_road(n, r, std::vector<double>(r == 0 ? 0 : n / r, 1.0));
}

DecompSpec DecompSpec::royal_road(std::size_t n, std::size_t r, std::vector<double> weights) {
    if (r == 0 || n == 0 || n % r != 0) {
        throw std::invalid_argument("royal_road: block length must divide the dimension");
    }
    const std::size_t num_blocks = n / r;
    if (weights.size() != num_blocks) {
        throw std::invalid_argument("royal_road: one weight per block required");
    }
    std::vector<DecompBlock> blocks(num_blocks);
    for (std::size_t b = 0; b < num_blocks; ++b) {
        blocks[b].positions.resize(r);
        for (std::size_t k = 0; k < r; ++k) {
            blocks[b].positions[k] = static_cast<std::uint16_t>(b * r + k);
        }
        blocks[b].table.assign(std::size_t{1} << r, 0);
        blocks[b].table.back() = 1;  // all ones
    }
    return DecompSpec(n, std::move(blocks), std::move(weights));
}

bool DecompSpec::block_satisfied(std::size_t block_index, const BitString& x) const {
    const auto& block = blocks_[block_index];
    std::size_t idx = 0;
    for (std::size_t k = 0; k < block.positions.size(); ++k) {
        idx |= static_cast<std::size_t>(x.get(block.positions[k])) << k;
    }
    return block.table[idx] != 0;
}

double DecompSpec::evaluate(const BitString& x) const {
    if (x.size() != n_) {
        throw std::invalid_argument("evaluate: bitstring length does not match spec dimension");
    }
    double sum = 0.0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (block_satisfied(b, x)) sum += weights_[b];
    }
    return sum;
}

double evaluate(const FitnessSpec& spec, const BitString& x) {
    return std::visit([&](const auto& s) { return s.evaluate(x); }, spec);
}

double optimum_value(const FitnessSpec& spec) {
    return std::visit([](const auto& s) { return s.optimum(); }, spec);
}

std::size_t dimension(const FitnessSpec& spec) {
    return std::visit([](const auto& s) { return s.dimension(); }, spec);
}

const LevelPartition& levels(const FitnessSpec& spec) {
    return std::visit([](const auto& s) -> const LevelPartition& { return s.levels(); }, spec);
}

std::size_t level_of(const FitnessSpec& spec, const BitString& x) {
    return levels(spec).level_of(evaluate(spec, x));
}

double max_weight(const FitnessSpec& spec) {
    return std::visit([](const auto& s) { return s.max_weight(); }, spec);
}

bool integer_weights(const FitnessSpec& spec) {
    return std::visit([](const auto& s) { return s.integer_weights(); }, spec);
}

ScaledSpec::ScaledSpec(FitnessSpec inner_spec, double scale_base)
    : inner(std::move(inner_spec)), base(scale_base) {
    if (!(base > 1.0) || !std::isfinite(base)) {
        throw std::invalid_argument("scaled: base must be a finite value > 1");
    }
}

double scaled_log_value(const ScaledSpec& spec, const BitString& x) {
    return evaluate(spec.inner, x) * std::log(spec.base);
}

bool WeightTransform::identity() const {
    for (std::size_t j = 0; j < source_position.size(); ++j) {
        if (source_position[j] != j || flipped[j]) return false;
    }
    return offset == 0.0;
}

BitString WeightTransform::to_canonical(const BitString& original) const {
    BitString y(source_position.size());
    for (std::size_t j = 0; j < source_position.size(); ++j) {
        const bool bit = original.get(source_position[j]);
        y.set(j, flipped[j] ? !bit : bit);
    }
    return y;
}

BitString WeightTransform::to_original(const BitString& canonical) const {
    BitString x(source_position.size());
    for (std::size_t j = 0; j < source_position.size(); ++j) {
        const bool bit = canonical.get(j);
        x.set(source_position[j], flipped[j] ? !bit : bit);
    }
    return x;
}

CanonicalLinear canonicalize_weights(const std::vector<double>& raw_weights) {
    if (raw_weights.empty()) {
        throw std::invalid_argument("weights: at least one weight required");
    }
    for (const double w : raw_weights) {
        if (w == 0.0 || !std::isfinite(w)) {
            throw std::invalid_argument("weights: zero or non-finite weight not allowed");
        }
    }
    const std::size_t n = raw_weights.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(raw_weights[a]) > std::abs(raw_weights[b]);
    });

    WeightTransform transform;
    transform.source_position.resize(n);
    transform.flipped.resize(n);
    std::vector<double> weights(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        const double w = raw_weights[src];
        weights[j] = std::abs(w);
        transform.source_position[j] = src;
        transform.flipped[j] = w < 0.0;
        if (w < 0.0) transform.offset += w;
    }
    return CanonicalLinear{LinearSpec(std::move(weights)), std::move(transform)};
}

}  // namespace fpsel
