#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fpsel/rng.hpp"

namespace fpsel {

// Fixed-length bit vector packed into 64-bit words. Position i of the usual
// 1-based string notation maps to index i-1 here; from_string("110") gives
// bit 0 = 1, bit 1 = 1, bit 2 = 0.
class BitString {
public:
    BitString() = default;

    explicit BitString(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitString random(std::size_t n, Xoshiro256StarStar& rng);
    static BitString from_string(const std::string& s);
    static BitString all_ones(std::size_t n);

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1ULL;
    }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = 1ULL << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }

    void flip_all();

    std::size_t count_ones() const;
    std::size_t count_zeros() const { return n_ - count_ones(); }

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Number of positions where x and y differ. Throws std::invalid_argument on
// length mismatch.
std::size_t hamming(const BitString& x, const BitString& y);

// Ordered vector of lambda equal-length bitstrings. Member order is part of
// the state: selection indices refer to it.
class Population {
public:
    Population() = default;
    Population(std::size_t n, std::size_t lambda)
        : n_(n), members_(lambda, BitString(n)) {}

    // Every bit of every member i.i.d. fair.
    static Population random(std::size_t n, std::size_t lambda, Xoshiro256StarStar& rng);

    std::size_t dimension() const { return n_; }
    std::size_t size() const { return members_.size(); }

    BitString& operator[](std::size_t i) { return members_[i]; }
    const BitString& operator[](std::size_t i) const { return members_[i]; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }
    auto begin() { return members_.begin(); }
    auto end() { return members_.end(); }

private:
    std::size_t n_ = 0;
    std::vector<BitString> members_;
};

}  // namespace fpsel
