#include "fpsel/bits.hpp"

#include <bit>
#include <stdexcept>

namespace fpsel {

BitString BitString::random(std::size_t n, Xoshiro256StarStar& rng) {
    BitString x(n);
    for (auto& word : x.words_) word = rng.next();
    const std::size_t tail = n & 63;
    if (tail != 0) x.words_.back() &= (1ULL << tail) - 1;
    return x;
}

BitString BitString::from_string(const std::string& s) {
    BitString x(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            x.set(i, true);
        } else if (s[i] != '0') {
            throw std::invalid_argument("BitString::from_string: expected only '0'/'1'");
        }
    }
    return x;
}

BitString BitString::all_ones(std::size_t n) {
    BitString x(n);
    for (auto& word : x.words_) word = ~0ULL;
    const std::size_t tail = n & 63;
    if (tail != 0) x.words_.back() &= (1ULL << tail) - 1;
    return x;
}

void BitString::flip_all() {
    for (auto& word : words_) word = ~word;
    const std::size_t tail = n_ & 63;
    if (tail != 0) words_.back() &= (1ULL << tail) - 1;
}

std::size_t BitString::count_ones() const {
    std::size_t total = 0;
    for (const auto word : words_) total += std::popcount(word);
    return total;
}

std::string BitString::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

std::size_t hamming(const BitString& x, const BitString& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("hamming: length mismatch");
    }
    std::size_t total = 0;
    const auto& xw = x.words();
    const auto& yw = y.words();
    for (std::size_t w = 0; w < xw.size(); ++w) {
        total += std::popcount(xw[w] ^ yw[w]);
    }
    return total;
}

Population Population::random(std::size_t n, std::size_t lambda, Xoshiro256StarStar& rng) {
    Population p;
    p.n_ = n;
    p.members_.reserve(lambda);
    for (std::size_t i = 0; i < lambda; ++i) {
        p.members_.push_back(BitString::random(n, rng));
    }
    return p;
}

}  // namespace fpsel
