#pragma once

#include "cubicode/ring.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

// The Gray map phi: R -> F_2^3, extended to words, with the Lee weight
// (= Hamming weight of the Gray image).

namespace cubicode::gray {

using ring::RingElement;

struct BinaryWord {
    std::vector<std::uint64_t> words;
    std::size_t nbits = 0;

    BinaryWord() = default;
    explicit BinaryWord(std::size_t nbits_)
        : words((nbits_ + 63) / 64, 0), nbits(nbits_) {}

    bool get(std::size_t i) const {
        return (words[i / 64] >> (i % 64)) & 1u;
    }
    void set(std::size_t i, bool v) {
        if (v)
            words[i / 64] |= std::uint64_t(1) << (i % 64);
        else
            words[i / 64] &= ~(std::uint64_t(1) << (i % 64));
    }

    BinaryWord& operator^=(const BinaryWord& o);
    friend BinaryWord operator^(BinaryWord a, const BinaryWord& b) { return a ^= b; }
    friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

    // support(other) subset of support(this)
    bool covers(const BinaryWord& o) const;

    // little-endian bit packing, bit i of the word = bit i%8 of byte i/8
    std::vector<std::uint8_t> to_bytes() const;
    static BinaryWord from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);
};

std::size_t hamming_weight(const BinaryWord& b);

// phi(a1 + a2 v + a3 v^2) = (a1, a2, a3). Throws std::domain_error if a
// coefficient is outside {0,1} (the map is defined on R, not R_m).
std::array<int, 3> gray_symbol(const RingElement& a);

// Component-block serialization: all a1 bits, then all a2, then all a3.
BinaryWord gray_word(std::span<const RingElement> w);

std::size_t lee_weight(std::span<const RingElement> w);
std::size_t lee_weight(const RingElement& a);

} // namespace cubicode::gray
