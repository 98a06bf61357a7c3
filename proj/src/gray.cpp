#include "cubicode/gray.hpp"

#include <bit>
#include <stdexcept>

namespace cubicode::gray {

BinaryWord& BinaryWord::operator^=(const BinaryWord& o) {
    if (nbits != o.nbits)
        throw std::invalid_argument("BinaryWord: length mismatch");
    for (std::size_t i = 0; i < words.size(); ++i)
        words[i] ^= o.words[i];
    return *this;
}

bool BinaryWord::covers(const BinaryWord& o) const {
    if (nbits != o.nbits)
        throw std::invalid_argument("BinaryWord: length mismatch");
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (o.words[i] & ~words[i])
            return false;
    }
    return true;
}

std::vector<std::uint8_t> BinaryWord::to_bytes() const {
    std::vector<std::uint8_t> out((nbits + 7) / 8, 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = static_cast<std::uint8_t>(words[i / 8] >> (8 * (i % 8)));
    return out;
}

BinaryWord BinaryWord::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
    if (bytes.size() != (nbits + 7) / 8)
        throw std::invalid_argument("BinaryWord: byte count mismatch");
    BinaryWord w(nbits);
    for (std::size_t i = 0; i < bytes.size(); ++i)
        w.words[i / 8] |= std::uint64_t(bytes[i]) << (8 * (i % 8));
    // bits past nbits must stay zero
    if (nbits % 64) {
        w.words.back() &= (std::uint64_t(1) << (nbits % 64)) - 1;
    }
    return w;
}

std::size_t hamming_weight(const BinaryWord& b) {
    std::size_t w = 0;
    for (std::uint64_t x : b.words)
        w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

std::array<int, 3> gray_symbol(const RingElement& a) {
    if (a.a1 > 1 || a.a2 > 1 || a.a3 > 1)
        throw std::domain_error("gray_symbol: coefficients must lie in {0,1}");
    return {static_cast<int>(a.a1), static_cast<int>(a.a2), static_cast<int>(a.a3)};
}

BinaryWord gray_word(std::span<const RingElement> w) {
    const std::size_t n = w.size();
    BinaryWord out(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto [b1, b2, b3] = gray_symbol(w[i]);
        if (b1)
            out.set(i, true);
        if (b2)
            out.set(n + i, true);
        if (b3)
            out.set(2 * n + i, true);
    }
    return out;
}

std::size_t lee_weight(const RingElement& a) {
    const auto [b1, b2, b3] = gray_symbol(a);
    return static_cast<std::size_t>(b1 + b2 + b3);
}

std::size_t lee_weight(std::span<const RingElement> w) {
    std::size_t s = 0;
    for (const RingElement& a : w)
        s += lee_weight(a);
    return s;
}

} // namespace cubicode::gray
