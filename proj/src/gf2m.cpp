#include "cubicode/gf2m.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace cubicode::gf2m {

namespace {

int degree(std::uint64_t p) {
    return p == 0 ? -1 : 63 - std::countl_zero(p);
}

// carry-less product, no reduction
std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1)
            r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

// remainder of a mod p (polynomial long division)
std::uint64_t clmod(std::uint64_t a, std::uint64_t p) {
    const int dp = degree(p);
    for (int d = degree(a); d >= dp; d = degree(a))
        a ^= p << (d - dp);
    return a;
}

} // namespace

std::uint32_t find_factor(std::uint32_t poly) {
    const int d = degree(poly);
    for (std::uint32_t g = 2; degree(g) <= d / 2; ++g) {
        if (clmod(poly, g) == 0)
            return g;
    }
    return 0;
}

std::uint32_t default_poly(int m) {
    if (m < 1 || m > 16)
        throw std::invalid_argument("default_poly: m must be in [1,16]");
    // least candidate with bit m and bit 0 set (constant term 0 would make
    // the polynomial divisible by x)
    for (std::uint32_t p = (1u << m) | 1u;; p += 2) {
        if (find_factor(p) == 0)
            return p;
    }
}

FieldContext make_field(int m) { return make_field(m, default_poly(m)); }

FieldContext make_field(int m, std::uint32_t poly) {
    if (m < 1 || m > 16)
        throw std::invalid_argument("make_field: m must be in [1,16]");
    if (degree(poly) != m)
        throw std::invalid_argument("make_field: poly must have degree exactly m");
    if (std::uint32_t g = find_factor(poly)) {
        std::ostringstream os;
        os << "make_field: poly 0x" << std::hex << poly
           << " is reducible, divisible by 0x" << g;
        throw std::invalid_argument(os.str());
    }
    return FieldContext{m, poly};
}

Elem mul(const FieldContext& ctx, Elem a, Elem b) {
    return static_cast<Elem>(clmod(clmul(a, b), ctx.poly));
}

Elem pow(const FieldContext& ctx, Elem a, std::uint64_t k) {
    Elem r = 1;
    while (k) {
        if (k & 1)
            r = mul(ctx, r, a);
        a = mul(ctx, a, a);
        k >>= 1;
    }
    return r;
}

Elem inv(const FieldContext& ctx, Elem a) {
    if (a == 0)
        throw std::domain_error("inv: division by zero");
    return pow(ctx, a, ctx.order() - 2);
}

int trace(const FieldContext& ctx, Elem a) {
    Elem s = 0;
    Elem c = a;
    for (int j = 0; j < ctx.m; ++j) {
        s ^= c;
        c = mul(ctx, c, c);
    }
    // the trace lies in F_2
    return static_cast<int>(s & 1u);
}

long char_sum(const FieldContext& ctx, Elem z) {
    long s = 0;
    for (Elem x = 0; x < ctx.order(); ++x)
        s += trace(ctx, mul(ctx, z, x)) ? -1 : 1;
    return s;
}

std::string poly_hex(std::uint32_t poly) {
    std::ostringstream os;
    os << "0x" << std::hex << poly;
    return os.str();
}

} // namespace cubicode::gf2m
