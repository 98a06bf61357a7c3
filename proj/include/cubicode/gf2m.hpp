#pragma once

#include <cstdint>
#include <string>

// Arithmetic in the binary field F_{2^m}, elements stored as coefficient
// bitmasks over the polynomial basis (bit i = coefficient of x^i).

namespace cubicode::gf2m {

using Elem = std::uint32_t;

struct FieldContext {
    int m = 0;              // extension degree, 1 <= m <= 16
    std::uint32_t poly = 0; // monic reduction polynomial, bit m set

    std::uint32_t order() const { return 1u << m; }
    std::uint32_t mask() const { return (1u << m) - 1; }
};

// Lexicographically least monic irreducible of degree m with nonzero
// constant term. Found by exhaustive search; deterministic.
std::uint32_t default_poly(int m);

// Throws std::invalid_argument naming the factor if poly is reducible,
// or if m is out of range.
FieldContext make_field(int m);
FieldContext make_field(int m, std::uint32_t poly);

// Trial division; returns 0 if irreducible, else the least nontrivial factor.
std::uint32_t find_factor(std::uint32_t poly);

inline Elem add(Elem a, Elem b) { return a ^ b; }

Elem mul(const FieldContext& ctx, Elem a, Elem b);

// a^k by square-and-multiply.
Elem pow(const FieldContext& ctx, Elem a, std::uint64_t k);

// Throws std::domain_error on a = 0.
Elem inv(const FieldContext& ctx, Elem a);

// Absolute trace tr(a) = a + a^2 + ... + a^(2^{m-1}), in {0,1}.
int trace(const FieldContext& ctx, Elem a);

// Sum over x in F_{2^m} of (-1)^{tr(z x)}: 2^m at z = 0, otherwise 0.
long char_sum(const FieldContext& ctx, Elem z);

std::string poly_hex(std::uint32_t poly);

} // namespace cubicode::gf2m
