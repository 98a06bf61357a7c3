#pragma once

#include "cubicode/gf2m.hpp"

#include <variant>
#include <vector>

// The ring R_m = F_{2^m} + v F_{2^m} + v^2 F_{2^m} with v^3 = 1.
// CRT-decomposes as F_{2^m} x F_{4^m} when m is odd (v^2+v+1 irreducible
// over F_{2^m}) and as F_{2^m}^3 when m is even (omega in F_{2^m}).

namespace cubicode::ring {

using gf2m::Elem;
using gf2m::FieldContext;

struct RingElement {
    Elem a1 = 0; // coefficient of 1
    Elem a2 = 0; // coefficient of v
    Elem a3 = 0; // coefficient of v^2

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

// c0 + c1*v in F_{2^m}[v]/(v^2+v+1), i.e. F_{4^m} for odd m.
struct QuadExtElement {
    Elem c0 = 0;
    Elem c1 = 0;

    friend bool operator==(const QuadExtElement&, const QuadExtElement&) = default;
};

struct CrtOdd {
    Elem u = 0;        // image in F_{2^m}, a(1)
    QuadExtElement w;  // image in F_{4^m}, a(v) mod v^2+v+1

    friend bool operator==(const CrtOdd&, const CrtOdd&) = default;
};

struct CrtEven {
    Elem d = 0; // a1 + a2 + a3
    Elem e = 0; // a1 + a2*omega + a3*omega^2
    Elem f = 0; // a1 + a2*omega^2 + a3*omega

    friend bool operator==(const CrtEven&, const CrtEven&) = default;
};

using CrtImage = std::variant<CrtOdd, CrtEven>;

struct RingContext {
    FieldContext field;
    Elem omega = 0; // root of X^2+X+1, defined for even m only

    bool even() const { return field.m % 2 == 0; }
    int m() const { return field.m; }
};

RingContext make_ring(const FieldContext& field);

inline RingElement ring_add(const RingElement& a, const RingElement& b) {
    return {a.a1 ^ b.a1, a.a2 ^ b.a2, a.a3 ^ b.a3};
}

// Cyclic convolution with v^3 = 1.
RingElement ring_mul(const RingContext& ctx, const RingElement& a, const RingElement& b);

// Squares each field coefficient.
RingElement frobenius(const RingContext& ctx, const RingElement& a);

// Tr(a) = sum of Frobenius iterates; componentwise field trace, so the
// result lies in R (all coefficients in {0,1}).
RingElement big_trace(const RingContext& ctx, const RingElement& a);

QuadExtElement quad_mul(const RingContext& ctx, const QuadExtElement& a,
                        const QuadExtElement& b);

CrtImage crt_decompose(const RingContext& ctx, const RingElement& a);
RingElement crt_compose(const RingContext& ctx, const CrtImage& img);

// Number of CRT components that vanish (odd m: 2 components, even m: 3).
int zero_crt_components(const RingContext& ctx, const RingElement& a);

bool is_unit(const RingContext& ctx, const RingElement& a);

// All units in ascending lexicographic order on (a1, a2, a3).
std::vector<RingElement> units(const RingContext& ctx);

// (2^m-1)(2^{2m}-1) for odd m, (2^m-1)^3 for even m.
std::uint64_t unit_count(int m);

} // namespace cubicode::ring
