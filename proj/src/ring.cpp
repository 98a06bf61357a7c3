#include "cubicode/ring.hpp"

#include <stdexcept>

namespace cubicode::ring {

using gf2m::add;
using gf2m::mul;

RingContext make_ring(const FieldContext& field) {
    RingContext ctx{field, 0};
    if (ctx.even()) {
        // both roots of X^2+X+1 lie in F_{2^m}; take the smaller one
        Elem omega = 0;
        for (Elem w = 2; w < field.order(); ++w) {
            if ((mul(field, w, w) ^ w ^ 1u) == 0) {
                omega = w;
                break;
            }
        }
        if (omega == 0)
            throw std::logic_error("make_ring: no root of X^2+X+1 for even m");
        ctx.omega = omega;
    }
    return ctx;
}

RingElement ring_mul(const RingContext& ctx, const RingElement& a, const RingElement& b) {
    const FieldContext& f = ctx.field;
    return {
        mul(f, a.a1, b.a1) ^ mul(f, a.a2, b.a3) ^ mul(f, a.a3, b.a2),
        mul(f, a.a1, b.a2) ^ mul(f, a.a2, b.a1) ^ mul(f, a.a3, b.a3),
        mul(f, a.a1, b.a3) ^ mul(f, a.a2, b.a2) ^ mul(f, a.a3, b.a1),
    };
}

RingElement frobenius(const RingContext& ctx, const RingElement& a) {
    const FieldContext& f = ctx.field;
    return {mul(f, a.a1, a.a1), mul(f, a.a2, a.a2), mul(f, a.a3, a.a3)};
}

RingElement big_trace(const RingContext& ctx, const RingElement& a) {
    const FieldContext& f = ctx.field;
    return {static_cast<Elem>(gf2m::trace(f, a.a1)),
            static_cast<Elem>(gf2m::trace(f, a.a2)),
            static_cast<Elem>(gf2m::trace(f, a.a3))};
}

QuadExtElement quad_mul(const RingContext& ctx, const QuadExtElement& a,
                        const QuadExtElement& b) {
    const FieldContext& f = ctx.field;
    // (c0 + c1 v)(d0 + d1 v) with v^2 = v + 1
    const Elem cross = mul(f, a.c1, b.c1);
    return {mul(f, a.c0, b.c0) ^ cross,
            mul(f, a.c0, b.c1) ^ mul(f, a.c1, b.c0) ^ cross};
}

CrtImage crt_decompose(const RingContext& ctx, const RingElement& a) {
    if (!ctx.even()) {
        // a(1) and a(v) mod v^2+v+1
        return CrtOdd{a.a1 ^ a.a2 ^ a.a3,
                      {static_cast<Elem>(a.a1 ^ a.a3), static_cast<Elem>(a.a2 ^ a.a3)}};
    }
    const FieldContext& f = ctx.field;
    const Elem w = ctx.omega;
    const Elem w2 = mul(f, w, w);
    return CrtEven{a.a1 ^ a.a2 ^ a.a3,
                   a.a1 ^ mul(f, a.a2, w) ^ mul(f, a.a3, w2),
                   a.a1 ^ mul(f, a.a2, w2) ^ mul(f, a.a3, w)};
}

RingElement crt_compose(const RingContext& ctx, const CrtImage& img) {
    if (const auto* o = std::get_if<CrtOdd>(&img)) {
        // a1+a2+a3 = u, a1+a3 = c0, a2+a3 = c1
        const Elem a1 = o->u ^ o->w.c1;
        const Elem a2 = o->u ^ o->w.c0;
        const Elem a3 = o->u ^ o->w.c0 ^ o->w.c1;
        return {a1, a2, a3};
    }
    const auto& ev = std::get<CrtEven>(img);
    const FieldContext& f = ctx.field;
    const Elem w = ctx.omega;
    const Elem w2 = mul(f, w, w);
    return {ev.d ^ ev.e ^ ev.f,
            ev.d ^ mul(f, ev.e, w2) ^ mul(f, ev.f, w),
            ev.d ^ mul(f, ev.e, w) ^ mul(f, ev.f, w2)};
}

int zero_crt_components(const RingContext& ctx, const RingElement& a) {
    const CrtImage img = crt_decompose(ctx, a);
    if (const auto* o = std::get_if<CrtOdd>(&img))
        return (o->u == 0 ? 1 : 0) + (o->w == QuadExtElement{} ? 1 : 0);
    const auto& ev = std::get<CrtEven>(img);
    return (ev.d == 0 ? 1 : 0) + (ev.e == 0 ? 1 : 0) + (ev.f == 0 ? 1 : 0);
}

bool is_unit(const RingContext& ctx, const RingElement& a) {
    return zero_crt_components(ctx, a) == 0;
}

std::vector<RingElement> units(const RingContext& ctx) {
    const std::uint32_t q = ctx.field.order();
    std::vector<RingElement> out;
    out.reserve(unit_count(ctx.m()));
    for (Elem a1 = 0; a1 < q; ++a1)
        for (Elem a2 = 0; a2 < q; ++a2)
            for (Elem a3 = 0; a3 < q; ++a3) {
                const RingElement a{a1, a2, a3};
                if (is_unit(ctx, a))
                    out.push_back(a);
            }
    return out;
}

std::uint64_t unit_count(int m) {
    const std::uint64_t q = std::uint64_t(1) << m;
    if (m % 2 == 1)
        return (q - 1) * (q * q - 1);
    return (q - 1) * (q - 1) * (q - 1);
}

} // namespace cubicode::ring
