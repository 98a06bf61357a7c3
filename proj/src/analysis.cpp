#include "cubicode/analysis.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace cubicode::analysis {

using ring::RingContext;
using ring::RingElement;

GriesmerReport griesmer_check(std::uint64_t n, std::uint64_t k, std::uint64_t d) {
    if (k < 1 || d < 1)
        throw std::domain_error("griesmer_check: need k >= 1 and d >= 1");
    GriesmerReport rep{n, k, d, 0, false};
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t pow2 = std::uint64_t(1) << i;
        rep.sum += (d + 1 + pow2 - 1) / pow2; // ceil((d+1)/2^i)
    }
    rep.optimal = rep.sum > n;
    return rep;
}

GriesmerReport optimality_closed_form(int m) {
    if (m <= 1 || m % 2 == 0)
        throw std::domain_error("optimality_closed_form: requires odd m > 1");
    const auto p = [](int e) { return std::uint64_t(1) << e; };
    const std::uint64_t n = 3 * (p(3 * m) - p(2 * m) - p(m) + 1);
    const std::uint64_t d = 3 * (p(3 * m - 1) - p(2 * m - 1) - p(m - 1));

    // five-branch split of ceil((d+1)/2^i)
    std::uint64_t sum = 0;
    for (int i = 0; i <= m - 1; ++i)
        sum += 3 * (p(3 * m - 1 - i) - p(2 * m - 1 - i) - p(m - 1 - i)) + 1;
    sum += 3 * (p(2 * m - 1) - p(m - 1)) - 1; // i = m
    for (int i = m + 1; i <= 2 * m - 1; ++i)
        sum += 3 * (p(3 * m - 1 - i) - p(2 * m - 1 - i));
    sum += 3 * p(m - 1) - 1; // i = 2m
    for (int i = 2 * m + 1; i <= 3 * m - 1; ++i)
        sum += 3 * p(3 * m - 1 - i);

    const std::uint64_t closed = 3 * (p(3 * m) - p(2 * m) - p(m)) + 1 + m;
    const GriesmerReport direct = griesmer_check(n, 3 * std::uint64_t(m), d);
    if (sum != closed || sum != direct.sum)
        throw std::logic_error(
            "optimality_closed_form: branch sum disagrees with the direct "
            "ceiling sum");
    return GriesmerReport{n, 3 * std::uint64_t(m), d, sum, sum > n};
}

namespace {

// <c_x, Ev(a)> contribution restricted to a word supported on the given
// positions: sum of digit * Tr(a x) over the support, in R.
RingElement pairing(const CodeSpec& spec, const RingElement& a,
                    std::span<const std::size_t> support,
                    std::span<const RingElement> digits) {
    RingElement acc{};
    for (std::size_t i = 0; i < support.size(); ++i) {
        const RingElement t =
            ring::big_trace(spec.ring, ring::ring_mul(spec.ring, a, spec.positions[support[i]]));
        acc = ring::ring_add(acc, ring::ring_mul(spec.ring, digits[i], t));
    }
    return acc;
}

std::vector<RingElement> trace_basis(const RingContext& ctx) {
    std::vector<RingElement> basis;
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < ctx.m(); ++j) {
            RingElement e{};
            const ring::Elem beta = ring::Elem(1) << j;
            if (k == 0)
                e.a1 = beta;
            else if (k == 1)
                e.a2 = beta;
            else
                e.a3 = beta;
            basis.push_back(e);
        }
    return basis;
}

bool orthogonal_to_code(const CodeSpec& spec, const std::vector<RingElement>& basis,
                        std::span<const std::size_t> support,
                        std::span<const RingElement> digits) {
    for (const RingElement& e : basis) {
        if (!(pairing(spec, e, support, digits) == RingElement{}))
            return false;
    }
    return true;
}

// m = 1 only: full enumeration of the dual module
DualDistanceReport dual_distance_exhaustive(const CodeSpec& spec) {
    const auto basis = trace_basis(spec.ring);
    const std::size_t n = spec.n();
    DualDistanceReport rep;
    rep.value = 0;
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i)
        all[i] = i;
    std::vector<RingElement> digits(n);
    std::uint64_t best = 3 * n + 1;
    const std::uint64_t count = std::uint64_t(1) << (3 * n);
    for (std::uint64_t code = 1; code < count; ++code) {
        std::uint64_t c = code;
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < n; ++i) {
            digits[i] = {static_cast<ring::Elem>(c & 1), static_cast<ring::Elem>((c >> 1) & 1),
                         static_cast<ring::Elem>((c >> 2) & 1)};
            w += gray::lee_weight(digits[i]);
            c >>= 3;
        }
        if (w >= best)
            continue;
        if (orthogonal_to_code(spec, basis, all, digits))
            best = w;
    }
    rep.value = static_cast<int>(best);
    rep.weight1_excluded = best > 1;
    return rep;
}

} // namespace

DualDistanceReport dual_distance(const CodeSpec& spec) {
    const RingContext& ctx = spec.ring;
    const int m = ctx.m();
    if (m == 1 && spec.n() <= 4)
        return dual_distance_exhaustive(spec);

    const auto basis = trace_basis(ctx);
    DualDistanceReport rep;

    // weight-1 dual words: single position, digit in {1, v, v^2}
    if (m <= 3) {
        const RingElement low[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        for (std::size_t p = 0; p < spec.n(); ++p) {
            for (const RingElement& d : low) {
                const std::size_t sup[1] = {p};
                const RingElement digs[1] = {d};
                if (orthogonal_to_code(spec, basis, sup, digs))
                    throw std::logic_error("dual_distance: found a Lee-weight-1 dual word");
            }
        }
        rep.weight1_excluded = true;
    }

    // constructive weight-2 witness: digits (1, v) at positions (x, v^2 x)
    const RingElement x = spec.positions.front();
    const RingElement v2{0, 0, 1};
    const RingElement y = ring::ring_mul(ctx, v2, x);
    std::size_t pos_y = spec.n();
    for (std::size_t i = 0; i < spec.n(); ++i) {
        if (spec.positions[i] == y) {
            pos_y = i;
            break;
        }
    }
    if (pos_y == spec.n())
        throw std::logic_error("dual_distance: witness position v^2 x is not a unit");
    const std::size_t sup[2] = {0, pos_y};
    const RingElement digs[2] = {{1, 0, 0}, {0, 1, 0}};
    if (!orthogonal_to_code(spec, basis, sup, digs))
        throw std::logic_error("dual_distance: witness pair failed orthogonality");
    rep.value = 2;
    rep.witness = DualWitness{0, pos_y, digs[0], digs[1]};
    return rep;
}

MinimalityReport minimality(const WeightDistribution& dist, const CodeSpec* exhaustive) {
    MinimalityReport rep;
    rep.w_min = dist.min_nonzero_weight();
    rep.w_max = dist.max_weight();
    rep.bound_holds = 2 * rep.w_min > rep.w_max;

    if (exhaustive) {
        const int m = exhaustive->ring.m();
        const std::uint64_t total = std::uint64_t(1) << (3 * m);
        const std::uint32_t mask = (1u << m) - 1;
        std::vector<gray::BinaryWord> words;
        words.reserve(total - 1);
        for (std::uint64_t idx = 1; idx < total; ++idx) {
            const RingElement a{static_cast<ring::Elem>(idx & mask),
                                static_cast<ring::Elem>((idx >> m) & mask),
                                static_cast<ring::Elem>((idx >> (2 * m)) & mask)};
            words.push_back(gray::gray_word(evaluate(*exhaustive, a)));
        }
        bool all_minimal = true;
        for (std::size_t i = 0; i < words.size() && all_minimal; ++i)
            for (std::size_t j = 0; j < words.size(); ++j) {
                if (i != j && words[i].covers(words[j])) {
                    all_minimal = false;
                    break;
                }
            }
        rep.exhaustive_all_minimal = all_minimal;
    }
    return rep;
}

SssClass sss_classify(int dual_distance_value) {
    if (dual_distance_value <= 1)
        throw std::domain_error("sss_classify: dual distance must be at least 2");
    return dual_distance_value == 2 ? SssClass::Dictatorial : SssClass::Democratic;
}

std::string to_string(SssClass c) {
    return c == SssClass::Dictatorial ? "dictatorial" : "democratic";
}

} // namespace cubicode::analysis
