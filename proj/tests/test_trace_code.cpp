#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cubicode/trace_code.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace cubicode;
using namespace cubicode::trace_code;
using ring::RingElement;

namespace {

CodeSpec code_for(int m) { return make_code(ring::make_ring(gf2m::make_field(m))); }

RingElement element_from_index(const ring::RingContext& ctx, std::uint64_t idx) {
    const int m = ctx.m();
    const std::uint32_t mask = ctx.field.mask();
    return {static_cast<ring::Elem>(idx & mask),
            static_cast<ring::Elem>((idx >> m) & mask),
            static_cast<ring::Elem>((idx >> (2 * m)) & mask)};
}

using Entries = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

// independent oracle: per-codeword symbol-wise evaluation and Lee weight
Entries slow_distribution(const CodeSpec& spec) {
    std::map<std::uint64_t, std::uint64_t> acc;
    const std::uint64_t total = 1ull << (3 * spec.ring.m());
    for (std::uint64_t i = 0; i < total; ++i)
        ++acc[gray::lee_weight(evaluate(spec, element_from_index(spec.ring, i)))];
    return Entries(acc.begin(), acc.end());
}

} // namespace

TEST_CASE("evaluation at m = 1") {
    const auto spec = code_for(1);
    REQUIRE(spec.n() == 3);
    // canonical position order is v^2, v, 1; Tr is the identity at m = 1
    const auto ev1 = evaluate(spec, {1, 0, 0});
    CHECK(ev1 == spec.positions);
    CHECK(gray::lee_weight(ev1) == 3);

    const auto ev0 = evaluate(spec, {0, 0, 0});
    CHECK(gray::lee_weight(ev0) == 0);

    const auto evall = evaluate(spec, {1, 1, 1});
    for (const auto& s : evall)
        CHECK(s == RingElement{1, 1, 1});
    CHECK(gray::lee_weight(evall) == 9);
}

TEST_CASE("evaluation is linear and R-module compatible") {
    std::mt19937 rng(47);
    for (int m : {2, 3}) {
        const auto spec = code_for(m);
        std::uniform_int_distribution<std::uint64_t> pick(0, (1ull << (3 * m)) - 1);
        for (int it = 0; it < 20; ++it) {
            const auto a = element_from_index(spec.ring, pick(rng));
            const auto b = element_from_index(spec.ring, pick(rng));
            const auto ev_sum = evaluate(spec, ring::ring_add(a, b));
            const auto ev_a = evaluate(spec, a);
            const auto ev_b = evaluate(spec, b);
            for (std::size_t i = 0; i < spec.n(); ++i)
                CHECK(ev_sum[i] == ring::ring_add(ev_a[i], ev_b[i]));
        }
    }
}

TEST_CASE("Ev is injective, exhaustive m <= 3") {
    for (int m = 1; m <= 3; ++m) {
        const auto spec = code_for(m);
        std::set<std::vector<std::uint64_t>> images;
        const std::uint64_t total = 1ull << (3 * m);
        for (std::uint64_t i = 0; i < total; ++i)
            images.insert(gray::gray_word(evaluate(spec, element_from_index(spec.ring, i))).words);
        CHECK(images.size() == total);
    }
}

TEST_CASE("group action: coordinate permutation by a unit maps Ev(a) to Ev(au)") {
    const auto spec = code_for(2);
    // index of each unit for permutation lookup
    std::map<std::tuple<ring::Elem, ring::Elem, ring::Elem>, std::size_t> index;
    for (std::size_t i = 0; i < spec.n(); ++i) {
        const auto& x = spec.positions[i];
        index[{x.a1, x.a2, x.a3}] = i;
    }
    for (const auto& u : spec.positions) {
        for (std::uint64_t i = 0; i < 64; ++i) {
            const auto a = element_from_index(spec.ring, i);
            const auto ev_a = evaluate(spec, a);
            const auto ev_au = evaluate(spec, ring::ring_mul(spec.ring, a, u));
            for (std::size_t j = 0; j < spec.n(); ++j) {
                const auto ux = ring::ring_mul(spec.ring, u, spec.positions[j]);
                CHECK(ev_a[index.at({ux.a1, ux.a2, ux.a3})] == ev_au[j]);
            }
        }
    }

    // sampled at m = 3
    const auto spec3 = code_for(3);
    std::map<std::tuple<ring::Elem, ring::Elem, ring::Elem>, std::size_t> index3;
    for (std::size_t i = 0; i < spec3.n(); ++i) {
        const auto& x = spec3.positions[i];
        index3[{x.a1, x.a2, x.a3}] = i;
    }
    std::mt19937 rng(53);
    for (int it = 0; it < 10; ++it) {
        const auto u = spec3.positions[rng() % spec3.n()];
        const auto a = element_from_index(spec3.ring, rng() & 511);
        const auto ev_a = evaluate(spec3, a);
        const auto ev_au = evaluate(spec3, ring::ring_mul(spec3.ring, a, u));
        for (std::size_t j = 0; j < spec3.n(); ++j) {
            const auto ux = ring::ring_mul(spec3.ring, u, spec3.positions[j]);
            CHECK(ev_a[index3.at({ux.a1, ux.a2, ux.a3})] == ev_au[j]);
        }
    }
}

TEST_CASE("generator matrix ranks") {
    const auto m1 = generator_matrix(code_for(1));
    CHECK(m1.rows.size() == 3);
    CHECK(m1.cols == 9);
    CHECK(rank_gf2(m1) == 3);

    const auto m2 = generator_matrix(code_for(2));
    CHECK(rank_gf2(m2) == 6);

    const auto m3 = generator_matrix(code_for(3));
    CHECK(rank_gf2(m3) == 9);

    // rank is unchanged by duplicating a row
    auto rows = m1.rows;
    rows.push_back(rows[0]);
    CHECK(rank_gf2(rows) == 3);

    // identity pattern
    std::vector<gray::BinaryWord> id(3, gray::BinaryWord(3));
    for (int i = 0; i < 3; ++i)
        id[i].set(i, true);
    CHECK(rank_gf2(id) == 3);
}

TEST_CASE("brute distribution: pinned values at m = 1, 2, 3") {
    const auto d1 = brute_weight_distribution(code_for(1));
    CHECK(d1.entries == Entries{{0, 1}, {3, 3}, {6, 3}, {9, 1}});
    CHECK(d1.n_binary() == 9);
    CHECK(d1.dimension == 3);

    const auto d2 = brute_weight_distribution(code_for(2));
    CHECK(d2.entries == Entries{{0, 1}, {36, 27}, {42, 27}, {54, 9}});
    CHECK(d2.n_binary() == 81);
    CHECK(d2.dimension == 6);

    const auto d3 = brute_weight_distribution(code_for(3));
    CHECK(d3.entries == Entries{{0, 1}, {660, 441}, {672, 63}, {756, 7}});
    CHECK(d3.n_binary() == 1323);
    CHECK(d3.dimension == 9);
}

TEST_CASE("brute distribution agrees with the symbol-wise oracle, m <= 3") {
    for (int m = 1; m <= 3; ++m) {
        const auto spec = code_for(m);
        const auto fast = brute_weight_distribution(spec);
        CHECK(fast.entries == slow_distribution(spec));
        CHECK(fast.total() == 1ull << (3 * m));
        // zero weight exactly once, every weight a multiple of 3 and <= 3n
        CHECK(fast.entries.front() == std::pair<std::uint64_t, std::uint64_t>{0, 1});
        for (const auto& [w, f] : fast.entries) {
            CHECK(w % 3 == 0);
            CHECK(w <= 3 * spec.n());
        }
    }
}

TEST_CASE("brute distribution is deterministic across thread counts") {
    const auto spec = code_for(3);
    const auto t1 = brute_weight_distribution(spec, 1);
    const auto t4 = brute_weight_distribution(spec, 4);
    const auto t7 = brute_weight_distribution(spec, 7);
    CHECK(t1.entries == t4.entries);
    CHECK(t1.entries == t7.entries);
}

TEST_CASE("formula distribution: Tables evaluated at small m") {
    const auto r3 = ring::make_ring(gf2m::make_field(3));
    const auto f3 = formula_weight_distribution(r3);
    CHECK(f3.entries == Entries{{0, 1}, {660, 441}, {672, 63}, {756, 7}});

    const auto r2 = ring::make_ring(gf2m::make_field(2));
    const auto f2 = formula_weight_distribution(r2);
    CHECK(f2.entries == Entries{{0, 1}, {36, 27}, {42, 27}, {54, 9}});

    const auto r1 = ring::make_ring(gf2m::make_field(1));
    const auto f1 = formula_weight_distribution(r1);
    CHECK(f1.entries == Entries{{0, 1}, {3, 3}, {6, 3}, {9, 1}});

    // mass check holds for every m up to 8 in both parities
    for (int m = 1; m <= 8; ++m) {
        const auto ctx = ring::make_ring(gf2m::make_field(m));
        CHECK(formula_weight_distribution(ctx).total() == 1ull << (3 * m));
    }
}

TEST_CASE("published even-m table fails the mass check and is flagged") {
    const auto r2 = ring::make_ring(gf2m::make_field(2));
    const auto pub = published_table_distribution(r2);
    CHECK(pub.total() == 40); // 1 + 27 + 9 + 3 != 64
    CHECK(pub.entries == Entries{{0, 1}, {36, 9}, {42, 27}, {54, 3}});

    const auto rep2 = verify_distribution(make_code(r2));
    CHECK(rep2.brute_matches_formula);
    CHECK_FALSE(rep2.matches_published_table);
    CHECK(rep2.erratum_flags == std::vector<std::string>{"TableII-frequencies"});

    // odd m: the published table is the CRT count, no flag
    const auto rep3 = verify_distribution(code_for(3));
    CHECK(rep3.brute_matches_formula);
    CHECK(rep3.matches_published_table);
    CHECK(rep3.erratum_flags.empty());
}

TEST_CASE("resource guard refuses m > 5 without force") {
    const auto ctx = ring::make_ring(gf2m::make_field(6));
    CodeSpec spec{ctx, {}}; // positions not needed to hit the guard
    CHECK_THROWS_AS(brute_weight_distribution(spec, 1, false), ResourceGuardError);
}

TEST_CASE("distribution is representation independent") {
    // two irreducible cubics
    const auto a = make_code(ring::make_ring(gf2m::make_field(3, 0b1011)));
    const auto b = make_code(ring::make_ring(gf2m::make_field(3, 0b1101)));
    CHECK(brute_weight_distribution(a).entries == brute_weight_distribution(b).entries);

    // omega-root choice at m = 2
    const auto ctx2 = ring::make_ring(gf2m::make_field(2));
    auto swapped = ctx2;
    swapped.omega = gf2m::mul(ctx2.field, ctx2.omega, ctx2.omega);
    CHECK(brute_weight_distribution(make_code(ctx2)).entries ==
          brute_weight_distribution(make_code(swapped)).entries);

    // coordinate order at m = 2
    auto spec = make_code(ctx2);
    auto reversed = spec;
    std::reverse(reversed.positions.begin(), reversed.positions.end());
    CHECK(brute_weight_distribution(spec).entries ==
          brute_weight_distribution(reversed).entries);
}

TEST_CASE("genmat dump round-trips") {
    const auto spec = code_for(2);
    const auto mat = generator_matrix(spec);
    std::stringstream ss;
    write_genmat(ss, mat, 2, 0b111, spec.n());

    const auto back = read_genmat(ss);
    CHECK(back.m == 2);
    CHECK(back.poly == 0b111);
    CHECK(back.n == spec.n());
    REQUIRE(back.mat.rows.size() == mat.rows.size());
    for (std::size_t i = 0; i < mat.rows.size(); ++i)
        CHECK(back.mat.rows[i] == mat.rows[i]);

    const std::string header = ss.str().substr(0, ss.str().find('\n'));
    CHECK(header == "cubicode-genmat v1 m=2 poly=0x7 n=27 rows=6");
}
