#include "cubicode/trace_code.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

namespace cubicode::trace_code {

using gf2m::Elem;
using gf2m::FieldContext;

CodeSpec make_code(const RingContext& ctx) {
    return CodeSpec{ctx, ring::units(ctx)};
}

std::vector<RingElement> evaluate(const CodeSpec& spec, const RingElement& a) {
    std::vector<RingElement> out;
    out.reserve(spec.n());
    for (const RingElement& x : spec.positions)
        out.push_back(ring::big_trace(spec.ring, ring::ring_mul(spec.ring, a, x)));
    return out;
}

GeneratorMatrix generator_matrix(const CodeSpec& spec) {
    const int m = spec.ring.m();
    GeneratorMatrix mat;
    mat.cols = 3 * spec.n();
    mat.rows.reserve(3 * m);
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < m; ++j) {
            RingElement e{};
            const Elem beta = Elem(1) << j;
            if (k == 0)
                e.a1 = beta;
            else if (k == 1)
                e.a2 = beta;
            else
                e.a3 = beta;
            mat.rows.push_back(gray::gray_word(evaluate(spec, e)));
        }
    return mat;
}

int rank_gf2(std::vector<BinaryWord> rows) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].nbits;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        std::size_t r = pivot_row;
        while (r < rows.size() && !rows[r].get(c))
            ++r;
        if (r == rows.size())
            continue;
        std::swap(rows[pivot_row], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != pivot_row && rows[i].get(c))
                rows[i] ^= rows[pivot_row];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

int rank_gf2(const GeneratorMatrix& mat) { return rank_gf2(mat.rows); }

std::uint64_t WeightDistribution::total() const {
    std::uint64_t s = 0;
    for (const auto& [w, f] : entries)
        s += f;
    return s;
}

std::uint64_t WeightDistribution::min_nonzero_weight() const {
    for (const auto& [w, f] : entries)
        if (w != 0)
            return w;
    return 0;
}

std::uint64_t WeightDistribution::max_weight() const {
    return entries.empty() ? 0 : entries.back().first;
}

namespace {

// flat multiplication and trace tables; m <= 8 keeps them cache-resident
struct FieldTables {
    int m;
    std::uint32_t q;
    std::vector<std::uint16_t> mul; // q*q entries
    std::vector<std::uint8_t> tr;   // q entries

    explicit FieldTables(const FieldContext& f) : m(f.m), q(f.order()) {
        mul.resize(std::size_t(q) * q);
        for (Elem a = 0; a < q; ++a)
            for (Elem b = 0; b < q; ++b)
                mul[std::size_t(a) * q + b] =
                    static_cast<std::uint16_t>(gf2m::mul(f, a, b));
        tr.resize(q);
        for (Elem a = 0; a < q; ++a)
            tr[a] = static_cast<std::uint8_t>(gf2m::trace(f, a));
    }

    std::uint16_t operator()(Elem a, Elem b) const { return mul[std::size_t(a) * q + b]; }
};

// Packed trace bit-lanes: Lane[r][c] holds, over all positions x, the bit
// tr(c * x_{r+1}) where x = x_1 + x_2 v + x_3 v^2. By linearity of tr the
// three Gray components of Ev(a) are XOR combinations of these rows, so a
// codeword's Lee weight is three lane popcounts.
struct TraceLanes {
    std::size_t n;
    std::size_t stride; // 64-bit words per lane row
    std::vector<std::uint64_t> rows[3];

    TraceLanes(const FieldTables& t, const std::vector<RingElement>& pos) {
        n = pos.size();
        stride = (n + 63) / 64;
        for (int r = 0; r < 3; ++r)
            rows[r].assign(std::size_t(t.q) * stride, 0);
        for (Elem c = 0; c < t.q; ++c) {
            for (std::size_t j = 0; j < n; ++j) {
                const Elem coord[3] = {pos[j].a1, pos[j].a2, pos[j].a3};
                for (int r = 0; r < 3; ++r) {
                    if (t.tr[t(c, coord[r])])
                        rows[r][std::size_t(c) * stride + j / 64] |=
                            std::uint64_t(1) << (j % 64);
                }
            }
        }
    }

    const std::uint64_t* row(int r, Elem c) const {
        return rows[r].data() + std::size_t(c) * stride;
    }
};

void accumulate_range(const TraceLanes& lanes, int m, std::uint64_t lo,
                      std::uint64_t hi, std::vector<std::uint64_t>& hist) {
    const std::uint32_t mask = (1u << m) - 1;
    const std::size_t stride = lanes.stride;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const Elem a1 = static_cast<Elem>(idx & mask);
        const Elem a2 = static_cast<Elem>((idx >> m) & mask);
        const Elem a3 = static_cast<Elem>((idx >> (2 * m)) & mask);
        // tr(A1) = tr(a1 x1) + tr(a2 x3) + tr(a3 x2), cyclically for A2, A3
        const std::uint64_t* l1a = lanes.row(0, a1);
        const std::uint64_t* l1b = lanes.row(2, a2);
        const std::uint64_t* l1c = lanes.row(1, a3);
        const std::uint64_t* l2a = lanes.row(1, a1);
        const std::uint64_t* l2b = lanes.row(0, a2);
        const std::uint64_t* l2c = lanes.row(2, a3);
        const std::uint64_t* l3a = lanes.row(2, a1);
        const std::uint64_t* l3b = lanes.row(1, a2);
        const std::uint64_t* l3c = lanes.row(0, a3);
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < stride; ++i) {
            w += std::popcount(l1a[i] ^ l1b[i] ^ l1c[i]);
            w += std::popcount(l2a[i] ^ l2b[i] ^ l2c[i]);
            w += std::popcount(l3a[i] ^ l3b[i] ^ l3c[i]);
        }
        ++hist[w];
    }
}

} // namespace

WeightDistribution brute_weight_distribution(const CodeSpec& spec, int threads,
                                             bool force) {
    const int m = spec.ring.m();
    if (m > kBruteGuardMaxM && !force)
        throw ResourceGuardError(
            "brute_weight_distribution: m > 5 is beyond desk scale; pass force "
            "(--force) to override");
    if (threads < 1)
        threads = 1;

    const std::uint64_t total = std::uint64_t(1) << (3 * m);
    const std::size_t n = spec.n();
    const FieldTables tables(spec.ring.field);
    const TraceLanes lanes(tables, spec.positions);

    std::vector<std::vector<std::uint64_t>> hists(
        threads, std::vector<std::uint64_t>(3 * n + 1, 0));
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (int tix = 0; tix < threads; ++tix) {
        const std::uint64_t lo = std::min<std::uint64_t>(total, chunk * tix);
        const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        workers.emplace_back([&, tix, lo, hi] {
            accumulate_range(lanes, m, lo, hi, hists[tix]);
        });
    }
    for (auto& w : workers)
        w.join();

    std::vector<std::uint64_t> hist(3 * n + 1, 0);
    for (const auto& h : hists)
        for (std::size_t i = 0; i <= 3 * n; ++i)
            hist[i] += h[i];

    WeightDistribution dist;
    dist.n_ring = n;
    dist.dimension = 3 * static_cast<std::uint64_t>(m);
    dist.method = "brute";
    for (std::size_t w = 0; w <= 3 * n; ++w)
        if (hist[w])
            dist.entries.emplace_back(w, hist[w]);
    return dist;
}

namespace {

struct ClosedFormWeights {
    std::uint64_t w_unit;     // no CRT component vanishes
    std::uint64_t w_one_zero; // odd m: quad component zero; even m: one of three
    std::uint64_t w_two_zero; // odd m: F_{2^m} component zero; even m: two of three
};

ClosedFormWeights closed_form_weights(const RingContext& ctx) {
    const int m = ctx.m();
    const std::uint64_t p3 = std::uint64_t(1) << (3 * m - 1); // 2^{3m-1}
    const std::uint64_t p2 = std::uint64_t(1) << (2 * m - 1); // 2^{2m-1}
    const std::uint64_t p1 = std::uint64_t(1) << (m - 1);     // 2^{m-1}
    if (!ctx.even())
        return {3 * (p3 - p2 - p1), 3 * (p3 - p1), 3 * (p3 - p2)};
    return {3 * (p3 - 3 * p2 + 3 * p1), 3 * (p3 - 3 * p2 + 2 * p1),
            3 * (p3 - 2 * p2 + p1)};
}

WeightDistribution from_classes(const RingContext& ctx, std::uint64_t f_unit,
                                std::uint64_t f_one, std::uint64_t f_two,
                                const std::string& method) {
    const ClosedFormWeights w = closed_form_weights(ctx);
    std::map<std::uint64_t, std::uint64_t> acc;
    acc[0] += 1;
    acc[w.w_unit] += f_unit;
    acc[w.w_one_zero] += f_one;
    acc[w.w_two_zero] += f_two;

    WeightDistribution dist;
    dist.n_ring = ring::unit_count(ctx.m());
    dist.dimension = 3 * static_cast<std::uint64_t>(ctx.m());
    dist.method = method;
    for (const auto& [wt, f] : acc)
        dist.entries.emplace_back(wt, f);
    return dist;
}

} // namespace

WeightDistribution formula_weight_distribution(const RingContext& ctx) {
    const std::uint64_t q = std::uint64_t(1) << ctx.m();
    if (!ctx.even()) {
        // units; quad component zero (multiples of 1+v+v^2); base component zero
        return from_classes(ctx, (q - 1) * (q * q - 1), q - 1, q * q - 1, "formula");
    }
    // frequencies count CRT vanishing classes: 0, 1 or 2 of the three
    // components zero (all three zero is a = 0)
    return from_classes(ctx, (q - 1) * (q - 1) * (q - 1), 3 * (q - 1) * (q - 1),
                        3 * (q - 1), "formula");
}

WeightDistribution published_table_distribution(const RingContext& ctx) {
    const std::uint64_t q = std::uint64_t(1) << ctx.m();
    if (!ctx.even())
        return from_classes(ctx, (q - 1) * (q * q - 1), q - 1, q * q - 1,
                            "published");
    // as printed: f2 = (2^m-1)^2 for the one-zero class, f3 = 2^m-1
    return from_classes(ctx, (q - 1) * (q - 1) * (q - 1), (q - 1) * (q - 1), q - 1,
                        "published");
}

VerifyReport verify_distribution(const CodeSpec& spec, int threads, bool force) {
    VerifyReport rep;
    rep.brute = brute_weight_distribution(spec, threads, force);
    rep.formula = formula_weight_distribution(spec.ring);
    rep.brute_matches_formula = rep.brute.entries == rep.formula.entries;
    if (!rep.brute_matches_formula) {
        std::ostringstream os;
        os << "verify_distribution: brute distribution disagrees with the "
              "CRT-count prediction at m="
           << spec.ring.m();
        throw std::runtime_error(os.str());
    }
    const WeightDistribution published = published_table_distribution(spec.ring);
    rep.matches_published_table = rep.brute.entries == published.entries;
    if (!rep.matches_published_table)
        rep.erratum_flags.push_back("TableII-frequencies");
    return rep;
}

namespace {

std::map<std::string, std::string> parse_header(const std::string& line) {
    std::map<std::string, std::string> kv;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        const auto eq = tok.find('=');
        if (eq != std::string::npos)
            kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

} // namespace

void write_genmat(std::ostream& os, const GeneratorMatrix& mat, int m,
                  std::uint32_t poly, std::size_t n) {
    os << "cubicode-genmat v1 m=" << m << " poly=" << gf2m::poly_hex(poly)
       << " n=" << n << " rows=" << mat.rows.size() << "\n";
    for (const BinaryWord& row : mat.rows) {
        const auto bytes = row.to_bytes();
        os.write(reinterpret_cast<const char*>(bytes.data()),
                 static_cast<std::streamsize>(bytes.size()));
    }
}

GenmatFile read_genmat(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("cubicode-genmat v1", 0) != 0)
        throw std::runtime_error("read_genmat: bad header");
    const auto kv = parse_header(header);
    GenmatFile out;
    out.m = std::stoi(kv.at("m"));
    out.poly = static_cast<std::uint32_t>(std::stoul(kv.at("poly"), nullptr, 16));
    out.n = std::stoul(kv.at("n"));
    const std::size_t rows = std::stoul(kv.at("rows"));
    const std::size_t nbits = 3 * out.n;
    const std::size_t rowbytes = (nbits + 7) / 8;
    out.mat.cols = nbits;
    std::vector<std::uint8_t> buf(rowbytes);
    for (std::size_t r = 0; r < rows; ++r) {
        is.read(reinterpret_cast<char*>(buf.data()),
                static_cast<std::streamsize>(rowbytes));
        if (!is)
            throw std::runtime_error("read_genmat: truncated row data");
        out.mat.rows.push_back(BinaryWord::from_bytes(buf, nbits));
    }
    return out;
}

} // namespace cubicode::trace_code
