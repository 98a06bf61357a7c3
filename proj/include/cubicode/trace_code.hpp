#pragma once

#include "cubicode/gray.hpp"
#include "cubicode/ring.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// The trace code C_m: evaluation vectors (Tr(a x))_{x in R_m^*}, its Gray
// image, generator matrix and Lee weight distribution, computed both by
// exhaustive enumeration and by the closed-form class counts.

namespace cubicode::trace_code {

using gray::BinaryWord;
using ring::RingContext;
using ring::RingElement;

struct ResourceGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CodeSpec {
    RingContext ring;
    std::vector<RingElement> positions; // canonical unit order, length n

    std::size_t n() const { return positions.size(); }
};

CodeSpec make_code(const RingContext& ctx);

// Ev(a) = (Tr(a x))_x over the canonical positions; symbols lie in R.
std::vector<RingElement> evaluate(const CodeSpec& spec, const RingElement& a);

struct GeneratorMatrix {
    std::vector<BinaryWord> rows; // 3m rows of 3n bits
    std::size_t cols = 0;
};

// Rows are phi(Ev(x^j * v^k)), ordered v-power-major, field-basis-minor.
GeneratorMatrix generator_matrix(const CodeSpec& spec);

// GF(2) row rank, bit-packed elimination.
int rank_gf2(const GeneratorMatrix& mat);
int rank_gf2(std::vector<BinaryWord> rows);

struct WeightDistribution {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries; // (weight, freq), sorted
    std::uint64_t n_ring = 0;
    std::uint64_t dimension = 0;
    std::string method; // "brute" | "formula"

    std::uint64_t n_binary() const { return 3 * n_ring; }
    std::uint64_t total() const;
    std::uint64_t min_nonzero_weight() const;
    std::uint64_t max_weight() const;
};

inline constexpr int kBruteGuardMaxM = 5;

// Exact histogram over all 2^{3m} messages; deterministic for any thread
// count. Guarded at m > 5 unless force is set.
WeightDistribution brute_weight_distribution(const CodeSpec& spec, int threads = 1,
                                             bool force = false);

// Weights from the closed forms; frequencies from CRT vanishing-class counts.
WeightDistribution formula_weight_distribution(const RingContext& ctx);

// Frequencies as literally printed for even m (these fail the mass check;
// kept for the erratum comparison).
WeightDistribution published_table_distribution(const RingContext& ctx);

struct VerifyReport {
    WeightDistribution brute;
    WeightDistribution formula;
    bool brute_matches_formula = false;
    bool matches_published_table = false;
    std::vector<std::string> erratum_flags;
};

// Throws on brute vs CRT-count mismatch (implementation bug); a mismatch
// against the literal published frequencies only sets an erratum flag.
VerifyReport verify_distribution(const CodeSpec& spec, int threads = 1,
                                 bool force = false);

// Generator matrix dump: one text header line, then rows as little-endian
// bit-packed bytes.
void write_genmat(std::ostream& os, const GeneratorMatrix& mat, int m,
                  std::uint32_t poly, std::size_t n);
struct GenmatFile {
    int m = 0;
    std::uint32_t poly = 0;
    std::size_t n = 0;
    GeneratorMatrix mat;
};
GenmatFile read_genmat(std::istream& is);

} // namespace cubicode::trace_code
