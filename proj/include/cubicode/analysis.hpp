#pragma once

#include "cubicode/trace_code.hpp"

#include <cstdint>
#include <optional>
#include <string>

// Properties of the Gray image: Griesmer optimality, dual Lee distance,
// minimal codewords, secret-sharing classification.

namespace cubicode::analysis {

using trace_code::CodeSpec;
using trace_code::WeightDistribution;

struct GriesmerReport {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t d = 0;
    std::uint64_t sum = 0; // sum_{i=0}^{k-1} ceil((d+1)/2^i)
    bool optimal = false;  // sum > n: no [n,k,d+1] binary code exists
};

GriesmerReport griesmer_check(std::uint64_t n, std::uint64_t k, std::uint64_t d);

// The five-branch ceiling split for odd m > 1; cross-checked against the
// direct ceiling sum. Throws std::domain_error outside the theorem scope.
GriesmerReport optimality_closed_form(int m);

struct DualWitness {
    std::size_t pos_x = 0; // position indices in canonical order
    std::size_t pos_y = 0;
    ring::RingElement digit_x;
    ring::RingElement digit_y;
};

struct DualDistanceReport {
    int value = 0;
    std::optional<DualWitness> witness;
    bool weight1_excluded = false; // exhaustive absence of Lee-weight-1 dual words
};

// No Lee-weight-1 dual word exists (exhaustive for m <= 3); a weight-2
// witness (x, v^2 x) with digits (1, v) is verified against all 3m
// generator basis elements. m = 1 falls back to full dual enumeration.
DualDistanceReport dual_distance(const CodeSpec& spec);

struct MinimalityReport {
    std::uint64_t w_min = 0;
    std::uint64_t w_max = 0;
    bool bound_holds = false; // Ashikhmin-Barg: 2*w_min > w_max
    std::optional<bool> exhaustive_all_minimal;
};

// Bound check from the distribution; if spec is given (m <= 3), also the
// exhaustive support-covering check over all nonzero Gray codewords.
MinimalityReport minimality(const WeightDistribution& dist,
                            const CodeSpec* exhaustive = nullptr);

enum class SssClass { Democratic, Dictatorial };

// Requires all nonzero codewords minimal. Throws std::domain_error for
// dual distance <= 1.
SssClass sss_classify(int dual_distance_value);

std::string to_string(SssClass c);

} // namespace cubicode::analysis
