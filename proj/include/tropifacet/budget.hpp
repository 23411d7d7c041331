#pragma once

#include <cstdint>

namespace tropifacet {

/// Enumeration budgets. Defaults cover the instance sizes this library is
/// meant for (desk scale); everything beyond them fails with ResourceError
/// rather than running unbounded.
struct Budget {
    int max_dimension = 6;          // n for pseudovertex enumeration
    int max_generators = 16;        // p for pseudovertex enumeration
    std::int64_t max_candidates = 64000000;  // labeled spanning trees * labelings
    int max_permanent_size = 8;     // k for tropical permanents
    int max_determinant_size = 6;   // k for series determinants
    int max_gamma_attempts = 256;   // perturbation resampling
};

}  // namespace tropifacet
