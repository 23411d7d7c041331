#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropifacet/polytope.hpp"
#include "tropifacet/series.hpp"

namespace tropifacet {

/// Parsed problem instance: generators of a tropical polytope over exact
/// rationals, an optional custom lift and an optional seed.
struct InstanceFile {
    int dimension = 0;
    std::vector<std::vector<Rat>> generators;                  // p x n
    std::optional<std::vector<SeriesVector<Rat>>> lift;        // p x n series
    std::optional<std::uint64_t> seed;

    PolytopeRat polytope() const;
};

/// Parses the JSON instance format. Errors carry the offending field.
InstanceFile parse_instance(const std::string& json_text);

/// Canonical serialization; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const InstanceFile& inst);

}  // namespace tropifacet
