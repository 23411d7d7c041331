#pragma once

#include <optional>
#include <string>

#include "tropifacet/budget.hpp"
#include "tropifacet/instance.hpp"

namespace tropifacet {

enum class LiftKind { Canonical, Perturbed, Custom };

LiftKind parse_lift_kind(const std::string& name);

struct CommandOptions {
    Budget budget;
    std::optional<std::uint64_t> seed;  // overrides the instance seed
    LiftKind lift_kind = LiftKind::Canonical;
    bool facets = true;
    bool halfspaces = false;  // svg overlay
    bool timing = false;      // add elapsed_ms fields (breaks byte determinism)
};

/// Exit-code contract: 0 pass, 1 usage/parse, 2 precondition violation,
/// 3 theorem-check failure, 4 resource budget.
int exit_code_for(const std::exception& e);

/// Reports are serialized with two-space indentation and a trailing
/// newline; given the same instance and seed they are byte-identical
/// across runs (unless timing is requested).
std::string cmd_analyze(const InstanceFile& inst, const CommandOptions& opts = {});
std::string cmd_lift(const InstanceFile& inst, const CommandOptions& opts = {});

struct VerifyResult {
    int exit_code = 0;
    std::string report;
};
VerifyResult cmd_verify(const InstanceFile& inst, const CommandOptions& opts = {});

std::string cmd_svg(const InstanceFile& inst, const CommandOptions& opts = {});

}  // namespace tropifacet
