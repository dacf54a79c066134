#pragma once

#include "conjcore/serialize.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace conjtk {

/// Malformed pipeline document: unknown op, bad argument shape, dangling
/// reference. Distinct from verification failures, which are report entries.
struct PipelineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class RunMode {
    run,          // execute the steps as written
    verify,       // plus the axiom suite on every frame binding
    series,       // plus a series table per frame and cell binding
    char_classes, // plus characteristic-class checks per bundle binding
    hamiltonian,  // plus torsion diagnostics per dataset binding
    reduce,       // kernel steps must be explicit; alias of run
};

struct PipelineResult {
    Json report;
    bool any_failure = false;
};

/// Validates the document shape (throws PipelineError), then executes the
/// steps in order. A failing check is recorded and does not abort later
/// steps. Reports are deterministic for identical inputs.
PipelineResult run_pipeline(const Json& doc, std::optional<int> cutoff_override,
                            RunMode mode = RunMode::run);

std::string render_human(const Json& report);

} // namespace conjtk
