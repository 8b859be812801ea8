#pragma once
// Named experiment drivers: each one checks a specific claim about grid
// determinantal ideals end to end and answers with a Report.  The CLI maps
// subcommands onto these; tests call them directly.
//
// Reproducibility contract: a driver resolves every default into the
// report's parameters, draws all randomness from the spec's seed, and keeps
// wall-clock data out of the stable output, so the same spec produces the
// same report bytes.  Budgets exist as a safety net; when one trips the
// outcome degrades to "incomplete" with a note.

#include <cstdint>
#include <string>
#include <vector>

#include "detgb/report.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

struct ExperimentSpec {
    std::string name;
    int m = 0, n = 0, t = 0;      // grid and minor size; 0 = driver default
    std::string field;            // "q" or "p=<prime>"; empty = driver default
    std::uint64_t seed = 1;
    long samples = 0;             // sampled-search width; 0 = driver default
    double budget_seconds = 0;    // wall-clock safety net; 0 = driver default
};

/// The names run_experiment accepts, in a stable order.
const std::vector<std::string>& experiment_names();

/// Dispatch on spec.name.  Unknown name or malformed field -> DomainError.
Report run_experiment(const ExperimentSpec& spec);

/// One-shot basis computation for the CLI `gb` subcommand: reduced basis of
/// the t-minors under the given order, with the initial ideal's Hilbert data
/// folded into the parameters.
Report gb_report(int m, int n, int t, const std::string& order_desc,
                 const std::string& field_desc, double budget_seconds = 0);

/// Parse an order description against nvars variables.  Accepted forms:
/// "lex" / "lex:rowmajor", "grevlex" / "grevlex:rowmajor",
/// "lex:perm=2,0,1", "grevlex:perm=...", "weight:seed=7".
/// Anything else -> DomainError.
TermOrder parse_order(const std::string& desc, int nvars);

/// Render a report as a small fixed-layout text block.  The JSON overload
/// validates the schema and throws ParseError on a mismatch.
std::string render_report(const Report& rep);
std::string render_report(const nlohmann::json& j);

}  // namespace detgb
