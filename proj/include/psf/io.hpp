#pragma once

#include "psf/decompose.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace psf {

/// One facet per line, vertex labels separated by whitespace, `#` to end of line is a comment.
/// Throws ParseError with "line L, column C" in the message.
Complex parse_facets(std::string_view text);
/// Canonical form: sorted facets, sorted vertices, one per line.
std::string print_facets(const Complex& K);

Complex read_facet_file(const std::string& path);
void write_facet_file(const std::string& path, const Complex& K);

/// One row of the g-ledger written while a build script runs.
struct LedgerEntry
{
    int step = 0;
    std::string op;
    std::int64_t dg2 = 0;
    std::int64_t dg3 = 0;
    /// The change the identities predict; absent for steps that create a complex.
    std::optional<std::pair<std::int64_t, std::int64_t>> expected;
    bool ok = true;
};

struct BuildResult
{
    Complex complex;
    std::vector<LedgerEntry> ledger;

    bool ledger_ok() const;
};

/**
 * Run a build script: {"version": 1, "steps": [{"op": ..., "args": {...}}, ...]}.
 *
 * The first step creates the complex (boundary_simplex, stacked_sphere, stacked_chain,
 * facets); later steps transform it (facet_subdivision, connected_sum, vertex_fold,
 * edge_fold, handle). Folds take either explicit "source"/"target" lists or a
 * "seed" for a randomised search. Throws SchemaError, ParseError, and the
 * constructors' own errors. `fault` skews every prediction by one, to prove the
 * ledger check can fail.
 */
BuildResult run_script(std::string_view json_text, bool fault = false);

std::string tree_to_json(const DecompositionTree& tree);
/// Throws MalformedTree or SchemaError.
DecompositionTree tree_from_json(std::string_view text);

} // namespace psf
