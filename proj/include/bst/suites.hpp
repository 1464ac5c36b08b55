#ifndef BST_SUITES_HPP
#define BST_SUITES_HPP

#include <optional>
#include <string>
#include <vector>

#include "bst/render.hpp"

namespace bst {

enum class SuiteKind { identities, triangles, duality, egf, congruences, all };

std::optional<SuiteKind> parse_suite_kind(const std::string& name);

struct ClaimResult {
    std::string id;
    std::string params;
    bool pass = false;
    std::string detail;  // lhs/rhs or valuation summary
};

// Runs the named property suite over the configured bounds. Cells are
// evaluated and collected in a fixed order, so output is deterministic.
std::vector<ClaimResult> run_suite(SuiteKind suite, const SweepConfig& cfg);

std::string render_claim(const ClaimResult& r, OutputFormat format);

}  // namespace bst

#endif
