#pragma once

#include <string>

#include "am/miner/assertion.hpp"

namespace am::miner {

// The unified output format every mined assertion must conform to:
//   assert property (@(posedge <CLK>) (<AP>...) |-> (<AP>...));
// published verbatim in mining prompts and docs.
extern const char* kAssertionTemplate;

// Parses `a.raw` against the template grammar. On success the clock,
// antecedent, and consequent trees are populated and status becomes
// SyntaxOk; on failure the status stays Raw and a located diagnostic is
// appended. Never throws.
DeepAssertion validate_syntax(DeepAssertion a);

// Canonical rendering of a syntax-checked assertion. parse(print(parse(x)))
// is a fixpoint.
std::string print_assertion(const DeepAssertion& a);

} // namespace am::miner
