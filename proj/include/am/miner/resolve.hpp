#pragma once

#include <map>

#include "am/frontend/elaborate.hpp"
#include "am/miner/assertion.hpp"
#include "am/structural/io_table.hpp"

namespace am::miner {

// Resolves every `scope.signal` reference against the design hierarchy.
// The scope must match a unique module name, or failing that a unique
// instance-name suffix; the signal must be a port of that module. A bare
// clock name is accepted when it is a top-level port. Full resolution
// promotes status to Resolved; any failure leaves the status at SyntaxOk
// with per-reference diagnostics (unknown module, ambiguous instance,
// non-port signal). Raw assertions pass through untouched.
DeepAssertion resolve_signals(
    DeepAssertion a, const frontend::DesignDB& db,
    const std::map<std::string, structural::IoTable>& tables);

} // namespace am::miner
