#pragma once

#include <string>
#include <vector>

#include "am/miner/assertion.hpp"

namespace am::miner {

// Writes the resolved assertions to `path` (UTF-8, LF, one per line, a
// `// source: <feature id>` comment above each, ordered by module then
// feature id, identical texts deduplicated) and the raw text of everything
// else to `path + ".rejected.txt"`. Returns the counts and one verdict
// line per input assertion.
ValidationReport emit_sva(const std::vector<DeepAssertion>& assertions,
                          const std::string& path);

// Counting and verdicts only, no file I/O.
ValidationReport build_report(const std::vector<DeepAssertion>& assertions);

} // namespace am::miner
