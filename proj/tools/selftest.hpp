#pragma once

#include "eulerhall/json_io.hpp"

namespace eulerhall::cli {

/// Fast embedded property checks over fixed seeds. The report is identical
/// across runs; "passed" is the conjunction of every check.
Json run_selftest();

}  // namespace eulerhall::cli
