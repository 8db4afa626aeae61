#pragma once

#include <ostream>

#include "brauer/cli/report.hpp"
#include "brauer/cli/request.hpp"

namespace brauer::cli {

/// Dispatches a validated request. Every library error becomes a report with
/// a diagnostic and the matching exit status; nothing escapes.
Report run(const Request& request);

/// Full command line: argument parsing, dispatch and output.
int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace brauer::cli
