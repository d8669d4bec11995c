#pragma once

#include "diagcount/io.hpp"
#include "diagcount/route.hpp"

namespace diagcount {

struct VerifyResult {
  json report;
  bool consistent = false;
};

// Runs every applicable counting path on one equation (closed forms,
// character sum, enumeration within budget), compares the counts, and
// attaches applicable bound checks. The report is suitable for direct
// printing; `consistent` is false iff two paths disagree, which indicates
// a defect, never bad input.
VerifyResult verify_instance(const Equation& eq, const RouteOptions& opts);

}  // namespace diagcount
