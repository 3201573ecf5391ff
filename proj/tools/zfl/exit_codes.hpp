#pragma once

#include <cstdint>

#include "zfl/zfl.h"

namespace zfl_cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitPrecondition = 2,
  kExitCounterexample = 3,
  kExitInternal = 4,
};

/// Exit status for a finished library call. A counterexample outranks
/// success so that scripts can tell findings from clean runs.
inline int exit_code_for(zfl_status status, std::uint64_t counterexamples = 0) {
  if (status == ZFL_ERR_INTERNAL) return kExitInternal;
  if (status != ZFL_OK) return kExitPrecondition;
  return counterexamples > 0 ? kExitCounterexample : kExitOk;
}

}  // namespace zfl_cli
