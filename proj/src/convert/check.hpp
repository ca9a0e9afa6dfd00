#pragma once

#include "pwitness/errors.hpp"

// Internal postconditions. Cheap next to the exact solves they guard, so
// they stay on in release builds.
#define PW_ENSURE(cond, msg)                          \
  do {                                                \
    if (!(cond)) throw ::pw::InternalError(msg);      \
  } while (0)
