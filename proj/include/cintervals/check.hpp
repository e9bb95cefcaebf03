#pragma once

#include <cassert>
#include <stdexcept>

// CINTERVALS_CHECK is an O(1) internal consistency check. Builds that define
// CINTERVALS_CHECK_INVARIANTS turn violations into std::logic_error (the test
// suites do); otherwise it falls back to assert().
#ifdef CINTERVALS_CHECK_INVARIANTS
#define CINTERVALS_CHECK(cond, msg)                   \
  do {                                                \
    if (!(cond)) throw ::std::logic_error(msg);       \
  } while (false)
#else
#define CINTERVALS_CHECK(cond, msg) assert((cond) && (msg))
#endif
