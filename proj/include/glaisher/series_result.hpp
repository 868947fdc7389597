#ifndef GLAISHER_SERIES_RESULT_HPP
#define GLAISHER_SERIES_RESULT_HPP

#include <string>

#include "glaisher/bigreal.hpp"

namespace glaisher {

// Universal return shape for truncated summations and quadratures: the value,
// how many terms were accumulated, an absolute bound on the discarded tail,
// and whether that bound met the caller's tolerance. `note` carries optional
// diagnostics (for example when a series fails to stabilize).
struct SeriesResult {
    BigReal value;
    unsigned long terms_used = 0;
    BigReal tail_bound;
    bool converged = false;
    std::string note;

    SeriesResult() : value(kMinPrecision), tail_bound(kMinPrecision) {}
    SeriesResult(BigReal v, unsigned long n, BigReal tail, bool ok,
                 std::string note_ = {})
        : value(std::move(v)),
          terms_used(n),
          tail_bound(std::move(tail)),
          converged(ok),
          note(std::move(note_)) {}
};

} // namespace glaisher

#endif
