#pragma once

#include <string>

namespace sea {

// Integral values print without a decimal point; everything else uses the
// shortest representation that round-trips, so output is stable and diff-able.
std::string format_number(double v);

} // namespace sea
