#include "sea/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>

namespace sea {

std::string format_number(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    char buf[64];
    const auto result = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, result.ptr);
}

} // namespace sea
