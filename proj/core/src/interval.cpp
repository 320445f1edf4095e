#include "wquad/interval.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace wquad {

Interval make_interval(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || a > b) {
        throw std::domain_error("interval: endpoints must be finite with a <= b, got [" +
                                std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    return {a, b};
}

}  // namespace wquad
