#include "localdeg/connection.hpp"

#include <cmath>

namespace localdeg {

double ConnectionFunction::operator()(double distance) const {
    if (distance < 0.0) distance = 0.0;
    switch (kind_) {
    case Kind::hard_threshold:
        return distance <= param_ ? 1.0 : 0.0;
    case Kind::exponential_decay:
        return std::exp(-param_ * distance);
    }
    return 0.0;
}

} // namespace localdeg
