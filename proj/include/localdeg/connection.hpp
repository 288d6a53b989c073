#pragma once

#include <stdexcept>

namespace localdeg {

/// Non-increasing connection function rho: [0, inf) -> [0, 1].
class ConnectionFunction {
public:
    enum class Kind { hard_threshold, exponential_decay };

    /// rho(x) = 1{x <= alpha}, alpha >= 0.
    static ConnectionFunction hard_threshold(double alpha) {
        if (!(alpha >= 0.0))
            throw std::invalid_argument("hard_threshold: alpha must be >= 0");
        return ConnectionFunction(Kind::hard_threshold, alpha);
    }

    /// rho(x) = exp(-rate * x), rate > 0.
    static ConnectionFunction exponential_decay(double rate) {
        if (!(rate > 0.0))
            throw std::invalid_argument("exponential_decay: rate must be > 0");
        return ConnectionFunction(Kind::exponential_decay, rate);
    }

    double operator()(double distance) const;

    Kind kind() const { return kind_; }
    double parameter() const { return param_; }

private:
    ConnectionFunction(Kind k, double p) : kind_(k), param_(p) {}
    Kind kind_;
    double param_;
};

} // namespace localdeg
