#pragma once

#include <array>
#include <cstdint>

namespace localdeg {

/// Deterministic random stream (xoshiro256++ core, splitmix64 seeding).
///
/// All variate transforms are implemented here rather than through
/// <random> distributions, whose output is implementation-defined. A
/// given (seed, call sequence) therefore produces the same numbers on
/// every build, which the reproducibility contract of the toolkit
/// depends on.
///
/// Substreams: `RngStream::keyed(master, k...)` mixes the master seed
/// with up to three 64-bit keys, giving independent, indexable streams
/// (one per replicate, per split, per study) so that parallel and
/// serial executions of a study consume identical randomness.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    static RngStream keyed(std::uint64_t master,
                           std::uint64_t k1,
                           std::uint64_t k2 = 0,
                           std::uint64_t k3 = 0);

    std::uint64_t next_u64();

    /// Uniform on [0,1), 53-bit resolution.
    double uniform01();

    /// Uniform integer in [0, bound), unbiased. bound must be > 0.
    std::uint64_t uniform_below(std::uint64_t bound);

    /// Standard normal (Marsaglia polar method, spare value cached).
    double normal();

    /// Gamma(shape, 1), shape > 0 (Marsaglia-Tsang, with the
    /// U^(1/shape) boost for shape < 1).
    double gamma(double shape);

    /// Beta(a, b), a, b > 0.
    double beta(double a, double b);

    /// Binomial(n, p) by inversion around the mode; exact for any n
    /// that fits in a long (log-pmf started from lgamma, then ratio
    /// recurrences outward).
    long binomial(long n, double p);

private:
    std::array<std::uint64_t, 4> state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace localdeg
