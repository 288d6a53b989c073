#include "localdeg/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace localdeg {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
}

} // namespace

RngStream::RngStream(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& w : state_) w = splitmix64(s);
}

RngStream RngStream::keyed(std::uint64_t master, std::uint64_t k1,
                           std::uint64_t k2, std::uint64_t k3) {
    // Run each key through the mixer so that nearby (master, k) tuples
    // land on unrelated states.
    std::uint64_t s = master;
    std::uint64_t acc = splitmix64(s);
    s ^= k1 + 0x632be59bd9b4e019ULL;
    acc ^= splitmix64(s);
    s ^= k2 + 0x9e6c63d0876a9a47ULL;
    acc ^= splitmix64(s);
    s ^= k3 + 0xc2b2ae3d27d4eb4fULL;
    acc ^= splitmix64(s);
    return RngStream(acc);
}

std::uint64_t RngStream::next_u64() {
    auto& s = state_;
    const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
}

double RngStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be > 0");
    // rejection from the top to stay unbiased
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

double RngStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
}

double RngStream::gamma(double shape) {
    if (!(shape > 0.0)) throw std::invalid_argument("gamma: shape must be > 0");
    if (shape < 1.0) {
        const double u = uniform01();
        return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

double RngStream::beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
}

long RngStream::binomial(long n, double p) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial: p must be in [0,1]");
    if (n == 0 || p == 0.0) return 0;
    if (p == 1.0) return n;
    if (p > 0.5) return n - binomial(n, 1.0 - p);

    const double q = 1.0 - p;
    const double logp = std::log(p), logq = std::log(q);
    const long mode = static_cast<long>(std::floor((static_cast<double>(n) + 1.0) * p));
    const long m = mode > n ? n : mode;
    const double log_pmf_m = std::lgamma(static_cast<double>(n) + 1.0) -
                             std::lgamma(static_cast<double>(m) + 1.0) -
                             std::lgamma(static_cast<double>(n - m) + 1.0) +
                             static_cast<double>(m) * logp + static_cast<double>(n - m) * logq;
    const double pmf_m = std::exp(log_pmf_m);

    const double u = uniform01();
    double cum = pmf_m;
    if (u < cum) return m;

    // expand outward from the mode, alternating sides
    double up_pmf = pmf_m, dn_pmf = pmf_m;
    long up = m, dn = m;
    const double pq = p / q;
    while (up < n || dn > 0) {
        if (up < n) {
            up_pmf *= static_cast<double>(n - up) / static_cast<double>(up + 1) * pq;
            ++up;
            cum += up_pmf;
            if (u < cum) return up;
        }
        if (dn > 0) {
            dn_pmf *= static_cast<double>(dn) / (static_cast<double>(n - dn + 1) * pq);
            --dn;
            cum += dn_pmf;
            if (u < cum) return dn;
        }
    }
    // u fell into the floating-point tail mass; the far upper tail is
    // the largest unaccounted region
    return n;
}

} // namespace localdeg
