#ifndef CLIFFT_RNG_HPP
#define CLIFFT_RNG_HPP

#include <cstdint>
#include <vector>

#include "clifft/multivector.hpp"

namespace clifft {

// SplitMix64: tiny seeded generator with a fixed cross-platform output
// sequence, so verification runs are reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0,1).
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * next_double(); }

    Vector point(int dim, double lo, double hi)
    {
        Vector x(dim);
        for (auto& v : x) v = uniform(lo, hi);
        return x;
    }

    // Uniform direction scaled to |x| <= rmax (uniform radius, not volume).
    Vector ball_point(int dim, double rmax)
    {
        for (;;) {
            Vector x = point(dim, -1.0, 1.0);
            const double n2 = norm2(x);
            if (n2 > 1e-12 && n2 <= 1.0) {
                const double r = rmax * next_double() / std::sqrt(n2);
                for (auto& v : x) v *= r;
                return x;
            }
        }
    }

private:
    std::uint64_t state_;
};

} // namespace clifft

#endif
