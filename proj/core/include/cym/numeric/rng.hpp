#pragma once

#include <cmath>
#include <cstdint>

#include "cym/numeric/scalar.hpp"

namespace cym {

// Deterministic generator for direction sampling and property tests.
// splitmix64 core with explicit double extraction, so streams are
// reproducible independent of the standard library's distributions.
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

    // uniform in [0,1)
    Real uniform() { return Real(next_u64() >> 11) * 0x1.0p-53; }

    Real uniform(Real lo, Real hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller
    Real gaussian()
    {
        Real u1 = uniform();
        Real u2 = uniform();
        if (u1 < 1e-300)
            u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    Cplx cgaussian() { Real a = gaussian(); Real b = gaussian(); return {a, b}; }

    CVec cgaussian_vec(int n)
    {
        CVec v(static_cast<size_t>(n));
        for (auto& z : v)
            z = cgaussian();
        return v;
    }

private:
    std::uint64_t state_;
};

} // namespace cym
