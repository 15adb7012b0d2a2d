#pragma once

#include <complex>
#include <vector>

// Scalar abstraction: all floating arithmetic in the library goes through
// these aliases.  Code that must survive deep degeneration scans (small |z|,
// where log-ladder cancellations eat mantissa bits) is templated on the real
// type R so an extended-precision scalar can be substituted without touching
// the call sites; see degen/degeneration.hpp.

namespace cym {

using Real = double;
using Cplx = std::complex<Real>;
using CVec = std::vector<Cplx>;

template <class R>
using Cx = std::complex<R>;

inline constexpr Real kPi = 3.14159265358979323846264338327950288;

// 2*pi*i as the scaling between integer monodromy logs and log z ladders.
inline const Cplx kTwoPiI{0.0, 2.0 * kPi};

template <class R>
Cx<R> two_pi_i()
{
    return Cx<R>(R(0), R(2) * R(3.14159265358979323846264338327950288L));
}

inline bool finite(Cplx z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline bool finite(const CVec& v)
{
    for (Cplx z : v)
        if (!finite(z))
            return false;
    return true;
}

} // namespace cym
