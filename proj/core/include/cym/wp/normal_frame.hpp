#pragma once

#include "cym/numeric/ctensor.hpp"
#include "cym/wp/geometry.hpp"
#include "cym/wp/yukawa.hpp"

namespace cym {

// Holomorphic frame s around p in which the WP layer is normalized:
//   t(s) = p + A s + 1/2 B(s, s),  Omega' = e^{f(t)} Omega  (f linear)
// chosen so that at s = 0: g = id, Gamma = 0, K_l = 0 and Q(Omega, conj
// Omega) = 1.  A is fixed by the lower-triangular Cholesky convention; B
// kills the Christoffels; f0 and the linear gauge coefficients kill the
// norm and the connection.
struct NormalFrame {
    CVec point;
    CTensor A;    // ambient-from-frame Jacobian at s=0, A(m,a) = dt^m/ds^a
    CTensor L;    // inverse of A (linear part of the frame map)
    CTensor B;    // B(m,a,b) = d^2 t^m / ds^a ds^b, symmetric in (a,b)
    Cplx f0{};    // gauge value at p, = -1/2 log P(p)
    CVec c;       // gauge gradient, c_l = K_l(p)
    CTensor F;    // transported Yukawa, totally symmetric
    CTensor Fcov; // transported covariant Yukawa derivative
    CTensor h;    // unit-frame Hodge metric 2 delta + F conj F
};

NormalFrame normal_frame(const PeriodJet& jet, const WpGeometry& wp,
                         const YukawaData& yuk);

// t(s) = p + A s + 1/2 B(s,s)
CVec frame_to_ambient(const NormalFrame& fr, const CVec& s);

// dt/ds at s: A(m,a) + sum_b B(m,a,b) s^b
CTensor frame_jacobian(const NormalFrame& fr, const CVec& s);

// The gauge-scaled period jet pulled back through the frame map; evaluating
// the WP layer on this jet must reproduce the normalization exactly (used by
// the defining-property tests).
PeriodJet transformed_jet(const PeriodJet& jet, const NormalFrame& fr);

} // namespace cym
