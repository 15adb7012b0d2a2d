#include "cym/numeric/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cym/errors.hpp"

namespace cym {

Real CTensor::symmetry_residual() const
{
    if (sym_ == Symmetry::none || shape_.empty())
        return 0.0;
    Real worst = 0.0;
    if (sym_ == Symmetry::hermitian || sym_ == Symmetry::antisymmetric) {
        const int n = shape_[0];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Cplx a = (*this)(i, j);
                Cplx b = (*this)(j, i);
                Cplx want = (sym_ == Symmetry::hermitian) ? std::conj(b) : -b;
                worst = std::max(worst, std::abs(a - want));
            }
        return worst;
    }
    // totally symmetric: compare against the sorted-index representative
    const int r = rank();
    std::vector<int> ix(static_cast<size_t>(r), 0);
    const int n = shape_[0];
    size_t total = size();
    for (size_t flat = 0; flat < total; ++flat) {
        size_t rem = flat;
        for (int a = r - 1; a >= 0; --a) {
            ix[static_cast<size_t>(a)] = static_cast<int>(rem % static_cast<size_t>(n));
            rem /= static_cast<size_t>(n);
        }
        std::vector<int> srt = ix;
        std::sort(srt.begin(), srt.end());
        worst = std::max(worst, std::abs(at(ix) - at(srt)));
    }
    return worst;
}

void CTensor::validate(Real rtol) const
{
    if (sym_ == Symmetry::none)
        return;
    Real scale = std::max(max_abs(), Real(1));
    Real res = symmetry_residual();
    if (res > rtol * scale)
        throw symmetry_error("tensor violates declared symmetry, residual " +
                             std::to_string(res));
    if (sym_ == Symmetry::hermitian) {
        const int n = shape_[0];
        for (int i = 0; i < n; ++i)
            if (std::abs((*this)(i, i).imag()) > rtol * scale)
                throw symmetry_error("hermitian tensor has non-real diagonal");
    }
}

CTensor conj(const CTensor& t)
{
    CTensor out = t;
    for (Cplx& z : out.data())
        z = std::conj(z);
    return out;
}

namespace {

void require_square(const CTensor& A, const char* who)
{
    if (A.rank() != 2 || A.dim(0) != A.dim(1))
        throw domain_error(std::string(who) + ": square rank-2 tensor required");
}

} // namespace

HermEigen herm_eigen_full(const CTensor& H, Real herm_tol, Real resid_tol)
{
    require_square(H, "herm_eigen");
    const int n = H.dim(0);
    Real scale = std::max(H.max_abs(), Real(1));

    // symmetry gate: declared or not, the input must be hermitian
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(H(i, j) - std::conj(H(j, i))) > herm_tol * scale)
                throw symmetry_error("herm_eigen: input is not hermitian");

    // work on the hermitized copy so the iteration sees an exact input
    CTensor A({n, n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            A(i, j) = 0.5 * (H(i, j) + std::conj(H(j, i)));

    CTensor V = CTensor::identity(n);

    auto off_norm = [&]() {
        Real s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j)
                    s += std::norm(A(i, j));
        return std::sqrt(s);
    };

    // cyclic complex Jacobi sweeps
    for (int sweep = 0; sweep < 100 && off_norm() > 1e-15 * scale; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                Cplx apq = A(p, q);
                if (std::abs(apq) <= 1e-300)
                    continue;
                Real app = A(p, p).real();
                Real aqq = A(q, q).real();
                // unitary 2x2: diag(1, e^{-i phi}) rotation reduces to the
                // real symmetric case
                Real absapq = std::abs(apq);
                Cplx phase = apq / absapq;
                Real tau = (aqq - app) / (2.0 * absapq);
                Real t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                Real c = 1.0 / std::sqrt(1.0 + t * t);
                Real s = t * c;
                Cplx sp = s * phase; // complex sine carrying the phase

                for (int k = 0; k < n; ++k) {
                    Cplx akp = A(k, p);
                    Cplx akq = A(k, q);
                    A(k, p) = c * akp - std::conj(sp) * akq;
                    A(k, q) = sp * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    Cplx apk = A(p, k);
                    Cplx aqk = A(q, k);
                    A(p, k) = c * apk - sp * aqk;
                    A(q, k) = std::conj(sp) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    Cplx vkp = V(k, p);
                    Cplx vkq = V(k, q);
                    V(k, p) = c * vkp - std::conj(sp) * vkq;
                    V(k, q) = sp * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return A(a, a).real() < A(b, b).real(); });

    HermEigen out;
    out.values.resize(static_cast<size_t>(n));
    out.vectors = CTensor({n, n});
    for (int j = 0; j < n; ++j) {
        out.values[static_cast<size_t>(j)] = A(order[static_cast<size_t>(j)],
                                               order[static_cast<size_t>(j)]).real();
        for (int i = 0; i < n; ++i)
            out.vectors(i, j) = V(i, order[static_cast<size_t>(j)]);
    }

    // reconstruction residual against the original (hermitized) input
    Real resid = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Cplx hv(0);
            for (int k = 0; k < n; ++k)
                hv += 0.5 * (H(i, k) + std::conj(H(k, i))) * out.vectors(k, j);
            hv -= out.values[static_cast<size_t>(j)] * out.vectors(i, j);
            resid = std::max(resid, std::abs(hv));
        }
    if (resid > resid_tol * scale)
        throw precision_error("herm_eigen: reconstruction residual " +
                                  std::to_string(resid),
                              resid);
    return out;
}

std::vector<Real> herm_eigen(const CTensor& H, Real herm_tol, Real resid_tol)
{
    return herm_eigen_full(H, herm_tol, resid_tol).values;
}

CTensor cholesky_lower(const CTensor& H)
{
    require_square(H, "cholesky_lower");
    const int n = H.dim(0);
    CTensor L({n, n});
    for (int j = 0; j < n; ++j) {
        Real d = H(j, j).real();
        for (int k = 0; k < j; ++k)
            d -= std::norm(L(j, k));
        if (d <= 0.0)
            throw inversion_error("cholesky_lower: matrix not positive definite");
        L(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            Cplx s = H(i, j);
            for (int k = 0; k < j; ++k)
                s -= L(i, k) * std::conj(L(j, k));
            L(i, j) = s / L(j, j).real();
        }
    }
    return L;
}

CTensor inverse(const CTensor& A)
{
    require_square(A, "inverse");
    const int n = A.dim(0);
    CTensor M = A;
    CTensor I = CTensor::identity(n);
    I.set_symmetry(Symmetry::none);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(M(r, col)) > std::abs(M(piv, col)))
                piv = r;
        if (std::abs(M(piv, col)) < 1e-300)
            throw inversion_error("inverse: singular matrix");
        if (piv != col)
            for (int c = 0; c < n; ++c) {
                std::swap(M(piv, c), M(col, c));
                std::swap(I(piv, c), I(col, c));
            }
        Cplx d = M(col, col);
        for (int c = 0; c < n; ++c) {
            M(col, c) /= d;
            I(col, c) /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col)
                continue;
            Cplx f = M(r, col);
            if (f == Cplx(0))
                continue;
            for (int c = 0; c < n; ++c) {
                M(r, c) -= f * M(col, c);
                I(r, c) -= f * I(col, c);
            }
        }
    }
    return I;
}

CTensor matmul(const CTensor& A, const CTensor& B)
{
    const int n = A.dim(0), k = A.dim(1), m = B.dim(1);
    CTensor C({n, m});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            Cplx s(0);
            for (int p = 0; p < k; ++p)
                s += A(i, p) * B(p, j);
            C(i, j) = s;
        }
    return C;
}

CTensor adjoint(const CTensor& A)
{
    const int n = A.dim(0), m = A.dim(1);
    CTensor B({m, n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            B(j, i) = std::conj(A(i, j));
    return B;
}

CTensor transpose(const CTensor& A)
{
    const int n = A.dim(0), m = A.dim(1);
    CTensor B({m, n});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            B(j, i) = A(i, j);
    return B;
}

CVec matvec(const CTensor& A, const CVec& v)
{
    const int n = A.dim(0), m = A.dim(1);
    CVec out(static_cast<size_t>(n), Cplx(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            out[static_cast<size_t>(i)] += A(i, j) * v[static_cast<size_t>(j)];
    return out;
}

Real frobenius_norm(const CTensor& A)
{
    Real s = 0;
    for (const Cplx& z : A.data())
        s += std::norm(z);
    return std::sqrt(s);
}

Cplx det(const CTensor& A)
{
    require_square(A, "det");
    const int n = A.dim(0);
    CTensor M = A;
    Cplx d(1);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(M(r, col)) > std::abs(M(piv, col)))
                piv = r;
        if (std::abs(M(piv, col)) < 1e-300)
            return Cplx(0);
        if (piv != col) {
            for (int c = 0; c < n; ++c)
                std::swap(M(piv, c), M(col, c));
            d = -d;
        }
        d *= M(col, col);
        for (int r = col + 1; r < n; ++r) {
            Cplx f = M(r, col) / M(col, col);
            for (int c = col; c < n; ++c)
                M(r, c) -= f * M(col, c);
        }
    }
    return d;
}

Real min_eigenvalue(const CTensor& H)
{
    auto ev = herm_eigen(H);
    return ev.front();
}

Real max_eigenvalue(const CTensor& H)
{
    auto ev = herm_eigen(H);
    return ev.back();
}

bool is_positive_definite(const CTensor& H, Real tol)
{
    try {
        return min_eigenvalue(H) > tol;
    } catch (const symmetry_error&) {
        return false;
    }
}

} // namespace cym
