#include "cym/models/symplectic.hpp"

#include <cmath>
#include <cstdlib>

namespace cym {

namespace {

// integer determinant via fraction-free elimination on a double copy;
// only used to reject degenerate pairings at construction
bool looks_invertible(const std::vector<std::vector<long long>>& m)
{
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<double>> a(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                static_cast<double>(m[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[static_cast<size_t>(r)][static_cast<size_t>(c)]) >
                std::abs(a[static_cast<size_t>(piv)][static_cast<size_t>(c)]))
                piv = r;
        if (std::abs(a[static_cast<size_t>(piv)][static_cast<size_t>(c)]) < 0.5)
            return false; // integer matrix: |pivot| < 1 means 0
        std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(c)]);
        for (int r = c + 1; r < n; ++r) {
            double f = a[static_cast<size_t>(r)][static_cast<size_t>(c)] /
                       a[static_cast<size_t>(c)][static_cast<size_t>(c)];
            for (int k = c; k < n; ++k)
                a[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
                    f * a[static_cast<size_t>(c)][static_cast<size_t>(k)];
        }
    }
    return true;
}

} // namespace

SymplecticForm::SymplecticForm(std::vector<std::vector<long long>> m)
    : m_(std::move(m))
{
    const int d = dim();
    if (d == 0 || d % 2 != 0)
        throw structure_error("SymplecticForm: even positive dimension required");
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(m_[static_cast<size_t>(i)].size()) != d)
            throw structure_error("SymplecticForm: matrix not square");
        for (int j = 0; j < d; ++j)
            if (entry(i, j) != -entry(j, i))
                throw structure_error("SymplecticForm: matrix not antisymmetric");
    }
    if (!looks_invertible(m_))
        throw structure_error("SymplecticForm: degenerate pairing");
}

SymplecticForm SymplecticForm::standard(int n)
{
    const int d = 2 * n + 2;
    std::vector<std::vector<long long>> m(static_cast<size_t>(d),
                                          std::vector<long long>(static_cast<size_t>(d), 0));
    for (int a = 0; a <= n; ++a) {
        m[static_cast<size_t>(a)][static_cast<size_t>(a + n + 1)] = 1;
        m[static_cast<size_t>(a + n + 1)][static_cast<size_t>(a)] = -1;
    }
    return SymplecticForm(std::move(m));
}

Cplx SymplecticForm::norm_pair(const CVec& v, const CVec& w) const
{
    CVec wbar(w.size());
    for (size_t i = 0; i < w.size(); ++i)
        wbar[i] = std::conj(w[i]);
    return Cplx(0, 1) * pair(v, wbar);
}

long long SymplecticForm::antisymmetry_residual() const
{
    long long worst = 0;
    const int d = dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            worst = std::max(worst, std::llabs(entry(i, j) + entry(j, i)));
    return worst;
}

} // namespace cym
