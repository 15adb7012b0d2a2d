#pragma once

#include <vector>

#include "cym/errors.hpp"
#include "cym/numeric/scalar.hpp"

namespace cym {

// Integral antisymmetric pairing on H^3.  Repo-wide basis convention:
//   Q(v, w) = sum_{a=0}^{n} (v_a w_{a+n+1} - v_{a+n+1} w_a),
// i.e. block form [[0, I], [-I, 0]] on C^{2n+2}; models must be expressed in
// this basis.
class SymplecticForm {
public:
    SymplecticForm() = default;
    explicit SymplecticForm(std::vector<std::vector<long long>> m);

    static SymplecticForm standard(int n);

    int dim() const { return static_cast<int>(m_.size()); }
    long long entry(int i, int j) const
    {
        return m_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    const std::vector<std::vector<long long>>& matrix() const { return m_; }

    template <class C>
    C pair(const std::vector<C>& v, const std::vector<C>& w) const
    {
        C s{};
        const int d = dim();
        for (int i = 0; i < d; ++i) {
            if (v[static_cast<size_t>(i)] == C{})
                continue;
            C row{};
            for (int j = 0; j < d; ++j) {
                long long q = m_[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (q != 0)
                    row += typename C::value_type(q) * w[static_cast<size_t>(j)];
            }
            s += v[static_cast<size_t>(i)] * row;
        }
        return s;
    }

    // sqrt(-1) Q(v, conj w); for w = v this is the hermitian norm ||v||^2
    Cplx norm_pair(const CVec& v, const CVec& w) const;

    // 0 for a well-formed integer form; kept for report completeness
    long long antisymmetry_residual() const;

private:
    std::vector<std::vector<long long>> m_;
};

} // namespace cym
