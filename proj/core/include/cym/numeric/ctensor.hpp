#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "cym/errors.hpp"
#include "cym/numeric/scalar.hpp"

namespace cym {

enum class Symmetry { none, totally_symmetric, hermitian, antisymmetric };

// Dense complex tensor of small rank (<= 4 in practice: metrics, Yukawa
// tensors, curvature tensors).  Row-major storage, value semantics.
class CTensor {
public:
    CTensor() = default;

    explicit CTensor(std::vector<int> shape, Symmetry sym = Symmetry::none)
        : shape_(std::move(shape)), sym_(sym)
    {
        size_t total = 1;
        for (int d : shape_)
            total *= static_cast<size_t>(d);
        data_.assign(total, Cplx(0));
    }

    static CTensor identity(int n)
    {
        CTensor t({n, n}, Symmetry::hermitian);
        for (int i = 0; i < n; ++i)
            t(i, i) = Cplx(1);
        return t;
    }

    const std::vector<int>& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    int dim(int axis) const { return shape_[static_cast<size_t>(axis)]; }
    size_t size() const { return data_.size(); }
    Symmetry symmetry() const { return sym_; }
    void set_symmetry(Symmetry s) { sym_ = s; }

    const std::vector<Cplx>& data() const { return data_; }
    std::vector<Cplx>& data() { return data_; }

    Cplx& operator()(int i) { return data_[idx({i})]; }
    Cplx operator()(int i) const { return data_[idx({i})]; }
    Cplx& operator()(int i, int j) { return data_[idx({i, j})]; }
    Cplx operator()(int i, int j) const { return data_[idx({i, j})]; }
    Cplx& operator()(int i, int j, int k) { return data_[idx({i, j, k})]; }
    Cplx operator()(int i, int j, int k) const { return data_[idx({i, j, k})]; }
    Cplx& operator()(int i, int j, int k, int l) { return data_[idx({i, j, k, l})]; }
    Cplx operator()(int i, int j, int k, int l) const { return data_[idx({i, j, k, l})]; }

    Cplx& at(const std::vector<int>& ix) { return data_[idx(ix)]; }
    Cplx at(const std::vector<int>& ix) const { return data_[idx(ix)]; }

    Real max_abs() const
    {
        Real m = 0;
        for (const Cplx& z : data_)
            m = std::max(m, std::abs(z));
        return m;
    }

    // Largest violation of the declared symmetry, absolute.
    Real symmetry_residual() const;

    // Throws symmetry_error when the declared symmetry is violated beyond
    // rtol * max_abs().
    void validate(Real rtol = 1e-12) const;

private:
    size_t idx(std::initializer_list<int> ix) const { return offset(ix.begin(), ix.size()); }
    size_t idx(const std::vector<int>& ix) const { return offset(ix.data(), ix.size()); }

    size_t offset(const int* ix, size_t k) const
    {
        size_t off = 0;
        for (size_t a = 0; a < k; ++a)
            off = off * static_cast<size_t>(shape_[a]) + static_cast<size_t>(ix[a]);
        return off;
    }

    std::vector<int> shape_;
    std::vector<Cplx> data_;
    Symmetry sym_ = Symmetry::none;
};

CTensor conj(const CTensor& t);

} // namespace cym
