#include "cym/numeric/jets.hpp"

#include <algorithm>

#include "cym/errors.hpp"

namespace cym {

int midx_order(const MIdx& a)
{
    int s = 0;
    for (int k : a)
        s += k;
    return s;
}

namespace {

// multi-indices with |alpha| == remaining, graded enumeration helper
void enumerate_exact(int nvars, int remaining, MIdx& cur, int pos,
                     std::vector<MIdx>& out)
{
    if (pos == nvars - 1) {
        cur[static_cast<size_t>(pos)] = remaining;
        out.push_back(cur);
        cur[static_cast<size_t>(pos)] = 0;
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        cur[static_cast<size_t>(pos)] = k;
        enumerate_exact(nvars, remaining - k, cur, pos + 1, out);
    }
    cur[static_cast<size_t>(pos)] = 0;
}

} // namespace

std::vector<MIdx> all_midx(int nvars, int max_order)
{
    std::vector<MIdx> out;
    MIdx cur(static_cast<size_t>(nvars), 0);
    for (int total = 0; total <= max_order; ++total)
        enumerate_exact(nvars, total, cur, 0, out);
    return out;
}

MIdx midx_from_indices(int nvars, const std::vector<int>& indices)
{
    MIdx a(static_cast<size_t>(nvars), 0);
    for (int i : indices)
        a[static_cast<size_t>(i)]++;
    return a;
}

std::vector<int> indices_from_midx(const MIdx& a)
{
    std::vector<int> out;
    for (int v = 0; v < static_cast<int>(a.size()); ++v)
        for (int k = 0; k < a[static_cast<size_t>(v)]; ++k)
            out.push_back(v);
    return out;
}

const CVec& VecJet::at(const MIdx& a) const
{
    auto it = d.find(a);
    if (it == d.end())
        throw domain_error("VecJet: multi-index not present (order too high?)");
    return it->second;
}

CVec& VecJet::slot(const MIdx& a)
{
    auto it = d.find(a);
    if (it == d.end())
        it = d.emplace(a, CVec(vec_len, Cplx(0))).first;
    return it->second;
}

namespace {

using Block = std::vector<int>;          // positions, size 1 or 2
using Partition = std::vector<Block>;

// all partitions of {0..k-1} into blocks of size <= 2
void partitions_rec(std::vector<int> elems, Partition& cur,
                    std::vector<Partition>& out)
{
    if (elems.empty()) {
        out.push_back(cur);
        return;
    }
    int x = elems.front();
    std::vector<int> rest(elems.begin() + 1, elems.end());

    cur.push_back({x});
    partitions_rec(rest, cur, out);
    cur.pop_back();

    for (size_t i = 0; i < rest.size(); ++i) {
        std::vector<int> rem;
        for (size_t j = 0; j < rest.size(); ++j)
            if (j != i)
                rem.push_back(rest[j]);
        cur.push_back({x, rest[i]});
        partitions_rec(rem, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_le2(int k)
{
    std::vector<int> elems(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        elems[static_cast<size_t>(i)] = i;
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(elems, cur, out);
    return out;
}

// iterate all tuples (m_1..m_q) in [0,nvars)^q
template <class F>
void for_each_tuple(int nvars, int q, F&& f)
{
    std::vector<int> m(static_cast<size_t>(q), 0);
    while (true) {
        f(m);
        int pos = q - 1;
        while (pos >= 0) {
            if (++m[static_cast<size_t>(pos)] < nvars)
                break;
            m[static_cast<size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0)
            break;
    }
}

} // namespace

VecJet compose_quadratic(const VecJet& jet, const CTensor& A, const CTensor& B)
{
    const int n = jet.nvars;
    VecJet out;
    out.nvars = n;
    out.order = jet.order;
    out.vec_len = jet.vec_len;

    for (const MIdx& alpha : all_midx(n, jet.order)) {
        std::vector<int> list = indices_from_midx(alpha);
        const int k = static_cast<int>(list.size());
        CVec acc(jet.vec_len, Cplx(0));
        if (k == 0) {
            acc = jet.at(MIdx(static_cast<size_t>(n), 0));
        } else {
            for (const Partition& part : partitions_le2(k)) {
                const int q = static_cast<int>(part.size());
                for_each_tuple(n, q, [&](const std::vector<int>& m) {
                    Cplx w(1);
                    for (int b = 0; b < q; ++b) {
                        const Block& blk = part[static_cast<size_t>(b)];
                        int mm = m[static_cast<size_t>(b)];
                        if (blk.size() == 1)
                            w *= A(mm, list[static_cast<size_t>(blk[0])]);
                        else
                            w *= B(mm, list[static_cast<size_t>(blk[0])],
                                   list[static_cast<size_t>(blk[1])]);
                    }
                    if (w == Cplx(0))
                        return;
                    const CVec& dv = jet.at(midx_from_indices(n, m));
                    for (size_t a = 0; a < acc.size(); ++a)
                        acc[a] += w * dv[a];
                });
            }
        }
        out.d.emplace(alpha, std::move(acc));
    }
    return out;
}

VecJet gauge_exp_multiply(const VecJet& jet, Cplx f0, const CVec& c,
                          const CTensor& dquad)
{
    const int n = jet.nvars;
    const Cplx e0 = std::exp(f0);

    // scalar jet of exp(f) with f quadratic: partitions into blocks <= 2
    auto exp_deriv = [&](const std::vector<int>& list) -> Cplx {
        if (list.empty())
            return e0;
        Cplx sum(0);
        for (const Partition& part : partitions_le2(static_cast<int>(list.size()))) {
            Cplx w(1);
            for (const Block& blk : part) {
                if (blk.size() == 1)
                    w *= c[static_cast<size_t>(list[static_cast<size_t>(blk[0])])];
                else
                    w *= dquad(list[static_cast<size_t>(blk[0])],
                               list[static_cast<size_t>(blk[1])]);
            }
            sum += w;
        }
        return e0 * sum;
    };

    VecJet out;
    out.nvars = n;
    out.order = jet.order;
    out.vec_len = jet.vec_len;

    for (const MIdx& alpha : all_midx(n, jet.order)) {
        std::vector<int> list = indices_from_midx(alpha);
        const int k = static_cast<int>(list.size());
        CVec acc(jet.vec_len, Cplx(0));
        // Leibniz over position subsets
        for (int mask = 0; mask < (1 << k); ++mask) {
            std::vector<int> sub, restv;
            for (int p = 0; p < k; ++p)
                ((mask >> p) & 1 ? sub : restv).push_back(list[static_cast<size_t>(p)]);
            Cplx ew = exp_deriv(sub);
            if (ew == Cplx(0))
                continue;
            const CVec& dv = jet.at(midx_from_indices(n, restv));
            for (size_t a = 0; a < acc.size(); ++a)
                acc[a] += ew * dv[a];
        }
        out.d.emplace(alpha, std::move(acc));
    }
    return out;
}

} // namespace cym
