#include "koszul_oracle.hpp"

#include <algorithm>
#include <tuple>

namespace koszul_oracle {

namespace {

struct Basis
{
    std::vector<int> exps;
    std::uint32_t subset = 0;
    bool operator<(const Basis& o) const { return std::tie(subset, exps) < std::tie(o.subset, o.exps); }
};

// all exponent vectors on free generators with the given total weight
void monomials(const std::vector<int>& weights, std::uint32_t killed, std::size_t k, int left, std::vector<int>& cur,
               std::vector<std::vector<int>>& out)
{
    if (k == weights.size()) {
        if (left == 0)
            out.push_back(cur);
        return;
    }
    if (killed >> k & 1u) {
        cur[k] = 0;
        monomials(weights, killed, k + 1, left, cur, out);
        return;
    }
    for (int e = 0; e * weights[k] <= left; ++e) {
        cur[k] = e;
        monomials(weights, killed, k + 1, left - e * weights[k], cur, out);
    }
    cur[k] = 0;
}

std::vector<Basis> chains(const std::vector<int>& weights, std::uint32_t killed, int index, int weight)
{
    std::vector<Basis> out;
    const std::uint32_t n = static_cast<std::uint32_t>(weights.size());
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        int count = 0, w = 0;
        for (std::uint32_t k = 0; k < n; ++k)
            if (s >> k & 1u) {
                ++count;
                w += weights[k];
            }
        if (count != index || w > weight)
            continue;
        std::vector<std::vector<int>> ms;
        std::vector<int> cur(n, 0);
        monomials(weights, killed, 0, weight - w, cur, ms);
        for (auto& m : ms)
            out.push_back({m, s});
    }
    std::sort(out.begin(), out.end());
    return out;
}

int rank_mod(std::vector<std::vector<long>> m, long p)
{
    if (m.empty())
        return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[rank]);
        long inv = 1;
        while (m[rank][c] * inv % p != 1)
            ++inv;
        for (auto& x : m[rank])
            x = x * inv % p;
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            const long f = m[r][c];
            if (f == 0)
                continue;
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// matrix of d: C_index -> C_{index-1}, rows indexed by source cells
int differential_rank(const std::vector<int>& weights, std::uint32_t killed, int index, int weight, long p)
{
    if (index <= 0)
        return 0;
    auto src = chains(weights, killed, index, weight);
    auto dst = chains(weights, killed, index - 1, weight);
    if (src.empty() || dst.empty())
        return 0;
    std::map<Basis, std::size_t> col;
    for (std::size_t j = 0; j < dst.size(); ++j)
        col[dst[j]] = j;
    std::vector<std::vector<long>> mat(src.size(), std::vector<long>(dst.size(), 0));
    for (std::size_t r = 0; r < src.size(); ++r) {
        int position = 0;
        for (std::size_t k = 0; k < weights.size(); ++k) {
            if (!(src[r].subset >> k & 1u))
                continue;
            const long sign = position % 2 ? p - 1 : 1;
            ++position;
            if (killed >> k & 1u)
                continue;
            Basis t = src[r];
            t.subset &= ~(1u << k);
            t.exps[k] += 1;
            mat[r][col.at(t)] = (mat[r][col.at(t)] + sign) % p;
        }
    }
    return rank_mod(mat, p);
}

}  // namespace

std::map<std::pair<int, int>, Dims> homology(const std::vector<int>& weights, std::uint32_t killed_mask, long p,
                                             int max_weight)
{
    std::map<std::pair<int, int>, Dims> out;
    const int n = static_cast<int>(weights.size());
    for (int w = 0; w <= max_weight; ++w) {
        for (int i = 0; i <= n; ++i) {
            const int dim = static_cast<int>(chains(weights, killed_mask, i, w).size());
            if (dim == 0)
                continue;
            const int h = dim - differential_rank(weights, killed_mask, i, w, p)
                          - differential_rank(weights, killed_mask, i + 1, w, p);
            out[{w, i}] = {dim, h};
        }
    }
    return out;
}

}  // namespace koszul_oracle
