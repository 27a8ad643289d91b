#include "motsteen/sparse_fp.hpp"

#include <algorithm>

namespace motsteen {

SparseVector axpy(const SparseVector& x, std::uint32_t a, const SparseVector& y, Prime p)
{
    if (a == 0)
        return x;
    SparseVector out;
    out.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == x.end() || j->first < i->first) {
            out.emplace_back(j->first, mul_mod(a, j->second, p));
            ++j;
        } else {
            std::uint32_t c = add_mod(i->second, mul_mod(a, j->second, p), p);
            if (c)
                out.emplace_back(i->first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVector scale(const SparseVector& x, std::uint32_t a, Prime p)
{
    SparseVector out;
    if (a % p == 0)
        return out;
    out.reserve(x.size());
    for (auto [col, c] : x)
        out.emplace_back(col, mul_mod(c, a, p));
    return out;
}

SparseVector EchelonBasis::reduce(SparseVector v) const
{
    // rows are fully reduced, so one pass in pivot order suffices
    std::size_t k = 0;
    while (k < v.size()) {
        auto it = rows_.find(v[k].first);
        if (it == rows_.end()) {
            ++k;
            continue;
        }
        int col = v[k].first;
        v = axpy(v, sub_mod(0, v[k].second, p_), it->second, p_);
        // entries before position k are untouched; skip past col
        k = 0;
        while (k < v.size() && v[k].first <= col)
            ++k;
    }
    return v;
}

bool EchelonBasis::insert(SparseVector v)
{
    v = reduce(std::move(v));
    if (v.empty())
        return false;
    v = scale(v, inv_mod(v.front().second, p_), p_);
    const int pivot = v.front().first;
    for (auto& [col, row] : rows_) {
        auto hit = std::lower_bound(row.begin(), row.end(), std::make_pair(pivot, 0u),
                                    [](const auto& a, const auto& b) { return a.first < b.first; });
        if (hit != row.end() && hit->first == pivot)
            row = axpy(row, sub_mod(0, hit->second, p_), v, p_);
    }
    rows_.emplace(pivot, std::move(v));
    return true;
}

std::vector<SparseVector> EchelonBasis::rows() const
{
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [col, row] : rows_)
        out.push_back(row);
    return out;
}

KernelResult kernel_and_rank(const std::vector<SparseVector>& images, Prime p)
{
    // Row-reduce the images while tracking which source combination
    // produced each echelon row.
    struct Tracked
    {
        SparseVector image;
        SparseVector combo;
    };
    std::map<int, Tracked> pivots;
    EchelonBasis kernel(p);
    for (int j = 0; j < static_cast<int>(images.size()); ++j) {
        SparseVector v = images[j];
        SparseVector combo{{j, 1u}};
        std::size_t k = 0;
        while (k < v.size()) {
            auto it = pivots.find(v[k].first);
            if (it == pivots.end()) {
                ++k;
                continue;
            }
            std::uint32_t f = sub_mod(0, v[k].second, p);
            int col = v[k].first;
            v = axpy(v, f, it->second.image, p);
            combo = axpy(combo, f, it->second.combo, p);
            k = 0;
            while (k < v.size() && v[k].first <= col)
                ++k;
        }
        if (v.empty()) {
            kernel.insert(std::move(combo));
        } else {
            std::uint32_t inv = inv_mod(v.front().second, p);
            int pivot = v.front().first;
            pivots.emplace(pivot, Tracked{scale(v, inv, p), scale(combo, inv, p)});
        }
    }
    return {kernel.rows(), pivots.size()};
}

}  // namespace motsteen
