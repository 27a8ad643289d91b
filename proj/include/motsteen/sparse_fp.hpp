#pragma once

#include "motsteen/modp.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace motsteen {

/// (column, nonzero residue) pairs sorted by column.
using SparseVector = std::vector<std::pair<int, std::uint32_t>>;

SparseVector axpy(const SparseVector& x, std::uint32_t a, const SparseVector& y, Prime p);  // x + a*y
SparseVector scale(const SparseVector& x, std::uint32_t a, Prime p);

/// Rows in reduced row echelon form over F_p. The pivot of a row is its
/// first nonzero column; pivots are normalized to 1 and cleared from every
/// other row.
class EchelonBasis
{
public:
    explicit EchelonBasis(Prime p) : p_(p) {}

    /// Fully reduces v against the stored rows.
    SparseVector reduce(SparseVector v) const;
    /// Adds v if independent; returns whether it was.
    bool insert(SparseVector v);

    std::size_t rank() const { return rows_.size(); }
    /// Rows ordered by pivot column.
    std::vector<SparseVector> rows() const;

private:
    Prime p_;
    std::map<int, SparseVector> rows_;
};

/// Kernel of the linear map sending basis vector j to images[j], returned
/// as the fully reduced echelon basis of the kernel, plus the rank.
struct KernelResult
{
    std::vector<SparseVector> kernel;
    std::size_t rank = 0;
};

KernelResult kernel_and_rank(const std::vector<SparseVector>& images, Prime p);

}  // namespace motsteen
