#include "motsteen/sparse_fp.hpp"

#include <doctest.h>

#include <random>

using namespace motsteen;

namespace {

using Dense = std::vector<std::vector<long>>;

SparseVector sparse(const std::vector<long>& row, long p)
{
    SparseVector v;
    for (int c = 0; c < static_cast<int>(row.size()); ++c)
        if (row[c] % p)
            v.emplace_back(c, static_cast<std::uint32_t>((row[c] % p + p) % p));
    return v;
}

// plain Gaussian elimination, row by row
int dense_rank(Dense m, long p)
{
    int rank = 0;
    const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[r][c] % p) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m[piv], m[rank]);
        long inv = 1;
        while (m[rank][c] * inv % p != 1)
            ++inv;
        for (auto& x : m[rank])
            x = x * inv % p;
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            const long f = m[r][c];
            for (int k = 0; k < cols; ++k)
                m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

Dense random_matrix(std::mt19937& rng, int rows, int cols, long p, int density)
{
    Dense m(rows, std::vector<long>(cols, 0));
    for (auto& row : m)
        for (auto& x : row)
            if (static_cast<int>(rng() % 100) < density)
                x = static_cast<long>(rng() % p);
    return m;
}

}  // namespace

TEST_CASE("axpy and scale")
{
    const Prime p(5);
    SparseVector x{{0, 1}, {3, 4}};
    SparseVector y{{1, 2}, {3, 1}};
    CHECK(axpy(x, 1, y, p) == SparseVector{{0, 1}, {1, 2}});
    CHECK(axpy(x, 0, y, p) == x);
    CHECK(scale(x, 2, p) == SparseVector{{0, 2}, {3, 3}});
    CHECK(scale(x, 0, p).empty());
}

TEST_CASE("echelon basis keeps rows reduced")
{
    const Prime p(3);
    EchelonBasis basis(p);
    CHECK(basis.insert({{0, 2}, {2, 1}}));
    CHECK(basis.insert({{0, 1}, {1, 1}}));
    CHECK_FALSE(basis.insert({{1, 1}, {2, 1}}));  // sum of the first two
    CHECK(basis.rank() == 2);
    for (const auto& row : basis.rows())
        CHECK(row.front().second == 1u);
    CHECK(basis.reduce({{0, 1}, {2, 2}}).empty());
}

TEST_CASE("rank and kernel agree with dense elimination")
{
    std::mt19937 rng(41);
    for (long p : {2L, 3L, 5L, 7L}) {
        const Prime pr(static_cast<int>(p));
        for (int t = 0; t < 60; ++t) {
            const int rows = 1 + static_cast<int>(rng() % 12);
            const int cols = 1 + static_cast<int>(rng() % 12);
            Dense m = random_matrix(rng, rows, cols, p, 10 + static_cast<int>(rng() % 60));
            std::vector<SparseVector> images;
            for (const auto& row : m)
                images.push_back(sparse(row, p));
            KernelResult kr = kernel_and_rank(images, pr);
            const int r = dense_rank(m, p);
            CHECK(static_cast<int>(kr.rank) == r);
            CHECK(static_cast<int>(kr.kernel.size()) == rows - r);
            // each kernel vector combines the images to zero
            for (const auto& k : kr.kernel) {
                std::vector<long> sum(cols, 0);
                for (const auto& [j, c] : k)
                    for (int col = 0; col < cols; ++col)
                        sum[col] = (sum[col] + static_cast<long>(c) * m[j][col]) % p;
                for (long s : sum)
                    CHECK(s == 0);
            }
            // and the kernel vectors are independent
            EchelonBasis check(pr);
            for (const auto& k : kr.kernel)
                CHECK(check.insert(k));
        }
    }
}

TEST_CASE("empty inputs")
{
    KernelResult kr = kernel_and_rank({}, Prime(2));
    CHECK(kr.rank == 0);
    CHECK(kr.kernel.empty());
    KernelResult zeros = kernel_and_rank({{}, {}}, Prime(2));
    CHECK(zeros.rank == 0);
    CHECK(zeros.kernel.size() == 2);
}
