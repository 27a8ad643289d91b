#pragma once

#include "motsteen/graded_algebra.hpp"
#include "motsteen/modp.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace motsteen {

/// Nonincreasing positive parts.
using Partition = std::vector<int>;

/// All partitions of `weight` with at most `max_length` parts, in
/// descending lexicographic order.
const std::vector<Partition>& partitions(int weight, int max_length);

int weight_of(const Partition& lambda);
Partition conjugate(const Partition& lambda);

/// A symmetric polynomial in `roots` weight-one Chern roots t_1..t_n,
/// stored in the monomial symmetric basis: coefficients[lambda] is the
/// coefficient of t^lambda (and of every permutation of it).
struct RootExpansion
{
    int roots = 0;
    Prime modulus{2};
    std::map<Partition, std::uint32_t> coefficients;

    void add(const Partition& lambda, std::uint32_t c);
    bool operator==(const RootExpansion&) const = default;
};

/// Expands a polynomial in Chern classes c_j = e_j(t_1..t_n). Throws
/// std::invalid_argument when x contains anything but c-generators.
RootExpansion expand_to_roots(const Element& x, int roots);

/// Rewrites a symmetric root polynomial in elementary symmetric polynomials
/// by leading-term elimination and returns it as a polynomial in the c_j.
Element collapse_to_chern(const RootExpansion& f);

/// Applies P^i with the total operation t -> t + t^p on each root, extended
/// multiplicatively: P^i(t^a) = C(a, i) t^(a + i(p-1)).
RootExpansion apply_root_power(int i, const RootExpansion& f);

/// Expansion of e_k * f.
RootExpansion multiply_by_elementary(int k, const RootExpansion& f);

}  // namespace motsteen
