#pragma once

#include "motsteen/graded_algebra.hpp"
#include "motsteen/modp.hpp"
#include "motsteen/parallel.hpp"
#include "motsteen/sparse_fp.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

namespace motsteen {

/// One basis cell of a Koszul chain group: a monomial of the module times a
/// wedge of the symbols dc_i.
struct KoszulCell
{
    std::vector<int> exponents;  // per base generator; zero on killed ones
    std::uint32_t wedge = 0;     // bit k set when dc of base generator k occurs

    friend auto operator<=>(const KoszulCell&, const KoszulCell&) = default;
};

/// The complex M (x) Lambda(dc_1, ..., dc_n) computing Tor^{F_p[base]}(F_p, M)
/// for M a quotient of F_p[base] by killed generators. Each dc_i sits in
/// homological index 1 with the internal bidegree of c_i, and
/// d(w (x) dc_S) = sum_s (-1)^(s+1) c_{i_s} w (x) dc_{S - i_s}.
class KoszulComplex
{
public:
    KoszulComplex(std::vector<Generator> base, AlgebraPresentation module);

    const std::vector<Generator>& base() const { return base_; }
    const AlgebraPresentation& module() const { return module_; }
    Prime modulus() const { return module_.modulus(); }
    int length() const { return static_cast<int>(base_.size()); }
    bool is_killed(std::size_t k) const { return killed_[k]; }

    /// Cells of homological index `index` and internal weight `weight`, in a
    /// fixed order: wedge mask ascending, then module exponents ascending.
    std::vector<KoszulCell> cells(int index, int weight) const;

    /// Images of cells(index, weight) written in cells(index - 1, weight).
    std::vector<SparseVector> differential(int index, int weight) const;

    Bidegree internal_bidegree(const KoszulCell& cell) const;
    std::string cell_name(const KoszulCell& cell) const;

private:
    std::vector<Generator> base_;
    AlgebraPresentation module_;
    std::vector<bool> killed_;
};

KoszulComplex build_koszul(std::vector<Generator> base, AlgebraPresentation module);

struct TorEntry
{
    int index = 0;
    int degree = 0;  // internal
    int weight = 0;
    int chain_dimension = 0;
    int dimension = 0;
    std::vector<std::string> basis;  // canonical coset representatives
};

/// Koszul homology keyed by (weight, degree, index); only multidegrees with a
/// nonzero chain group are stored.
class TorTable
{
public:
    using Key = std::tuple<int, int, int>;

    explicit TorTable(Prime modulus, int degree_bound) : modulus_(modulus), degree_bound_(degree_bound) {}

    Prime modulus() const { return modulus_; }
    int degree_bound() const { return degree_bound_; }
    const std::map<Key, TorEntry>& rows() const { return rows_; }
    void insert(TorEntry entry);

    int dimension(int index, int weight) const;
    int total_dimension() const;
    /// sum_i (-1)^i dim H_i == sum_i (-1)^i dim C_i in every weight.
    bool euler_characteristic_holds() const;

    nlohmann::json to_json() const;
    std::string render_text() const;

private:
    Prime modulus_;
    int degree_bound_;
    std::map<Key, TorEntry> rows_;
};

/// Homology in every multidegree with internal degree <= degree_bound.
/// Checks d^2 = 0 in each multidegree it touches (std::logic_error if not).
TorTable koszul_homology(const KoszulComplex& cx, int degree_bound, Execution exec = Execution::parallel);

/// Odd generators a_k surviving in H*(G/H) for the homogeneous spaces
/// GL_n/GL_r (base c_1..c_n, module kills c_{r+1}..c_n) and Sp_2n/Sp_2r,
/// SO_{2n+1}/SO_{2r+1} (base c_2..c_2n, module kills c_{2r+2}..c_{2n}),
/// read off from the index-1 part of Tor. Rejects SO at p = 2 and r > n.
std::vector<Generator> homogeneous_space_odd_basis(GroupFamily family, int n, int r, Prime p);

}  // namespace motsteen
