#pragma once

#include "motsteen/modp.hpp"
#include "motsteen/parallel.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace motsteen {

/// A quotient map whose section we try to rule out.
///   gl_quotient(n, a, b):  GL_n/GL_a -> GL_n/GL_b, 0 <= a <= b <= n
///   sp_corank1(n):         Sp_2n -> Sp_2n/Sp_{2n-2}
///   so_corank1(n):         SO_{2n+1} -> SO_{2n+1}/SO_{2n-1}, p > 2
struct SectionQuery
{
    enum class Shape { gl_quotient, sp_corank1, so_corank1 };

    Shape shape;
    int n = 0;
    int a = 0;
    int b = 0;
    Prime p;

    static SectionQuery gl_quotient(int n, int a, int b, Prime p);
    static SectionQuery sp_corank1(int n, Prime p);
    static SectionQuery so_corank1(int n, Prime p);

    /// Throws std::invalid_argument on bad indices or SO at p = 2.
    void validate() const;
    std::string describe() const;
};

std::string to_string(SectionQuery::Shape s);

/// P^op_index(a_source) = residue * a_target with residue != 0.
struct Witness
{
    int source_index = 0;
    int op_index = 0;
    int target_index = 0;
    std::uint32_t residue = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
    friend auto operator<=>(const Witness&, const Witness&) = default;
};

enum class Method { combinatorial, cohomological };

struct ObstructionReport
{
    SectionQuery query;
    Method method = Method::combinatorial;
    std::vector<Witness> witnesses;  // sorted
    /// (a, b) lies outside the corank-one targets the argument was stated for.
    bool extrapolated = false;

    bool obstructed() const { return !witnesses.empty(); }
    nlohmann::json to_json() const;
    std::string render_text() const;
};

ObstructionReport check_gl_quotient(int n, int a, int b, Prime p);
ObstructionReport check_symplectic(int n, Prime p);
ObstructionReport check_orthogonal(int n, Prime p);
/// Dispatches to the combinatorial checker for the query's shape.
ObstructionReport check_combinatorial(const SectionQuery& query);

/// Recomputes the verdict from Koszul odd bases of both spaces and the
/// primitive Steenrod action, without the index arithmetic shortcut.
ObstructionReport check_cohomological(const SectionQuery& query);

/// Re-checks a witness's arithmetic from scratch.
bool witness_is_sound(const SectionQuery& query, const Witness& w);

struct ScanRow
{
    int n = 0;
    bool obstructed = false;
    bool divisible = false;  // predicted divisor divides n
};

struct ScanResult
{
    int q = 0;
    Prime p{2};
    int n_max = 0;
    std::uint64_t predicted_divisor = 1;  // p^(1 + exponent_n(p, q))
    std::vector<ScanRow> rows;            // n = q .. n_max
    /// {n : not obstructed} == {n : divisor | n} over the scanned range
    bool match = false;

    nlohmann::json to_json() const;
    std::string render_text() const;
};

/// Runs check_gl_quotient(n, n-q, n-1, p) for q <= n <= n_max.
ScanResult divisibility_scan(int q, Prime p, int n_max, Execution exec = Execution::parallel);

/// raynaud_number(q, 0): the divisibility modulus with every prime included.
std::uint64_t combined_modulus(int q);

}  // namespace motsteen
