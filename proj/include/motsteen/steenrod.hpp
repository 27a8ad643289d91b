#pragma once

#include "motsteen/graded_algebra.hpp"
#include "motsteen/modp.hpp"
#include "motsteen/parallel.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace motsteen {

/// Coefficient prime together with the group whose generators are acted on.
/// SO models reject p = 2.
class SteenrodContext
{
public:
    SteenrodContext(Prime modulus, GroupModel model);

    Prime modulus() const { return modulus_; }
    const GroupModel& model() const { return model_; }

private:
    Prime modulus_;
    GroupModel model_;
};

/// P^i(a_j) = C(j-1, i) a_{j+i(p-1)}, zero when the target index is not a
/// generator of the model. Throws std::invalid_argument if a_j is not one.
Element apply_P_primitive(int i, int j, const SteenrodContext& ctx);

/// P^i on a polynomial in Chern classes, computed on Chern roots with
/// t -> t + t^p and rewritten in elementary symmetric polynomials.
/// `roots` defaults to wt(x) + i(p-1) + 1; smaller than wt(x) + i(p-1)
/// is rejected.
Element apply_P_polynomial(int i, const Element& x, std::optional<int> roots = std::nullopt);

/// Keeps only linear monomials (a single generator to the first power).
Element decomposable_quotient(const Element& x);

enum class Axiom { unit, pth_power, instability, cartan, adem };

std::string to_string(Axiom a);
Axiom parse_axiom(std::string_view text);

struct AxiomFailure
{
    std::string identity;
    std::string lhs;
    std::string rhs;
};

struct AxiomReport
{
    Axiom axiom;
    Prime modulus;
    int degree_bound = 0;
    int generator_count = 0;
    std::size_t checked = 0;
    std::vector<AxiomFailure> failures;  // sorted by identity text

    bool passed() const { return failures.empty(); }
};

/// Checks one axiom on c_1..c_g, seeded random products and random
/// homogeneous sums, restricted to identities whose classes have weight
/// at most `degree_bound`. For adem every a < pb in range is checked.
AxiomReport verify_axiom(Axiom axiom, Prime p, int degree_bound, int generator_count = 5,
                         Execution exec = Execution::parallel);

}  // namespace motsteen
