#pragma once

#include "motsteen/modp.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motsteen {

/// Cohomological degree and motivic weight.
struct Bidegree
{
    int degree = 0;
    int weight = 0;

    Bidegree operator+(Bidegree o) const { return {degree + o.degree, weight + o.weight}; }
    Bidegree operator*(int k) const { return {degree * k, weight * k}; }
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

std::string to_string(Bidegree b);

enum class Parity { even, odd };

/// A named algebra generator. "cJ" is the Chern class c_J in bidegree
/// (2J, J); "aJ" is the higher Chern class c_{1,J}(alpha) in (2J-1, J).
struct Generator
{
    std::string name;
    Parity parity = Parity::even;
    Bidegree bidegree;

    static Generator chern(int j);
    static Generator primitive(int j);

    /// Numeric suffix of the name, or -1 if there is none.
    int index() const;
    /// even: degree == 2*weight, odd: degree == 2*weight - 1.
    bool has_standard_bidegree() const;

    std::strong_ordering operator<=>(const Generator& o) const;
    bool operator==(const Generator& o) const { return (*this <=> o) == 0; }
};

/// A product of polynomial (even) and exterior (odd) generators. Even
/// exponents are positive and sorted; odd generators are strictly ascending.
class Monomial
{
public:
    Monomial() = default;
    explicit Monomial(const Generator& g, int exponent = 1);

    /// Product with the sign from moving odd factors into ascending order;
    /// nullopt when an odd generator repeats.
    static std::optional<std::pair<Monomial, int>> product(const Monomial& x, const Monomial& y);

    const std::vector<std::pair<Generator, int>>& even() const { return even_; }
    const std::vector<Generator>& odd() const { return odd_; }

    bool is_unit() const { return even_.empty() && odd_.empty(); }
    bool contains(std::string_view name) const;
    /// Sum of all exponents (odd generators count once).
    int length() const;
    Bidegree bidegree() const;
    std::string render() const;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<Generator, int>> even_;
    std::vector<Generator> odd_;
};

/// Sparse F_p-linear combination of monomials in canonical form.
class Element
{
public:
    explicit Element(Prime modulus) : modulus_(modulus) {}

    static Element generator(const Generator& g, Prime modulus);
    static Element constant(std::int64_t c, Prime modulus);
    static Element monomial(const Monomial& m, std::int64_t c, Prime modulus);

    Prime modulus() const { return modulus_; }
    const std::map<Monomial, std::uint32_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Fp coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, std::uint32_t coefficient);

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element scaled(std::int64_t c) const;
    Element& operator+=(const Element& o);

    /// Terms sorted by their rendered text, joined by " + ", e.g. "2*c1^3*a2^a5".
    std::string render() const;

    friend bool operator==(const Element&, const Element&) = default;

private:
    Prime modulus_;
    std::map<Monomial, std::uint32_t> terms_;
};

/// Graded-commutative product. Throws std::invalid_argument on modulus mismatch.
Element multiply(const Element& x, const Element& y);

/// x^e for e >= 0.
Element power(const Element& x, int e);

/// Quotient of a free graded-commutative algebra by a monomial ideal
/// generated by some of its generators.
class AlgebraPresentation
{
public:
    AlgebraPresentation(Prime modulus, std::vector<Generator> generators,
                        std::set<std::string> killed = {});

    Prime modulus() const { return modulus_; }
    const std::vector<Generator>& generators() const { return generators_; }
    const std::set<std::string>& killed() const { return killed_; }
    bool is_killed(std::string_view name) const;
    const Generator* find(std::string_view name) const;

    /// Drops every monomial containing a killed generator.
    Element reduce(const Element& x) const;

private:
    Prime modulus_;
    std::vector<Generator> generators_;
    std::set<std::string> killed_;
};

Element multiply(const Element& x, const Element& y, const AlgebraPresentation& presentation);

/// Homogeneity of an element. Zero is homogeneous of every bidegree.
struct Homogeneity
{
    enum class Kind { zero, homogeneous, inhomogeneous } kind;
    Bidegree bidegree;
};

Homogeneity bidegree_of(const Element& x);

/// degree <= 2 * weight. Throws std::invalid_argument if x is inhomogeneous.
bool validate_realizability(const Element& x);

enum class GroupFamily { GL, Sp, SO };

std::string to_string(GroupFamily f);
GroupFamily parse_family(std::string_view text);

/// Generator tables of H*(G) (exterior part) and CH*(BG)/p for GL_n, Sp_2n
/// and SO_{2n+1}. `rank` is n in all three cases.
class GroupModel
{
public:
    GroupModel(GroupFamily family, int rank);

    /// Parses "GL:5", "Sp:4", "SO:5" (the matrix size).
    static GroupModel parse(std::string_view text);

    GroupFamily family() const { return family_; }
    int rank() const { return rank_; }
    std::string name() const;

    /// Indices j of the odd generators a_j, ascending.
    std::vector<int> indices() const;
    bool has_index(int j) const;
    int top_index() const;

    std::vector<Generator> odd_generators() const;
    std::vector<Generator> even_generators() const;

private:
    GroupFamily family_;
    int rank_;
};

/// Parses text such as "c1*c2 + 2*c3 - c1^3" or "a2^a4". Generators must be
/// cJ or aJ. Throws std::invalid_argument on malformed input.
Element parse_element(std::string_view text, Prime modulus);

}  // namespace motsteen
