#include "motsteen/steenrod.hpp"

#include "motsteen/symmetric.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace motsteen {

SteenrodContext::SteenrodContext(Prime modulus, GroupModel model)
    : modulus_(modulus), model_(model)
{
    if (model.family() == GroupFamily::SO && modulus.value() == 2)
        throw std::invalid_argument("2 is a torsion prime for " + model.name());
}

Element apply_P_primitive(int i, int j, const SteenrodContext& ctx)
{
    const Prime p = ctx.modulus();
    if (!ctx.model().has_index(j))
        throw std::invalid_argument("a" + std::to_string(j) + " is not a generator of " + ctx.model().name());
    if (i < 0)
        throw std::invalid_argument("negative operation index");
    if (i == 0)
        return Element::generator(Generator::primitive(j), p);
    const long target = j + static_cast<long>(i) * (p.value() - 1);
    if (target > ctx.model().top_index() || !ctx.model().has_index(static_cast<int>(target)))
        return Element(p);
    Fp c = binom_mod_p(j - 1, i, p);
    return Element::monomial(Monomial(Generator::primitive(static_cast<int>(target))), c.residue(), p);
}

Element apply_P_polynomial(int i, const Element& x, std::optional<int> roots)
{
    if (i < 0)
        throw std::invalid_argument("negative operation index");
    const Prime p = x.modulus();
    int top_weight = 0;
    for (const auto& [m, c] : x.terms()) {
        if (!m.odd().empty())
            throw std::invalid_argument("apply_P_polynomial needs Chern classes only; use the primitive action for " +
                                        m.render());
        top_weight = std::max(top_weight, m.bidegree().weight);
    }
    const int needed = top_weight + i * (static_cast<int>(p.value()) - 1);
    const int n = roots.value_or(needed + 1);
    if (n < needed)
        throw std::invalid_argument("root count " + std::to_string(n) + " too small for faithful rewriting (need " +
                                    std::to_string(needed) + ")");
    return collapse_to_chern(apply_root_power(i, expand_to_roots(x, n)));
}

Element decomposable_quotient(const Element& x)
{
    Element out(x.modulus());
    for (const auto& [m, c] : x.terms())
        if (m.length() == 1)
            out.add_term(m, c);
    return out;
}

std::string to_string(Axiom a)
{
    switch (a) {
    case Axiom::unit: return "unit";
    case Axiom::pth_power: return "pth_power";
    case Axiom::instability: return "instability";
    case Axiom::cartan: return "cartan";
    case Axiom::adem: return "adem";
    }
    return "?";
}

Axiom parse_axiom(std::string_view text)
{
    for (Axiom a : {Axiom::unit, Axiom::pth_power, Axiom::instability, Axiom::cartan, Axiom::adem})
        if (to_string(a) == text)
            return a;
    throw std::invalid_argument("unknown axiom: " + std::string(text));
}

namespace {

    struct TestClass
    {
        Element value;
        int weight;
    };

    Element random_monomial(std::mt19937& rng, int weight, int generators, Prime p)
    {
        Element x = Element::constant(1, p);
        int remaining = weight;
        while (remaining > 0) {
            int top = std::min(generators, remaining);
            int part = 1 + static_cast<int>(rng() % static_cast<unsigned>(top));
            x = multiply(x, Element::generator(Generator::chern(part), p));
            remaining -= part;
        }
        return x;
    }

    std::vector<TestClass> test_classes(Prime p, int bound, int generators, std::mt19937& rng)
    {
        std::vector<TestClass> out;
        std::set<std::string> seen;
        auto push = [&](Element x, int w) {
            if (x.is_zero() || !seen.insert(x.render()).second)
                return;
            out.push_back({std::move(x), w});
        };
        for (int j = 1; j <= std::min(generators, bound); ++j)
            push(Element::generator(Generator::chern(j), p), j);
        for (int w = 2; w <= bound; ++w) {
            push(random_monomial(rng, w, generators, p), w);
            push(random_monomial(rng, w, generators, p), w);
            Element first = random_monomial(rng, w, generators, p);
            first = first.scaled(1 + rng() % (p.value() - 1));
            Element second = random_monomial(rng, w, generators, p);
            second = second.scaled(1 + rng() % (p.value() - 1));
            push(first + second, w);
        }
        return out;
    }

    using Check = std::function<std::optional<AxiomFailure>()>;

    std::optional<AxiomFailure> compare(std::string identity, const Element& lhs, const Element& rhs)
    {
        if (lhs == rhs)
            return std::nullopt;
        return AxiomFailure{std::move(identity), lhs.render(), rhs.render()};
    }

    std::string op_label(int i, const std::string& x)
    {
        return "P^" + std::to_string(i) + "(" + x + ")";
    }

    std::vector<Check> build_checks(Axiom axiom, Prime p, int bound, int generators)
    {
        const int step = static_cast<int>(p.value()) - 1;
        std::mt19937 rng(0x5eedu + 7919u * p.value() + 31u * static_cast<unsigned>(bound) +
                         static_cast<unsigned>(generators));
        const std::vector<TestClass> classes = test_classes(p, bound, generators, rng);
        std::vector<Check> checks;

        switch (axiom) {
        case Axiom::unit:
            for (const auto& tc : classes)
                checks.push_back([x = tc.value] {
                    return compare(op_label(0, x.render()) + " = " + x.render(), apply_P_polynomial(0, x), x);
                });
            break;

        case Axiom::pth_power:
            for (const auto& tc : classes) {
                if (tc.weight * static_cast<int>(p.value()) > bound)
                    continue;
                checks.push_back([x = tc.value, w = tc.weight, p] {
                    return compare(op_label(w, x.render()) + " = (" + x.render() + ")^" + std::to_string(p.value()),
                                   apply_P_polynomial(w, x), power(x, static_cast<int>(p.value())));
                });
            }
            break;

        case Axiom::instability:
            for (const auto& tc : classes)
                for (int k = tc.weight + 1; tc.weight + k * step <= bound; ++k)
                    checks.push_back([x = tc.value, k, p] {
                        return compare(op_label(k, x.render()) + " = 0", apply_P_polynomial(k, x), Element(p));
                    });
            break;

        case Axiom::cartan: {
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t a = 0; a < classes.size(); ++a)
                for (std::size_t b = a; b < classes.size(); ++b)
                    if (classes[a].weight + classes[b].weight + step <= bound)
                        pairs.emplace_back(a, b);
            // all generator pairs plus a seeded sample of the rest
            std::vector<std::pair<std::size_t, std::size_t>> chosen;
            for (const auto& pr : pairs)
                if (classes[pr.first].value.terms().size() == 1 && classes[pr.first].value.terms().begin()->first.length() == 1 &&
                    classes[pr.second].value.terms().size() == 1 && classes[pr.second].value.terms().begin()->first.length() == 1)
                    chosen.push_back(pr);
            for (int t = 0; t < 40 && !pairs.empty(); ++t)
                chosen.push_back(pairs[rng() % pairs.size()]);
            std::sort(chosen.begin(), chosen.end());
            chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
            for (auto [a, b] : chosen) {
                const TestClass& x = classes[a];
                const TestClass& y = classes[b];
                for (int n = 1; x.weight + y.weight + n * step <= bound; ++n)
                    checks.push_back([x = x.value, y = y.value, n, p] {
                        Element rhs(p);
                        for (int j = 0; j <= n; ++j)
                            rhs += multiply(apply_P_polynomial(j, x), apply_P_polynomial(n - j, y));
                        return compare(op_label(n, "(" + x.render() + ")*(" + y.render() + ")") + " = sum_j " +
                                           "P^j(x) P^(n-j)(y)",
                                       apply_P_polynomial(n, multiply(x, y)), rhs);
                    });
            }
            break;
        }

        case Axiom::adem:
            for (const auto& tc : classes)
                for (int b = 1; tc.weight + b * step <= bound; ++b)
                    for (int a = 1; a < static_cast<int>(p.value()) * b && tc.weight + (a + b) * step <= bound; ++a)
                        checks.push_back([x = tc.value, a, b, p] {
                            Element lhs = apply_P_polynomial(a, apply_P_polynomial(b, x));
                            Element rhs(p);
                            for (int j = 0; j <= a / static_cast<int>(p.value()); ++j) {
                                const int top = (static_cast<int>(p.value()) - 1) * (b - j) - 1;
                                Fp c = binom_mod_p(top, a - static_cast<int>(p.value()) * j, p);
                                if ((a + j) % 2)
                                    c = -c;
                                if (c.is_zero())
                                    continue;
                                rhs += apply_P_polynomial(a + b - j, apply_P_polynomial(j, x)).scaled(c.residue());
                            }
                            return compare("P^" + std::to_string(a) + " P^" + std::to_string(b) + "(" + x.render() +
                                               ") [Adem]",
                                           lhs, rhs);
                        });
            break;
        }
        return checks;
    }

}  // namespace

AxiomReport verify_axiom(Axiom axiom, Prime p, int degree_bound, int generator_count, Execution exec)
{
    if (degree_bound < 0)
        throw std::invalid_argument("degree bound must be >= 0");
    if (generator_count < 1)
        throw std::invalid_argument("need at least one generator");
    const std::vector<Check> checks = build_checks(axiom, p, degree_bound, generator_count);
    std::vector<std::optional<AxiomFailure>> results(checks.size());
    const long count = static_cast<long>(checks.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < count; ++k)
            results[k] = checks[k]();
    } else {
        for (long k = 0; k < count; ++k)
            results[k] = checks[k]();
    }
    AxiomReport report{axiom, p, degree_bound, generator_count, checks.size(), {}};
    for (auto& r : results)
        if (r)
            report.failures.push_back(std::move(*r));
    std::sort(report.failures.begin(), report.failures.end(),
              [](const AxiomFailure& a, const AxiomFailure& b) { return a.identity < b.identity; });
    return report;
}

}  // namespace motsteen
