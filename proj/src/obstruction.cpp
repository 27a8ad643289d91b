#include "motsteen/obstruction.hpp"

#include "motsteen/graded_algebra.hpp"
#include "motsteen/koszul.hpp"
#include "motsteen/steenrod.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

namespace motsteen {

SectionQuery SectionQuery::gl_quotient(int n, int a, int b, Prime p)
{
    SectionQuery q{Shape::gl_quotient, n, a, b, p};
    q.validate();
    return q;
}

SectionQuery SectionQuery::sp_corank1(int n, Prime p)
{
    SectionQuery q{Shape::sp_corank1, n, 0, 0, p};
    q.validate();
    return q;
}

SectionQuery SectionQuery::so_corank1(int n, Prime p)
{
    SectionQuery q{Shape::so_corank1, n, 0, 0, p};
    q.validate();
    return q;
}

void SectionQuery::validate() const
{
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
    if (shape == Shape::gl_quotient && !(0 <= a && a <= b && b <= n))
        throw std::invalid_argument("need 0 <= a <= b <= n");
    if (shape == Shape::so_corank1 && p.value() == 2)
        throw std::invalid_argument("2 is a torsion prime for SO_" + std::to_string(2 * n + 1));
}

std::string to_string(SectionQuery::Shape s)
{
    switch (s) {
    case SectionQuery::Shape::gl_quotient: return "gl_quotient";
    case SectionQuery::Shape::sp_corank1: return "sp_corank1";
    case SectionQuery::Shape::so_corank1: return "so_corank1";
    }
    return "?";
}

std::string SectionQuery::describe() const
{
    auto gl = [this](int k) {
        std::string g = "GL_" + std::to_string(n);
        return k == 0 ? g : g + "/GL_" + std::to_string(k);
    };
    switch (shape) {
    case Shape::gl_quotient:
        return gl(a) + " -> " + gl(b);
    case Shape::sp_corank1:
        return "Sp_" + std::to_string(2 * n) + " -> Sp_" + std::to_string(2 * n) + "/Sp_" + std::to_string(2 * n - 2);
    case Shape::so_corank1:
        return "SO_" + std::to_string(2 * n + 1) + " -> SO_" + std::to_string(2 * n + 1) + "/SO_" +
               std::to_string(2 * n - 1);
    }
    return "?";
}

namespace {
    std::string to_string(Method m)
    {
        return m == Method::combinatorial ? "combinatorial" : "cohomological";
    }

    bool is_extrapolated(const SectionQuery& q)
    {
        return q.shape == SectionQuery::Shape::gl_quotient && q.a < q.b && q.b < q.n - 1;
    }

    ObstructionReport make_report(const SectionQuery& q, Method m, std::vector<Witness> w)
    {
        std::sort(w.begin(), w.end());
        return {q, m, std::move(w), is_extrapolated(q)};
    }

    // Sp and SO share generator tables: a_2, a_4, ..., a_2n.
    std::vector<Witness> corank1_witnesses(int n, Prime p)
    {
        std::vector<Witness> out;
        const int step = static_cast<int>(p.value()) - 1;
        for (int m = 1; m <= n - 1; ++m) {
            const int gap = 2 * n - 2 * m;
            if (gap % step)
                continue;
            const int i = gap / step;
            Fp c = binom_mod_p(2 * m - 1, i, p);
            if (!c.is_zero())
                out.push_back({2 * m, i, 2 * n, c.residue()});
        }
        return out;
    }
}  // namespace

ObstructionReport check_gl_quotient(int n, int a, int b, Prime p)
{
    const SectionQuery q = SectionQuery::gl_quotient(n, a, b, p);
    const int step = static_cast<int>(p.value()) - 1;
    std::vector<Witness> out;
    for (int m = a + 1; m <= b; ++m) {
        for (int i = 1; m + i * step <= n; ++i) {
            const int t = m + i * step;
            if (t < b + 1)
                continue;
            Fp c = binom_mod_p(m - 1, i, p);
            if (!c.is_zero())
                out.push_back({m, i, t, c.residue()});
        }
    }
    return make_report(q, Method::combinatorial, std::move(out));
}

ObstructionReport check_symplectic(int n, Prime p)
{
    const SectionQuery q = SectionQuery::sp_corank1(n, p);
    return make_report(q, Method::combinatorial, corank1_witnesses(n, p));
}

ObstructionReport check_orthogonal(int n, Prime p)
{
    const SectionQuery q = SectionQuery::so_corank1(n, p);
    return make_report(q, Method::combinatorial, corank1_witnesses(n, p));
}

ObstructionReport check_combinatorial(const SectionQuery& query)
{
    switch (query.shape) {
    case SectionQuery::Shape::gl_quotient: return check_gl_quotient(query.n, query.a, query.b, query.p);
    case SectionQuery::Shape::sp_corank1: return check_symplectic(query.n, query.p);
    case SectionQuery::Shape::so_corank1: return check_orthogonal(query.n, query.p);
    }
    throw std::invalid_argument("unknown shape");
}

ObstructionReport check_cohomological(const SectionQuery& query)
{
    query.validate();
    GroupFamily family = GroupFamily::GL;
    int source_r = query.a;
    int target_r = query.b;
    if (query.shape != SectionQuery::Shape::gl_quotient) {
        family = query.shape == SectionQuery::Shape::sp_corank1 ? GroupFamily::Sp : GroupFamily::SO;
        source_r = 0;
        target_r = query.n - 1;
    }
    const std::vector<Generator> source = homogeneous_space_odd_basis(family, query.n, source_r, query.p);
    const std::vector<Generator> target = homogeneous_space_odd_basis(family, query.n, target_r, query.p);
    const std::set<Generator> surviving(target.begin(), target.end());
    const SteenrodContext ctx(query.p, GroupModel(family, query.n));

    std::vector<Witness> out;
    for (const Generator& g : source) {
        if (surviving.count(g))
            continue;
        // the section pulls g back to zero; any P^i landing on a surviving class is a contradiction
        for (int i = 1; g.index() + i * (static_cast<int>(query.p.value()) - 1) <= ctx.model().top_index(); ++i) {
            Element image = apply_P_primitive(i, g.index(), ctx);
            for (const auto& [m, c] : image.terms()) {
                if (m.odd().size() != 1 || !m.even().empty())
                    throw std::logic_error("primitive action left the linear span");
                if (surviving.count(m.odd().front()))
                    out.push_back({g.index(), i, m.odd().front().index(), c});
            }
        }
    }
    return make_report(query, Method::cohomological, std::move(out));
}

bool witness_is_sound(const SectionQuery& query, const Witness& w)
{
    const long p = query.p.value();
    if (w.op_index < 1 || w.target_index != w.source_index + w.op_index * (p - 1))
        return false;
    if (w.residue == 0 || w.residue >= p)
        return false;
    // residue from Pascal's rule mod p, independent of the Lucas digits
    const int top = w.source_index - 1;
    if (w.op_index > top)
        return false;
    std::vector<long> row(static_cast<std::size_t>(w.op_index) + 1, 0);
    row[0] = 1;
    for (int r = 1; r <= top; ++r)
        for (int k = std::min(r, w.op_index); k >= 1; --k)
            row[k] = (row[k] + row[k - 1]) % p;
    if (row[w.op_index] != static_cast<long>(w.residue))
        return false;
    switch (query.shape) {
    case SectionQuery::Shape::gl_quotient:
        return query.a < w.source_index && w.source_index <= query.b && query.b < w.target_index &&
               w.target_index <= query.n;
    case SectionQuery::Shape::sp_corank1:
    case SectionQuery::Shape::so_corank1:
        return w.source_index % 2 == 0 && 2 <= w.source_index && w.source_index <= 2 * query.n - 2 &&
               w.target_index == 2 * query.n;
    }
    return false;
}

nlohmann::json ObstructionReport::to_json() const
{
    nlohmann::json ws = nlohmann::json::array();
    for (const auto& w : witnesses)
        ws.push_back({{"source_index", w.source_index},
                      {"op_index", w.op_index},
                      {"target_index", w.target_index},
                      {"residue", w.residue}});
    nlohmann::json q = {{"shape", to_string(query.shape)},
                        {"n", query.n},
                        {"p", query.p.value()},
                        {"map", query.describe()}};
    if (query.shape == SectionQuery::Shape::gl_quotient) {
        q["a"] = query.a;
        q["b"] = query.b;
    }
    return {{"query", q},
            {"verdict", obstructed() ? "obstructed" : "no_obstruction_found"},
            {"method", to_string(method)},
            {"extrapolated", extrapolated},
            {"witnesses", ws}};
}

std::string ObstructionReport::render_text() const
{
    std::ostringstream os;
    os << "map: " << query.describe() << "  (p = " << query.p.value() << ")\n";
    os << "method: " << to_string(method) << "\n";
    if (obstructed())
        os << "verdict: obstructed (no section exists)\n";
    else
        os << "verdict: no obstruction found by this method\n";
    for (const auto& w : witnesses)
        os << "witness: (m=" << w.source_index << ", i=" << w.op_index << ")  P^" << w.op_index << "(a"
           << w.source_index << ") = " << (w.residue == 1 ? "" : std::to_string(w.residue) + "*") << "a"
           << w.target_index << "\n";
    if (extrapolated)
        os << "note: extrapolated pattern (target is not a corank-one quotient)\n";
    return os.str();
}

ScanResult divisibility_scan(int q, Prime p, int n_max, Execution exec)
{
    if (q < 1)
        throw std::invalid_argument("q must be >= 1");
    if (n_max < q)
        throw std::invalid_argument("n_max must be >= q");
    ScanResult result;
    result.q = q;
    result.p = p;
    result.n_max = n_max;
    const int e = 1 + exponent_n(p, q);
    for (int k = 0; k < e; ++k)
        result.predicted_divisor *= p.value();

    result.rows.resize(static_cast<std::size_t>(n_max - q + 1));
    const long count = static_cast<long>(result.rows.size());
    auto run = [&](long k) {
        const int n = q + static_cast<int>(k);
        ScanRow& row = result.rows[static_cast<std::size_t>(k)];
        row.n = n;
        row.obstructed = check_gl_quotient(n, n - q, n - 1, p).obstructed();
        row.divisible = n % static_cast<long>(result.predicted_divisor) == 0;
    };
    if (exec == Execution::parallel) {
#pragma omp parallel for
        for (long k = 0; k < count; ++k)
            run(k);
    } else {
        for (long k = 0; k < count; ++k)
            run(k);
    }
    result.match = std::all_of(result.rows.begin(), result.rows.end(),
                               [](const ScanRow& r) { return r.obstructed != r.divisible; });
    return result;
}

nlohmann::json ScanResult::to_json() const
{
    std::vector<int> free_n;
    for (const auto& r : rows)
        if (!r.obstructed)
            free_n.push_back(r.n);
    nlohmann::json table = nlohmann::json::array();
    for (const auto& r : rows)
        table.push_back({{"n", r.n}, {"obstructed", r.obstructed}, {"divisible", r.divisible}});
    return {{"q", q},
            {"p", p.value()},
            {"n_max", n_max},
            {"predicted_divisor", predicted_divisor},
            {"no_obstruction_n", free_n},
            {"match", match},
            {"rows", table}};
}

std::string ScanResult::render_text() const
{
    std::ostringstream os;
    os << "scan: GL_n/GL_{n-" << q << "} -> GL_n/GL_{n-1}, p = " << p.value() << ", n = " << q << ".." << n_max
       << "\n";
    os << "predicted divisor: " << p.value() << "^" << 1 + exponent_n(p, q) << " = " << predicted_divisor << "\n";
    os << std::setw(5) << "n" << "  verdict\n";
    for (const auto& r : rows)
        os << std::setw(5) << r.n << "  " << (r.obstructed ? "obstructed" : "no obstruction found") << "\n";
    os << "match: " << (match ? "true" : "false") << "\n";
    return os.str();
}

std::uint64_t combined_modulus(int q)
{
    return raynaud_number(q, 0);
}

}  // namespace motsteen
