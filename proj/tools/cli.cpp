#include "cli.hpp"

#include "motsteen/graded_algebra.hpp"
#include "motsteen/koszul.hpp"
#include "motsteen/modp.hpp"
#include "motsteen/obstruction.hpp"
#include "motsteen/parallel.hpp"
#include "motsteen/steenrod.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <optional>
#include <ostream>
#include <stdexcept>

namespace motsteen::cli {

namespace {

    constexpr const char* naming_note =
        "Class names: aJ is the higher Chern class c_{1,J}(alpha) in bidegree (2J-1, J);\n"
        "cJ is the Chern class c_J in bidegree (2J, J). Elements are written like\n"
        "\"c1*c2 + 2*c3\"; a wedge of odd classes is written \"a2^a4\".";

    nlohmann::json element_json(const Element& x)
    {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [m, c] : x.terms())
            terms.push_back({{"monomial", m.render()}, {"coefficient", c}});
        nlohmann::json j = {{"modulus", x.modulus().value()}, {"text", x.render()}, {"terms", terms}};
        Homogeneity h = bidegree_of(x);
        if (h.kind == Homogeneity::Kind::homogeneous)
            j["bidegree"] = {h.bidegree.degree, h.bidegree.weight};
        else
            j["bidegree"] = nullptr;
        return j;
    }

    void print_json(std::ostream& out, const nlohmann::json& j)
    {
        out << j.dump(2) << "\n";
    }

    struct SteenrodArgs
    {
        int p = 0;
        std::string group;
        std::string klass;
        std::string poly;
        int op = 0;
        std::optional<int> roots;
        bool json = false;
    };

    int cmd_steenrod(const SteenrodArgs& a, std::ostream& out)
    {
        const Prime p(a.p);
        Element result(p);
        if (!a.klass.empty() && !a.poly.empty())
            throw std::invalid_argument("give either --class or --poly, not both");
        if (!a.klass.empty() && a.klass[0] == 'a') {
            if (a.group.empty())
                throw std::invalid_argument("--class aJ needs --group");
            SteenrodContext ctx(p, GroupModel::parse(a.group));
            Element x = parse_element(a.klass, p);
            if (x.terms().size() != 1 || x.terms().begin()->first.odd().size() != 1 ||
                !x.terms().begin()->first.even().empty())
                throw std::invalid_argument("--class must be a single generator aJ");
            result = apply_P_primitive(a.op, x.terms().begin()->first.odd().front().index(), ctx);
        } else {
            const std::string& text = a.klass.empty() ? a.poly : a.klass;
            if (text.empty())
                throw std::invalid_argument("need --class or --poly");
            result = apply_P_polynomial(a.op, parse_element(text, p), a.roots);
        }
        if (a.json)
            print_json(out, element_json(result));
        else
            out << result.render() << "\n";
        return 0;
    }

    struct TorArgs
    {
        std::string family;
        int n = 0;
        std::optional<int> r;
        int p = 0;
        std::optional<int> bound;
        bool json = false;
    };

    int cmd_tor(const TorArgs& a, std::ostream& out)
    {
        const Prime p(a.p);
        const GroupFamily family = parse_family(a.family);
        const int r = a.r.value_or(a.n - 1);
        const std::vector<Generator> basis = homogeneous_space_odd_basis(family, a.n, r, p);

        const GroupModel model(family, a.n);
        std::vector<Generator> base;
        std::set<std::string> killed;
        int killed_weight = 0;
        for (int j : model.indices()) {
            base.push_back(Generator::chern(j));
            if ((family == GroupFamily::GL ? j : j / 2) > r) {
                killed.insert(base.back().name);
                killed_weight += j;
            }
        }
        const int bound = a.bound.value_or(2 * killed_weight);
        KoszulComplex cx(base, AlgebraPresentation(p, base, killed));
        TorTable table = koszul_homology(cx, bound);

        std::string space = model.name();
        if (r > 0) {
            const GroupModel sub(family, r);
            space += "/" + sub.name();
        }
        if (a.json) {
            nlohmann::json odd = nlohmann::json::array();
            for (const auto& g : basis)
                odd.push_back({{"name", g.name}, {"degree", g.bidegree.degree}, {"weight", g.bidegree.weight}});
            print_json(out, {{"space", space},
                             {"family", to_string(family)},
                             {"n", a.n},
                             {"r", r},
                             {"p", p.value()},
                             {"tor", table.to_json()},
                             {"odd_basis", odd}});
            return 0;
        }
        out << "space: " << space << "\n";
        out << table.render_text();
        out << "odd basis:";
        if (basis.empty())
            out << " (none)";
        for (const auto& g : basis)
            out << " " << g.name;
        out << "\n";
        return 0;
    }

    struct ObstructArgs
    {
        std::string shape;
        int n = 0;
        int a = 0;
        std::optional<int> b;
        int p = 0;
        bool oracle = false;
        std::vector<int> scan;
        bool json = false;
    };

    int cmd_obstruct(const ObstructArgs& a, std::ostream& out)
    {
        const Prime p(a.p);
        if (!a.scan.empty()) {
            if (a.shape != "gl")
                throw std::invalid_argument("--scan applies to the gl shape only");
            ScanResult scan = divisibility_scan(a.scan[0], p, a.scan[1]);
            if (a.json)
                print_json(out, scan.to_json());
            else
                out << scan.render_text();
            return 0;
        }
        SectionQuery q = [&] {
            if (a.shape == "gl")
                return SectionQuery::gl_quotient(a.n, a.a, a.b.value_or(a.n - 1), p);
            if (a.shape == "sp")
                return SectionQuery::sp_corank1(a.n, p);
            if (a.shape == "so")
                return SectionQuery::so_corank1(a.n, p);
            throw std::invalid_argument("shape must be gl, sp or so");
        }();
        ObstructionReport report = check_combinatorial(q);
        std::optional<ObstructionReport> oracle;
        if (a.oracle)
            oracle = check_cohomological(q);
        const bool agree = !oracle || oracle->witnesses == report.witnesses;
        if (a.json) {
            nlohmann::json j = report.to_json();
            if (oracle)
                j["oracle"] = {{"report", oracle->to_json()}, {"agrees", agree}};
            print_json(out, j);
        } else {
            out << report.render_text();
            if (oracle)
                out << "oracle: cohomological check " << (agree ? "agrees" : "DISAGREES") << "\n";
        }
        if (!agree)
            return 3;
        return report.obstructed() ? 0 : 1;
    }

    struct VerifyArgs
    {
        std::string axiom;
        int p = 0;
        int bound = 0;
        int generators = 5;
        bool json = false;
    };

    int cmd_verify(const VerifyArgs& a, std::ostream& out)
    {
        const Prime p(a.p);
        AxiomReport report = verify_axiom(parse_axiom(a.axiom), p, a.bound, a.generators);
        if (a.json) {
            nlohmann::json failures = nlohmann::json::array();
            for (const auto& f : report.failures)
                failures.push_back({{"identity", f.identity}, {"lhs", f.lhs}, {"rhs", f.rhs}});
            print_json(out, {{"axiom", to_string(report.axiom)},
                             {"p", p.value()},
                             {"bound", report.degree_bound},
                             {"generators", report.generator_count},
                             {"checked", report.checked},
                             {"passed", report.passed()},
                             {"failures", failures}});
        } else {
            out << "axiom " << to_string(report.axiom) << ", p = " << p.value() << ", weight bound "
                << report.degree_bound << ", generators c1..c" << report.generator_count << "\n";
            out << "checked " << report.checked << " identities, " << report.failures.size() << " failed\n";
            for (const auto& f : report.failures)
                out << "FAIL " << f.identity << "\n  lhs: " << f.lhs << "\n  rhs: " << f.rhs << "\n";
            out << (report.passed() ? "PASS" : "FAIL") << "\n";
        }
        return report.passed() ? 0 : 1;
    }

    struct ModulusArgs
    {
        int q = 0;
        int exclude = 0;
        bool json = false;
    };

    int cmd_modulus(const ModulusArgs& a, std::ostream& out)
    {
        const std::uint64_t value = raynaud_number(a.q, a.exclude);
        if (a.json)
            print_json(out, {{"q", a.q}, {"excluded_char", a.exclude}, {"N_q", value}});
        else
            out << "N_" << a.q << "(" << a.exclude << ") = " << value << "\n";
        return 0;
    }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact mod-p Steenrod operations, Koszul Tor tables and section obstructions\n"
                 "for quotients of GL_n, Sp_2n and SO_{2n+1}."};
    app.footer(naming_note);
    app.require_subcommand(1);
    int jobs = 0;
    app.add_option("--jobs", jobs, "OpenMP threads for parallel kernels (output is unaffected)");

    SteenrodArgs sa;
    auto* steenrod = app.add_subcommand("steenrod", "Apply P^i to a class");
    steenrod->add_option("-p,--p", sa.p, "Coefficient prime")->required();
    steenrod->add_option("--group", sa.group, "Group model for aJ classes: GL:n, Sp:2n or SO:2n+1");
    steenrod->add_option("--class", sa.klass, "A generator aJ (or a Chern polynomial)");
    steenrod->add_option("--poly", sa.poly, "A polynomial in Chern classes cJ");
    steenrod->add_option("--op", sa.op, "Operation index i")->required()->check(CLI::NonNegativeNumber);
    steenrod->add_option("--roots", sa.roots, "Number of Chern roots");
    steenrod->add_flag("--json", sa.json, "JSON output");

    TorArgs ta;
    auto* tor = app.add_subcommand("tor", "Koszul Tor table and odd basis of a homogeneous space");
    tor->add_option("--family", ta.family, "GL, Sp or SO")->required();
    tor->add_option("--n", ta.n, "Rank parameter n")->required();
    tor->add_option("--r", ta.r, "Subgroup rank r (default n-1)");
    tor->add_option("-p,--p", ta.p, "Coefficient prime")->required();
    tor->add_option("--bound", ta.bound, "Internal degree bound");
    tor->add_flag("--json", ta.json, "JSON output");

    ObstructArgs oa;
    auto* obstruct = app.add_subcommand("obstruct", "Steenrod obstruction to a section (exit 0 obstructed, 1 none found)");
    obstruct->add_option("shape", oa.shape, "gl, sp or so")->required();
    obstruct->add_option("--n", oa.n, "Rank parameter n");
    obstruct->add_option("--a", oa.a, "Source subgroup GL_a (gl only)");
    obstruct->add_option("--b", oa.b, "Target subgroup GL_b (gl only, default n-1)");
    obstruct->add_option("-p,--p", oa.p, "Characteristic")->required();
    obstruct->add_flag("--oracle", oa.oracle, "Cross-check with the cohomological engine");
    obstruct->add_option("--scan", oa.scan, "Divisibility scan: q n_max")->expected(2);
    obstruct->add_flag("--json", oa.json, "JSON output");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check a Steenrod axiom exhaustively");
    verify->add_option("--axiom", va.axiom, "unit, pth_power, instability, cartan or adem")->required();
    verify->add_option("-p,--p", va.p, "Coefficient prime")->required();
    verify->add_option("--bound", va.bound, "Weight bound")->required();
    verify->add_option("--generators", va.generators, "Number of Chern generators (default 5)");
    verify->add_flag("--json", va.json, "JSON output");

    ModulusArgs ma;
    auto* modulus = app.add_subcommand("modulus", "The divisibility number N_q");
    modulus->add_option("--q", ma.q, "q >= 1")->required();
    modulus->add_option("--exclude", ma.exclude, "Excluded characteristic (0 for none)");
    modulus->add_flag("--json", ma.json, "JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    set_thread_count(jobs);
    try {
        if (steenrod->parsed())
            return cmd_steenrod(sa, out);
        if (tor->parsed())
            return cmd_tor(ta, out);
        if (obstruct->parsed()) {
            if (oa.scan.empty() && obstruct->count("--n") == 0)
                throw std::invalid_argument("--n is required");
            return cmd_obstruct(oa, out);
        }
        if (verify->parsed())
            return cmd_verify(va, out);
        if (modulus->parsed())
            return cmd_modulus(ma, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace motsteen::cli
