#include "motsteen/koszul.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace motsteen {

KoszulComplex::KoszulComplex(std::vector<Generator> base, AlgebraPresentation module)
    : base_(std::move(base)), module_(std::move(module))
{
    std::sort(base_.begin(), base_.end());
    if (base_.size() > 30)
        throw std::invalid_argument("Koszul complex supports at most 30 base generators");
    for (const auto& g : base_)
        if (g.parity != Parity::even || !g.has_standard_bidegree() || g.bidegree.weight < 1)
            throw std::invalid_argument("Koszul base generator " + g.name + " must be even of positive weight");
    const auto& gens = module_.generators();
    bool same = gens.size() == base_.size();
    for (std::size_t k = 0; same && k < gens.size(); ++k)
        same = gens[k] == base_[k];
    if (!same)
        throw std::invalid_argument("module generators do not match the Koszul base");
    for (const auto& g : base_)
        killed_.push_back(module_.is_killed(g.name));
}

KoszulComplex build_koszul(std::vector<Generator> base, AlgebraPresentation module)
{
    return KoszulComplex(std::move(base), std::move(module));
}

namespace {
    void enumerate_exponents(const std::vector<Generator>& base, const std::vector<bool>& killed, std::size_t k,
                             int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out)
    {
        if (k == base.size()) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        const int w = base[k].bidegree.weight;
        const int top = killed[k] ? 0 : remaining / w;
        for (int e = 0; e <= top; ++e) {
            cur[k] = e;
            enumerate_exponents(base, killed, k + 1, remaining - e * w, cur, out);
        }
        cur[k] = 0;
    }
}  // namespace

std::vector<KoszulCell> KoszulComplex::cells(int index, int weight) const
{
    std::vector<KoszulCell> out;
    const int n = length();
    if (index < 0 || index > n || weight < 0)
        return out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != index)
            continue;
        int wedge_weight = 0;
        for (int k = 0; k < n; ++k)
            if (mask >> k & 1u)
                wedge_weight += base_[k].bidegree.weight;
        if (wedge_weight > weight)
            continue;
        std::vector<std::vector<int>> monomials;
        std::vector<int> cur(n, 0);
        enumerate_exponents(base_, killed_, 0, weight - wedge_weight, cur, monomials);
        std::sort(monomials.begin(), monomials.end());
        for (auto& e : monomials)
            out.push_back({std::move(e), mask});
    }
    return out;
}

std::vector<SparseVector> KoszulComplex::differential(int index, int weight) const
{
    const std::vector<KoszulCell> source = cells(index, weight);
    const std::vector<KoszulCell> target = cells(index - 1, weight);
    std::map<KoszulCell, int> position;
    for (int t = 0; t < static_cast<int>(target.size()); ++t)
        position.emplace(target[t], t);
    const Prime p = modulus();
    std::vector<SparseVector> images;
    images.reserve(source.size());
    for (const auto& cell : source) {
        SparseVector v;
        int slot = 0;
        for (int k = 0; k < length(); ++k) {
            if (!(cell.wedge >> k & 1u))
                continue;
            const int sign_slot = slot++;
            if (killed_[k])
                continue;
            KoszulCell image{cell.exponents, cell.wedge & ~(1u << k)};
            image.exponents[k] += 1;
            std::uint32_t c = sign_slot % 2 ? p.value() - 1 : 1;
            v.emplace_back(position.at(image), c);
        }
        std::sort(v.begin(), v.end());
        images.push_back(std::move(v));
    }
    return images;
}

Bidegree KoszulComplex::internal_bidegree(const KoszulCell& cell) const
{
    Bidegree b;
    for (int k = 0; k < length(); ++k) {
        b = b + base_[k].bidegree * cell.exponents[k];
        if (cell.wedge >> k & 1u)
            b = b + base_[k].bidegree;
    }
    return b;
}

std::string KoszulComplex::cell_name(const KoszulCell& cell) const
{
    std::string poly;
    for (int k = 0; k < length(); ++k) {
        if (cell.exponents[k] == 0)
            continue;
        if (!poly.empty())
            poly += '*';
        poly += base_[k].name;
        if (cell.exponents[k] > 1)
            poly += '^' + std::to_string(cell.exponents[k]);
    }
    std::string wedge;
    for (int k = 0; k < length(); ++k) {
        if (!(cell.wedge >> k & 1u))
            continue;
        if (!wedge.empty())
            wedge += '^';
        wedge += "d" + base_[k].name;
    }
    if (poly.empty() && wedge.empty())
        return "1";
    if (poly.empty())
        return wedge;
    if (wedge.empty())
        return poly;
    return poly + "*" + wedge;
}

// ---------------------------------------------------------------------------
// Homology

namespace {
    struct HomologyBlock
    {
        std::vector<KoszulCell> cells;
        std::vector<SparseVector> representatives;
    };

    void check_composite_zero(const std::vector<SparseVector>& lower, const std::vector<SparseVector>& upper,
                              Prime p, int index, int weight)
    {
        for (const auto& v : upper) {
            SparseVector total;
            for (auto [j, c] : v)
                total = axpy(total, c, lower[j], p);
            if (!total.empty())
                throw std::logic_error("d^2 != 0 at index " + std::to_string(index) + ", weight " +
                                       std::to_string(weight));
        }
    }

    HomologyBlock compute_block(const KoszulComplex& cx, int index, int weight)
    {
        const Prime p = cx.modulus();
        HomologyBlock block;
        block.cells = cx.cells(index, weight);
        if (block.cells.empty())
            return block;

        std::vector<SparseVector> cycles;
        std::vector<SparseVector> lower;
        if (index == 0) {
            for (int j = 0; j < static_cast<int>(block.cells.size()); ++j)
                cycles.push_back({{j, 1u}});
        } else {
            lower = cx.differential(index, weight);
            cycles = kernel_and_rank(lower, p).kernel;
        }

        const std::vector<SparseVector> upper = cx.differential(index + 1, weight);
        if (index > 0)
            check_composite_zero(lower, upper, p, index, weight);
        EchelonBasis boundaries(p);
        for (const auto& v : upper)
            boundaries.insert(v);

        EchelonBasis classes(p);
        for (const auto& z : cycles)
            classes.insert(boundaries.reduce(z));
        block.representatives = classes.rows();

        if (block.representatives.size() + boundaries.rank() != cycles.size())
            throw std::logic_error("boundaries are not contained in cycles at index " + std::to_string(index));
        return block;
    }

    std::string render_vector(const KoszulComplex& cx, const std::vector<KoszulCell>& cells, const SparseVector& v)
    {
        std::vector<std::string> parts;
        for (auto [j, c] : v) {
            std::string name = cx.cell_name(cells[j]);
            parts.push_back(c == 1 ? name : std::to_string(c) + "*" + name);
        }
        std::sort(parts.begin(), parts.end());
        std::string s;
        for (std::size_t k = 0; k < parts.size(); ++k)
            s += (k ? " + " : "") + parts[k];
        return s;
    }
}  // namespace

void TorTable::insert(TorEntry entry)
{
    Key key{entry.weight, entry.degree, entry.index};
    rows_.insert_or_assign(key, std::move(entry));
}

int TorTable::dimension(int index, int weight) const
{
    int total = 0;
    for (const auto& [key, e] : rows_)
        if (e.index == index && e.weight == weight)
            total += e.dimension;
    return total;
}

int TorTable::total_dimension() const
{
    int total = 0;
    for (const auto& [key, e] : rows_)
        total += e.dimension;
    return total;
}

bool TorTable::euler_characteristic_holds() const
{
    std::map<std::pair<int, int>, long> chains, homology;
    for (const auto& [key, e] : rows_) {
        const long sign = e.index % 2 ? -1 : 1;
        chains[{e.weight, e.degree}] += sign * e.chain_dimension;
        homology[{e.weight, e.degree}] += sign * e.dimension;
    }
    return chains == homology;
}

nlohmann::json TorTable::to_json() const
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [key, e] : rows_) {
        rows.push_back({{"index", e.index},
                        {"degree", e.degree},
                        {"weight", e.weight},
                        {"chain_dimension", e.chain_dimension},
                        {"dimension", e.dimension},
                        {"basis", e.basis}});
    }
    return {{"modulus", modulus_.value()}, {"degree_bound", degree_bound_}, {"rows", rows}};
}

std::string TorTable::render_text() const
{
    std::ostringstream os;
    os << "Tor over F_" << modulus_.value() << ", internal degree <= " << degree_bound_ << "\n";
    os << std::setw(6) << "weight" << std::setw(8) << "degree" << std::setw(7) << "index" << std::setw(7)
       << "chain" << std::setw(5) << "dim" << "  basis\n";
    for (const auto& [key, e] : rows_) {
        if (e.dimension == 0)
            continue;
        os << std::setw(6) << e.weight << std::setw(8) << e.degree << std::setw(7) << e.index << std::setw(7)
           << e.chain_dimension << std::setw(5) << e.dimension << "  ";
        for (std::size_t k = 0; k < e.basis.size(); ++k)
            os << (k ? " | " : "") << e.basis[k];
        os << "\n";
    }
    os << "total dimension: " << total_dimension() << "\n";
    return os.str();
}

TorTable koszul_homology(const KoszulComplex& cx, int degree_bound, Execution exec)
{
    if (degree_bound < 0)
        throw std::invalid_argument("degree bound must be >= 0");
    // base generators have degree 2*weight, so weight <= bound / 2
    const int max_weight = degree_bound / 2;
    std::vector<std::pair<int, int>> tasks;
    for (int w = 0; w <= max_weight; ++w)
        for (int m = 0; m <= cx.length(); ++m)
            tasks.emplace_back(m, w);

    std::vector<std::optional<TorEntry>> results(tasks.size());
    auto run = [&](std::size_t t) {
        auto [m, w] = tasks[t];
        HomologyBlock block = compute_block(cx, m, w);
        if (block.cells.empty())
            return;
        TorEntry e;
        e.index = m;
        e.weight = w;
        e.degree = cx.internal_bidegree(block.cells.front()).degree;
        e.chain_dimension = static_cast<int>(block.cells.size());
        e.dimension = static_cast<int>(block.representatives.size());
        for (const auto& v : block.representatives)
            e.basis.push_back(render_vector(cx, block.cells, v));
        results[t] = std::move(e);
    };
    const long count = static_cast<long>(tasks.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long t = 0; t < count; ++t)
            run(static_cast<std::size_t>(t));
    } else {
        for (long t = 0; t < count; ++t)
            run(static_cast<std::size_t>(t));
    }

    TorTable table(cx.modulus(), degree_bound);
    for (auto& r : results)
        if (r)
            table.insert(std::move(*r));
    return table;
}

std::vector<Generator> homogeneous_space_odd_basis(GroupFamily family, int n, int r, Prime p)
{
    if (n < 1)
        throw std::invalid_argument("rank must be >= 1");
    if (r < 0 || r > n)
        throw std::invalid_argument("need 0 <= r <= n");
    if (family == GroupFamily::SO && p.value() == 2)
        throw std::invalid_argument("2 is a torsion prime for SO_" + std::to_string(2 * n + 1));

    std::vector<Generator> base;
    std::set<std::string> killed;
    const GroupModel model(family, n);
    for (int j : model.indices()) {
        base.push_back(Generator::chern(j));
        const int rank_index = family == GroupFamily::GL ? j : j / 2;
        if (rank_index > r)
            killed.insert(base.back().name);
    }
    KoszulComplex cx(base, AlgebraPresentation(p, base, killed));

    std::vector<Generator> out;
    for (int w = 1; w <= model.top_index(); ++w) {
        HomologyBlock block = compute_block(cx, 1, w);
        for (const auto& v : block.representatives) {
            const KoszulCell& cell = block.cells[v.front().first];
            const bool pure = v.size() == 1 && v.front().second == 1 && std::popcount(cell.wedge) == 1 &&
                              std::all_of(cell.exponents.begin(), cell.exponents.end(), [](int e) { return e == 0; });
            if (!pure)
                throw std::logic_error("index-1 class " + render_vector(cx, block.cells, v) + " is not a single dc_k");
            const int k = std::countr_zero(cell.wedge);
            Generator a = Generator::primitive(cx.base()[k].index());
            // total degree of a Tor_1 class is internal degree minus one
            Bidegree internal = cx.internal_bidegree(cell);
            if (a.bidegree != Bidegree{internal.degree - 1, internal.weight})
                throw std::logic_error("bidegree mismatch for " + a.name);
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace motsteen
