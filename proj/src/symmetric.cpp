#include "motsteen/symmetric.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace motsteen {

namespace {
    void generate(int remaining, int max_part, int slots, Partition& cur, std::vector<Partition>& out)
    {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        if (slots == 0)
            return;
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            generate(remaining - part, part, slots - 1, cur, out);
            cur.pop_back();
        }
    }

    std::mutex& cache_mutex()
    {
        static std::mutex m;
        return m;
    }
}  // namespace

const std::vector<Partition>& partitions(int weight, int max_length)
{
    if (weight < 0)
        throw std::invalid_argument("negative weight");
    max_length = std::min(max_length, weight);
    static std::map<std::pair<int, int>, std::vector<Partition>> cache;
    std::lock_guard lock(cache_mutex());
    auto key = std::make_pair(weight, max_length);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::vector<Partition> out;
        Partition cur;
        generate(weight, weight, max_length, cur, out);
        it = cache.emplace(key, std::move(out)).first;
    }
    // std::map nodes are stable, so the reference outlives the lock
    return it->second;
}

int weight_of(const Partition& lambda)
{
    int w = 0;
    for (int part : lambda)
        w += part;
    return w;
}

Partition conjugate(const Partition& lambda)
{
    Partition out;
    if (lambda.empty())
        return out;
    for (int k = 1; k <= lambda.front(); ++k) {
        int count = 0;
        for (int part : lambda)
            if (part >= k)
                ++count;
        out.push_back(count);
    }
    return out;
}

void RootExpansion::add(const Partition& lambda, std::uint32_t c)
{
    c %= modulus.value();
    if (c == 0)
        return;
    auto [it, inserted] = coefficients.try_emplace(lambda, c);
    if (!inserted) {
        it->second = add_mod(it->second, c, modulus);
        if (it->second == 0)
            coefficients.erase(it);
    }
}

namespace {
    std::map<int, RootExpansion> split_by_weight(const RootExpansion& f)
    {
        std::map<int, RootExpansion> out;
        for (const auto& [lambda, c] : f.coefficients) {
            auto& slot = out.try_emplace(weight_of(lambda), RootExpansion{f.roots, f.modulus, {}}).first->second;
            slot.coefficients.emplace(lambda, c);
        }
        return out;
    }

    std::uint32_t lookup(const RootExpansion& f, const Partition& alpha)
    {
        auto it = f.coefficients.find(alpha);
        return it == f.coefficients.end() ? 0 : it->second;
    }

    // Groups of equal parts: (value, multiplicity), values descending.
    std::vector<std::pair<int, int>> group_parts(const Partition& nu)
    {
        std::vector<std::pair<int, int>> groups;
        for (int part : nu) {
            if (!groups.empty() && groups.back().first == part)
                ++groups.back().second;
            else
                groups.emplace_back(part, 1);
        }
        return groups;
    }

    // Sum over ways of lowering exactly k positions of nu by one.
    void elementary_sum(const std::vector<std::pair<int, int>>& groups, std::size_t g, int k,
                        std::uint32_t weight, std::vector<int>& alpha, const RootExpansion& f,
                        std::uint32_t& total)
    {
        const Prime p = f.modulus;
        if (g == groups.size()) {
            if (k != 0)
                return;
            Partition sorted = alpha;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            while (!sorted.empty() && sorted.back() == 0)
                sorted.pop_back();
            total = add_mod(total, mul_mod(weight, lookup(f, sorted), p), p);
            return;
        }
        auto [value, mult] = groups[g];
        for (int chosen = 0; chosen <= std::min(mult, k); ++chosen) {
            std::uint32_t c = binom_mod_p(mult, chosen, p).residue();
            if (c == 0)
                continue;
            std::size_t mark = alpha.size();
            for (int t = 0; t < mult - chosen; ++t)
                alpha.push_back(value);
            for (int t = 0; t < chosen; ++t)
                alpha.push_back(value - 1);
            elementary_sum(groups, g + 1, k - chosen, mul_mod(weight, c, p), alpha, f, total);
            alpha.resize(mark);
        }
    }

    // Sum over distributions (i_s) of i across positions of nu with
    // alpha_s = nu_s - i_s (p-1), weighted by prod C(alpha_s, i_s).
    void power_sum(const Partition& nu, std::size_t s, int i, std::uint32_t weight,
                   std::vector<int>& alpha, const RootExpansion& f, std::uint32_t& total)
    {
        const Prime p = f.modulus;
        const int step = static_cast<int>(p.value()) - 1;
        if (s == nu.size()) {
            if (i != 0)
                return;
            Partition sorted = alpha;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            while (!sorted.empty() && sorted.back() == 0)
                sorted.pop_back();
            total = add_mod(total, mul_mod(weight, lookup(f, sorted), p), p);
            return;
        }
        for (int take = 0; take <= i; ++take) {
            int a = nu[s] - take * step;
            if (a < take)
                break;
            std::uint32_t c = binom_mod_p(a, take, p).residue();
            if (c == 0)
                continue;
            alpha.push_back(a);
            power_sum(nu, s + 1, i - take, mul_mod(weight, c, p), alpha, f, total);
            alpha.pop_back();
        }
    }

    // Cached expansion of e_{parts[0]} * e_{parts[1]} * ... in `roots`
    // variables, where roots has already been clipped to the weight.
    const RootExpansion& elementary_product(const Partition& parts, int roots, Prime p)
    {
        using Key = std::tuple<std::uint32_t, int, Partition>;
        static std::map<Key, RootExpansion> cache;
        Key key{p.value(), roots, parts};
        {
            std::lock_guard lock(cache_mutex());
            auto it = cache.find(key);
            if (it != cache.end())
                return it->second;
        }
        RootExpansion value{roots, p, {}};
        if (parts.empty()) {
            value.add({}, 1);
        } else {
            Partition rest(parts.begin() + 1, parts.end());
            int rest_weight = weight_of(rest);
            const RootExpansion& tail = elementary_product(rest, std::min(roots, rest_weight), p);
            RootExpansion widened{roots, p, tail.coefficients};
            value = multiply_by_elementary(parts.front(), widened);
        }
        std::lock_guard lock(cache_mutex());
        return cache.try_emplace(key, std::move(value)).first->second;
    }

    std::uint32_t neg(std::uint32_t c, Prime p)
    {
        return sub_mod(0, c, p);
    }
}  // namespace

RootExpansion multiply_by_elementary(int k, const RootExpansion& f)
{
    RootExpansion out{f.roots, f.modulus, {}};
    if (k < 0)
        throw std::invalid_argument("negative elementary index");
    if (k == 0)
        return f;
    if (k > f.roots)
        return out;
    for (const auto& [w, part] : split_by_weight(f)) {
        for (const Partition& nu : partitions(w + k, f.roots)) {
            if (static_cast<int>(nu.size()) < k)
                continue;
            std::uint32_t total = 0;
            std::vector<int> alpha;
            elementary_sum(group_parts(nu), 0, k, 1, alpha, part, total);
            out.add(nu, total);
        }
    }
    return out;
}

RootExpansion expand_to_roots(const Element& x, int roots)
{
    if (roots < 0)
        throw std::invalid_argument("negative root count");
    const Prime p = x.modulus();
    RootExpansion out{roots, p, {}};
    for (const auto& [m, c] : x.terms()) {
        if (!m.odd().empty())
            throw std::invalid_argument("root expansion needs a polynomial in Chern classes, got " +
                                        m.render());
        Partition parts;
        for (const auto& [g, e] : m.even()) {
            if (g.name.empty() || g.name[0] != 'c' || g.index() < 1 || g.bidegree != Bidegree{2 * g.index(), g.index()})
                throw std::invalid_argument("not a Chern class: " + g.name);
            for (int t = 0; t < e; ++t)
                parts.push_back(g.index());
        }
        std::sort(parts.begin(), parts.end(), std::greater<>());
        if (!parts.empty() && parts.front() > roots)
            continue;  // e_k = 0 for k > n
        int w = weight_of(parts);
        const RootExpansion& term = elementary_product(parts, std::min(roots, w), p);
        for (const auto& [lambda, a] : term.coefficients)
            out.add(lambda, mul_mod(a, c, p));
    }
    return out;
}

Element collapse_to_chern(const RootExpansion& f)
{
    const Prime p = f.modulus;
    Element out(p);
    for (auto [w, rest] : split_by_weight(f)) {
        while (!rest.coefficients.empty()) {
            // lexicographically largest partition leads; e_{lambda'} has it with coefficient 1
            auto lead = std::prev(rest.coefficients.end());
            Partition lambda = lead->first;
            std::uint32_t c = lead->second;
            if (static_cast<int>(lambda.size()) > f.roots)
                throw std::logic_error("partition longer than the root count");
            Partition dual = conjugate(lambda);
            const RootExpansion& basis = elementary_product(dual, std::min(f.roots, w), p);
            for (const auto& [nu, a] : basis.coefficients)
                rest.add(nu, neg(mul_mod(a, c, p), p));
            if (rest.coefficients.count(lambda))
                throw std::logic_error("leading term survived elimination");
            Monomial m;
            for (std::size_t k = 0; k < dual.size();) {
                std::size_t end = k;
                while (end < dual.size() && dual[end] == dual[k])
                    ++end;
                m = Monomial::product(m, Monomial(Generator::chern(dual[k]), static_cast<int>(end - k)))->first;
                k = end;
            }
            out.add_term(m, c);
        }
    }
    return out;
}

RootExpansion apply_root_power(int i, const RootExpansion& f)
{
    if (i < 0)
        throw std::invalid_argument("negative operation index");
    if (i == 0)
        return f;
    const Prime p = f.modulus;
    const int shift = i * (static_cast<int>(p.value()) - 1);
    RootExpansion out{f.roots, p, {}};
    for (const auto& [w, part] : split_by_weight(f)) {
        for (const Partition& nu : partitions(w + shift, f.roots)) {
            std::uint32_t total = 0;
            std::vector<int> alpha;
            power_sum(nu, 0, i, 1, alpha, part, total);
            out.add(nu, total);
        }
    }
    return out;
}

}  // namespace motsteen
