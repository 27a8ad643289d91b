#include "motsteen/graded_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace motsteen {

std::string to_string(Bidegree b)
{
    return "(" + std::to_string(b.degree) + ", " + std::to_string(b.weight) + ")";
}

// ---------------------------------------------------------------------------
// Generator

Generator Generator::chern(int j)
{
    return {"c" + std::to_string(j), Parity::even, {2 * j, j}};
}

Generator Generator::primitive(int j)
{
    return {"a" + std::to_string(j), Parity::odd, {2 * j - 1, j}};
}

namespace {
    std::pair<std::string_view, int> split_name(std::string_view name)
    {
        std::size_t cut = name.size();
        while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1])))
            --cut;
        if (cut == name.size())
            return {name, -1};
        int index = 0;
        std::from_chars(name.data() + cut, name.data() + name.size(), index);
        return {name.substr(0, cut), index};
    }
}  // namespace

int Generator::index() const
{
    return split_name(name).second;
}

bool Generator::has_standard_bidegree() const
{
    int expected = parity == Parity::even ? 2 * bidegree.weight : 2 * bidegree.weight - 1;
    return bidegree.degree == expected;
}

std::strong_ordering Generator::operator<=>(const Generator& o) const
{
    auto [pa, ia] = split_name(name);
    auto [pb, ib] = split_name(o.name);
    if (auto c = pa <=> pb; c != 0)
        return c;
    if (auto c = ia <=> ib; c != 0)
        return c;
    if (auto c = name <=> o.name; c != 0)
        return c;
    if (auto c = parity <=> o.parity; c != 0)
        return c;
    return bidegree <=> o.bidegree;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(const Generator& g, int exponent)
{
    if (exponent < 0)
        throw std::invalid_argument("negative exponent");
    if (exponent == 0)
        return;
    if (g.parity == Parity::odd) {
        if (exponent > 1)
            throw std::invalid_argument("odd generator with exponent > 1 is zero");
        odd_.push_back(g);
    } else {
        even_.emplace_back(g, exponent);
    }
}

std::optional<std::pair<Monomial, int>> Monomial::product(const Monomial& x, const Monomial& y)
{
    Monomial r;
    // merge even parts
    auto i = x.even_.begin();
    auto j = y.even_.begin();
    while (i != x.even_.end() || j != y.even_.end()) {
        if (j == y.even_.end() || (i != x.even_.end() && i->first < j->first)) {
            r.even_.push_back(*i++);
        } else if (i == x.even_.end() || j->first < i->first) {
            r.even_.push_back(*j++);
        } else {
            r.even_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    // merge odd parts; every y generator passes over the larger x generators
    int swaps = 0;
    r.odd_.reserve(x.odd_.size() + y.odd_.size());
    std::size_t a = 0, b = 0;
    while (a < x.odd_.size() || b < y.odd_.size()) {
        if (b == y.odd_.size() || (a < x.odd_.size() && x.odd_[a] < y.odd_[b])) {
            r.odd_.push_back(x.odd_[a++]);
        } else if (a == x.odd_.size() || y.odd_[b] < x.odd_[a]) {
            swaps += static_cast<int>(x.odd_.size() - a);
            r.odd_.push_back(y.odd_[b++]);
        } else {
            return std::nullopt;
        }
    }
    return std::make_pair(std::move(r), swaps % 2 ? -1 : 1);
}

bool Monomial::contains(std::string_view name) const
{
    for (const auto& [g, e] : even_)
        if (g.name == name)
            return true;
    for (const auto& g : odd_)
        if (g.name == name)
            return true;
    return false;
}

int Monomial::length() const
{
    int n = static_cast<int>(odd_.size());
    for (const auto& [g, e] : even_)
        n += e;
    return n;
}

Bidegree Monomial::bidegree() const
{
    Bidegree b;
    for (const auto& [g, e] : even_)
        b = b + g.bidegree * e;
    for (const auto& g : odd_)
        b = b + g.bidegree;
    return b;
}

std::string Monomial::render() const
{
    if (is_unit())
        return "1";
    std::string s;
    for (const auto& [g, e] : even_) {
        if (!s.empty())
            s += '*';
        s += g.name;
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    if (!odd_.empty()) {
        if (!s.empty())
            s += '*';
        for (std::size_t k = 0; k < odd_.size(); ++k) {
            if (k)
                s += '^';
            s += odd_[k].name;
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Element

namespace {
    void check_modulus(Prime a, Prime b)
    {
        if (a != b)
            throw std::invalid_argument("modulus mismatch: " + std::to_string(a.value()) + " vs " +
                                        std::to_string(b.value()));
    }
}  // namespace

Element Element::generator(const Generator& g, Prime modulus)
{
    return monomial(Monomial(g), 1, modulus);
}

Element Element::constant(std::int64_t c, Prime modulus)
{
    return monomial(Monomial(), c, modulus);
}

Element Element::monomial(const Monomial& m, std::int64_t c, Prime modulus)
{
    Element x(modulus);
    x.add_term(m, reduce_mod(c, modulus));
    return x;
}

Fp Element::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return Fp(it == terms_.end() ? 0 : it->second, modulus_);
}

void Element::add_term(const Monomial& m, std::uint32_t coefficient)
{
    coefficient %= modulus_.value();
    if (coefficient == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, coefficient);
    if (!inserted) {
        it->second = add_mod(it->second, coefficient, modulus_);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Element& Element::operator+=(const Element& o)
{
    check_modulus(modulus_, o.modulus_);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Element Element::operator+(const Element& o) const
{
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-() const
{
    return scaled(-1);
}

Element Element::operator-(const Element& o) const
{
    return *this + (-o);
}

Element Element::scaled(std::int64_t c) const
{
    Element r(modulus_);
    std::uint32_t k = reduce_mod(c, modulus_);
    if (k == 0)
        return r;
    for (const auto& [m, a] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), m, mul_mod(a, k, modulus_));
    return r;
}

std::string Element::render() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::string> parts;
    parts.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        std::string body = m.render();
        if (c == 1)
            parts.push_back(body);
        else if (m.is_unit())
            parts.push_back(std::to_string(c));
        else
            parts.push_back(std::to_string(c) + "*" + body);
    }
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k)
            s += " + ";
        s += parts[k];
    }
    return s;
}

Element multiply(const Element& x, const Element& y)
{
    check_modulus(x.modulus(), y.modulus());
    const Prime p = x.modulus();
    Element r(p);
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            auto prod = Monomial::product(mx, my);
            if (!prod)
                continue;
            std::uint32_t c = mul_mod(cx, cy, p);
            if (prod->second < 0)
                c = sub_mod(0, c, p);
            r.add_term(prod->first, c);
        }
    }
    return r;
}

Element power(const Element& x, int e)
{
    if (e < 0)
        throw std::invalid_argument("negative power");
    Element r = Element::constant(1, x.modulus());
    for (int k = 0; k < e; ++k)
        r = multiply(r, x);
    return r;
}

// ---------------------------------------------------------------------------
// AlgebraPresentation

AlgebraPresentation::AlgebraPresentation(Prime modulus, std::vector<Generator> generators,
                                         std::set<std::string> killed)
    : modulus_(modulus), generators_(std::move(generators)), killed_(std::move(killed))
{
    std::sort(generators_.begin(), generators_.end());
    for (std::size_t k = 1; k < generators_.size(); ++k)
        if (generators_[k].name == generators_[k - 1].name)
            throw std::invalid_argument("duplicate generator " + generators_[k].name);
    for (const auto& g : generators_)
        if (!g.has_standard_bidegree())
            throw std::invalid_argument("generator " + g.name + " has non-standard bidegree " +
                                        to_string(g.bidegree));
    for (const auto& name : killed_)
        if (!find(name))
            throw std::invalid_argument("killed generator " + name + " is not a generator");
}

bool AlgebraPresentation::is_killed(std::string_view name) const
{
    return killed_.find(std::string(name)) != killed_.end();
}

const Generator* AlgebraPresentation::find(std::string_view name) const
{
    for (const auto& g : generators_)
        if (g.name == name)
            return &g;
    return nullptr;
}

Element AlgebraPresentation::reduce(const Element& x) const
{
    check_modulus(modulus_, x.modulus());
    Element r(modulus_);
    for (const auto& [m, c] : x.terms()) {
        bool dead = false;
        for (const auto& name : killed_)
            if (m.contains(name)) {
                dead = true;
                break;
            }
        if (!dead)
            r.add_term(m, c);
    }
    return r;
}

Element multiply(const Element& x, const Element& y, const AlgebraPresentation& presentation)
{
    check_modulus(x.modulus(), presentation.modulus());
    return presentation.reduce(multiply(x, y));
}

// ---------------------------------------------------------------------------
// Homogeneity

Homogeneity bidegree_of(const Element& x)
{
    if (x.is_zero())
        return {Homogeneity::Kind::zero, {}};
    Bidegree b = x.terms().begin()->first.bidegree();
    for (const auto& [m, c] : x.terms())
        if (m.bidegree() != b)
            return {Homogeneity::Kind::inhomogeneous, {}};
    return {Homogeneity::Kind::homogeneous, b};
}

bool validate_realizability(const Element& x)
{
    Homogeneity h = bidegree_of(x);
    if (h.kind == Homogeneity::Kind::inhomogeneous)
        throw std::invalid_argument("validate_realizability needs a homogeneous element");
    if (h.kind == Homogeneity::Kind::zero)
        return true;
    return h.bidegree.degree <= 2 * h.bidegree.weight;
}

// ---------------------------------------------------------------------------
// GroupModel

std::string to_string(GroupFamily f)
{
    switch (f) {
    case GroupFamily::GL: return "GL";
    case GroupFamily::Sp: return "Sp";
    case GroupFamily::SO: return "SO";
    }
    return "?";
}

GroupFamily parse_family(std::string_view text)
{
    std::string t(text);
    for (auto& ch : t)
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (t == "GL")
        return GroupFamily::GL;
    if (t == "SP")
        return GroupFamily::Sp;
    if (t == "SO")
        return GroupFamily::SO;
    throw std::invalid_argument("unknown group family: " + std::string(text));
}

GroupModel::GroupModel(GroupFamily family, int rank) : family_(family), rank_(rank)
{
    if (rank < 1)
        throw std::invalid_argument("group rank must be >= 1");
}

GroupModel GroupModel::parse(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("group must look like GL:5, Sp:4 or SO:5");
    GroupFamily family = parse_family(text.substr(0, colon));
    std::string_view digits = text.substr(colon + 1);
    int size = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), size);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || size < 1)
        throw std::invalid_argument("bad group size in " + std::string(text));
    switch (family) {
    case GroupFamily::GL:
        return GroupModel(family, size);
    case GroupFamily::Sp:
        if (size % 2)
            throw std::invalid_argument("Sp needs an even matrix size");
        return GroupModel(family, size / 2);
    case GroupFamily::SO:
        if (size % 2 == 0 || size < 3)
            throw std::invalid_argument("SO needs an odd matrix size >= 3");
        return GroupModel(family, (size - 1) / 2);
    }
    throw std::invalid_argument("unreachable");
}

std::string GroupModel::name() const
{
    switch (family_) {
    case GroupFamily::GL: return "GL_" + std::to_string(rank_);
    case GroupFamily::Sp: return "Sp_" + std::to_string(2 * rank_);
    case GroupFamily::SO: return "SO_" + std::to_string(2 * rank_ + 1);
    }
    return "?";
}

std::vector<int> GroupModel::indices() const
{
    std::vector<int> out;
    if (family_ == GroupFamily::GL) {
        for (int j = 1; j <= rank_; ++j)
            out.push_back(j);
    } else {
        for (int j = 1; j <= rank_; ++j)
            out.push_back(2 * j);
    }
    return out;
}

bool GroupModel::has_index(int j) const
{
    if (j < 1 || j > top_index())
        return false;
    return family_ == GroupFamily::GL || j % 2 == 0;
}

int GroupModel::top_index() const
{
    return family_ == GroupFamily::GL ? rank_ : 2 * rank_;
}

std::vector<Generator> GroupModel::odd_generators() const
{
    std::vector<Generator> out;
    for (int j : indices())
        out.push_back(Generator::primitive(j));
    return out;
}

std::vector<Generator> GroupModel::even_generators() const
{
    std::vector<Generator> out;
    for (int j : indices())
        out.push_back(Generator::chern(j));
    return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {
    std::string_view trim(std::string_view s)
    {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
            s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
            s.remove_suffix(1);
        return s;
    }

    bool parse_int(std::string_view s, std::int64_t& out)
    {
        if (s.empty())
            return false;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    }

    Generator parse_generator(std::string_view s)
    {
        if (s.size() < 2 || (s[0] != 'c' && s[0] != 'a'))
            throw std::invalid_argument("unknown generator '" + std::string(s) + "'");
        std::int64_t j = 0;
        if (!parse_int(s.substr(1), j) || j < 1 || j > 10000)
            throw std::invalid_argument("bad generator index in '" + std::string(s) + "'");
        return s[0] == 'c' ? Generator::chern(static_cast<int>(j))
                           : Generator::primitive(static_cast<int>(j));
    }

    Element parse_factor(std::string_view token, Prime p)
    {
        token = trim(token);
        std::int64_t c = 0;
        if (parse_int(token, c))
            return Element::constant(c, p);
        // name^int is a power; name^name^... is a wedge product
        std::vector<std::string_view> pieces;
        std::size_t start = 0;
        for (std::size_t k = 0; k <= token.size(); ++k) {
            if (k == token.size() || token[k] == '^') {
                pieces.push_back(trim(token.substr(start, k - start)));
                start = k + 1;
            }
        }
        Element acc = Element::generator(parse_generator(pieces[0]), p);
        for (std::size_t k = 1; k < pieces.size(); ++k) {
            std::int64_t e = 0;
            if (parse_int(pieces[k], e)) {
                if (e < 0 || e > 64)
                    throw std::invalid_argument("exponent out of range");
                Element base = Element::generator(parse_generator(pieces[k - 1]), p);
                // acc already contains one copy of base
                acc = multiply(acc, power(base, static_cast<int>(e) - 1));
            } else {
                acc = multiply(acc, Element::generator(parse_generator(pieces[k]), p));
            }
        }
        return acc;
    }
}  // namespace

Element parse_element(std::string_view text, Prime modulus)
{
    text = trim(text);
    if (text.empty())
        throw std::invalid_argument("empty element");
    Element result(modulus);
    std::size_t k = 0;
    int sign = 1;
    bool expect_term = true;
    while (k < text.size()) {
        char ch = text[k];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++k;
            continue;
        }
        if (ch == '+' || ch == '-') {
            if (ch == '-')
                sign = -sign;
            expect_term = true;
            ++k;
            continue;
        }
        if (!expect_term)
            throw std::invalid_argument("missing operator in '" + std::string(text) + "'");
        std::size_t end = k;
        while (end < text.size() && text[end] != '+' && text[end] != '-')
            ++end;
        std::string_view term = text.substr(k, end - k);
        Element value = Element::constant(1, modulus);
        std::size_t start = 0;
        for (std::size_t t = 0; t <= term.size(); ++t) {
            if (t == term.size() || term[t] == '*') {
                std::string_view factor = trim(term.substr(start, t - start));
                if (factor.empty())
                    throw std::invalid_argument("empty factor in '" + std::string(text) + "'");
                value = multiply(value, parse_factor(factor, modulus));
                start = t + 1;
            }
        }
        result += value.scaled(sign);
        sign = 1;
        expect_term = false;
        k = end;
    }
    if (expect_term)
        throw std::invalid_argument("dangling operator in '" + std::string(text) + "'");
    return result;
}

}  // namespace motsteen
