#include "klein/group.hpp"

#include <cctype>
#include <sstream>

namespace klein {

namespace {

long long mod(long long a, long long n)
{
    const long long r = a % n;
    return r < 0 ? r + n : r;
}

std::string join_elements(std::span<const GroupElement> gs)
{
    std::string out = "(";
    for (std::size_t k = 0; k < gs.size(); ++k) {
        if (k) out += ", ";
        out += gs[k].to_string();
    }
    return out + ")";
}

}  // namespace

std::string GroupElement::to_string() const
{
    std::ostringstream os;
    os << "(" << m << "," << eps << "," << n << ")";
    return os.str();
}

GroupElement multiply(const GroupElement& g, const GroupElement& h)
{
    return {g.eps ? g.m - h.m : g.m + h.m, g.eps ^ h.eps, g.n + h.n};
}

GroupElement inverse(const GroupElement& g)
{
    // (m,1,n)^2 = (0,0,2n), so the inverse of (m,1,n) is (m,1,-n).
    return g.eps ? GroupElement{g.m, 1, -g.n} : GroupElement{-g.m, 0, -g.n};
}

GroupElement power(const GroupElement& g, long long k)
{
    GroupElement base = k < 0 ? inverse(g) : g;
    unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
    GroupElement out = kIdentity;
    while (e) {
        if (e & 1) out = multiply(out, base);
        e >>= 1;
        if (e) base = multiply(base, base);
    }
    return out;
}

GroupElement word_evaluate(std::span<const Letter> word)
{
    GroupElement out = kIdentity;
    for (const Letter& l : word) {
        const GroupElement& g = l.gen == Generator::s ? kGenS : l.gen == Generator::X ? kGenX : kGenY;
        out = multiply(out, power(g, l.exponent));
    }
    return out;
}

std::vector<Letter> parse_word(std::string_view text)
{
    std::vector<Letter> out;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw PreconditionError("bad word \"" + std::string(text) + "\": " + what);
    };
    while (pos < text.size()) {
        const char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*') {
            ++pos;
            continue;
        }
        Letter l{};
        if (c == 's')
            l.gen = Generator::s;
        else if (c == 'X' || c == 'x')
            l.gen = Generator::X;
        else if (c == 'Y' || c == 'y')
            l.gen = Generator::Y;
        else if (c == 'e') {
            ++pos;
            continue;
        } else
            fail(std::string("unknown generator '") + c + "'");
        ++pos;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            bool negative = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
            const std::size_t start = pos;
            long long e = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                if (e > 1'000'000'000LL) fail("exponent too large");
                e = e * 10 + (text[pos++] - '0');
            }
            if (pos == start) fail("expected exponent");
            l.exponent = negative ? -e : e;
        }
        out.push_back(l);
    }
    return out;
}

std::vector<GroupElement> window_elements(int window)
{
    if (window < 0) throw PreconditionError("window must be non-negative");
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(2 * (2 * window + 1) * (2 * window + 1)));
    for (long long m = -window; m <= window; ++m)
        for (int eps = 0; eps < 2; ++eps)
            for (long long n = -window; n <= window; ++n) out.push_back({m, eps, n});
    return out;
}

std::string FiniteQuotientElement::to_string() const
{
    std::ostringstream os;
    os << "(" << m << "," << eps << "," << n << " mod " << modulus << ")";
    return os.str();
}

FiniteQuotientElement quotient_project(const GroupElement& g, int modulus)
{
    if (modulus < 1) throw PreconditionError("modulus must be positive");
    if (modulus % 2) throw PreconditionError("cocycle does not descend: modulus must be even");
    return {modulus, static_cast<int>(mod(g.m, modulus)), g.eps, static_cast<int>(mod(g.n, modulus))};
}

FiniteQuotientElement multiply(const FiniteQuotientElement& g, const FiniteQuotientElement& h)
{
    if (g.modulus != h.modulus) throw std::invalid_argument("quotient elements with different moduli");
    return quotient_project(multiply(g.lift(), h.lift()), g.modulus);
}

std::vector<FiniteQuotientElement> quotient_elements(int modulus)
{
    quotient_project(kIdentity, modulus);
    std::vector<FiniteQuotientElement> out;
    out.reserve(static_cast<std::size_t>(2 * modulus * modulus));
    for (int m = 0; m < modulus; ++m)
        for (int eps = 0; eps < 2; ++eps)
            for (int n = 0; n < modulus; ++n) out.push_back({modulus, m, eps, n});
    return out;
}

std::string to_string(CocycleKind kind)
{
    switch (kind) {
    case CocycleKind::trivial: return "trivial";
    case CocycleKind::mu_t: return "mu_t";
    case CocycleKind::coboundary_modified: return "coboundary_modified";
    case CocycleKind::custom: return "custom";
    }
    return "?";
}

Cocycle Cocycle::trivial()
{
    return {CocycleKind::trivial, "trivial", [](const GroupElement&, const GroupElement&) { return Phase::one(); }};
}

Cocycle Cocycle::mu_t()
{
    return {CocycleKind::mu_t, "mu_t", [](const GroupElement& g, const GroupElement& h) { return klein::mu_t(g, h); }};
}

Cochain::Cochain(int window) : window_(window)
{
    if (window < 0) throw PreconditionError("window must be non-negative");
    values_.assign(2 * static_cast<std::size_t>(2 * window + 1) * static_cast<std::size_t>(2 * window + 1),
                   Phase::one());
}

void Cochain::set(const GroupElement& g, Phase value)
{
    const auto k = index(g);
    if (!k) throw PreconditionError("cochain value outside its window: " + g.to_string());
    values_[*k] = value;
}

Cochain random_cochain(std::mt19937_64& rng, int window)
{
    std::uniform_int_distribution<int> pick(0, 3);
    Cochain f(window);
    for (const GroupElement& g : window_elements(window))
        if (g != kIdentity) f.set(g, Phase::from_power(pick(rng)));
    return f;
}

Cocycle apply_coboundary(const Cocycle& c, Cochain f)
{
    if (f(kIdentity) != Phase::one()) throw PreconditionError("coboundary function must satisfy f(e) = 1");
    return {CocycleKind::coboundary_modified, c.name() + "*df",
            [c, f = std::move(f)](const GroupElement& g, const GroupElement& h) {
                return c(g, h) * f(g) * f(h) / f(multiply(g, h));
            }};
}

std::string CocycleReport::describe() const
{
    if (pass())
        return "normalized; identity holds on " + std::to_string(triples_checked) + " triples over " +
               std::to_string(elements) + " elements";
    std::vector<std::string> parts;
    if (!normalized) parts.push_back("not normalized at g = " + normalization_witness->to_string());
    if (!identity_holds) parts.push_back("cocycle identity fails at (g,h,k) = " + join_elements(*witness));
    if (!descends) parts.push_back("value depends on the lift at (g,h) = " + join_elements(*lift_witness));
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

CocycleReport check_cocycle_identity(const Cocycle& c, int window, Execution exec)
{
    const auto elems = window_elements(window);
    const auto sweep = sweep_cocycle<GroupElement>(
        elems, kIdentity, Phase::one(), [](const GroupElement& g, const GroupElement& h) { return multiply(g, h); },
        [&c](const GroupElement& g, const GroupElement& h) { return c(g, h); }, exec);
    CocycleReport r;
    r.normalized = sweep.normalized;
    r.identity_holds = sweep.identity_holds;
    r.elements = elems.size();
    r.triples_checked = sweep.triples_checked;
    r.normalization_witness = sweep.normalization_witness;
    r.witness = sweep.identity_witness;
    return r;
}

CocycleReport check_cocycle_identity_quotient(const Cocycle& c, int modulus, Execution exec)
{
    const auto elems = quotient_elements(modulus);
    const FiniteQuotientElement e = quotient_project(kIdentity, modulus);
    auto mu = [&c](const FiniteQuotientElement& g, const FiniteQuotientElement& h) { return c(g.lift(), h.lift()); };
    const auto sweep = sweep_cocycle<FiniteQuotientElement>(
        elems, e, Phase::one(),
        [](const FiniteQuotientElement& g, const FiniteQuotientElement& h) { return multiply(g, h); }, mu, exec);

    CocycleReport r;
    r.normalized = sweep.normalized;
    r.identity_holds = sweep.identity_holds;
    r.elements = elems.size();
    r.triples_checked = sweep.triples_checked;
    if (sweep.normalization_witness) r.normalization_witness = sweep.normalization_witness->lift();
    if (sweep.identity_witness) {
        const auto& w = *sweep.identity_witness;
        r.witness = std::array<GroupElement, 3>{w[0].lift(), w[1].lift(), w[2].lift()};
    }

    // Shifting m or n of either argument by +-N must not change the value.
    const long long n = modulus;
    const std::array<GroupElement, 5> shifts{GroupElement{0, 0, 0}, {n, 0, 0}, {-n, 0, 0}, {0, 0, n}, {0, 0, -n}};
    for (const auto& g : elems) {
        for (const auto& h : elems) {
            const Phase base = c(g.lift(), h.lift());
            for (const auto& dg : shifts)
                for (const auto& dh : shifts) {
                    const GroupElement gg{g.m + dg.m, g.eps, g.n + dg.n};
                    const GroupElement hh{h.m + dh.m, h.eps, h.n + dh.n};
                    if (c(gg, hh) != base) {
                        r.descends = false;
                        r.lift_witness = std::array<GroupElement, 2>{gg, hh};
                        return r;
                    }
                }
        }
    }
    return r;
}

Phase commutator_bicharacter(const Cocycle& c, const GroupElement& g, const GroupElement& h)
{
    if (multiply(g, h) != multiply(h, g))
        throw PreconditionError("bicharacter undefined: " + g.to_string() + " and " + h.to_string() + " do not commute");
    return c(g, h) / c(h, g);
}

std::string to_string(CohomologyClass cls)
{
    return cls == CohomologyClass::trivial ? "trivial" : "nontrivial";
}

CohomologyClass cohomology_class_indicator(const Cocycle& c)
{
    return commutator_bicharacter(c, kGenS, kGenY) == Phase::minus_one() ? CohomologyClass::nontrivial
                                                                        : CohomologyClass::trivial;
}

}  // namespace klein
