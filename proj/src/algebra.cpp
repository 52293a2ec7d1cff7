#include "klein/algebra.hpp"

#include <stdexcept>

namespace klein {

std::string to_string(Flavor f)
{
    return f == Flavor::twisted ? "twisted" : "untwisted";
}

Flavor parse_flavor(std::string_view text)
{
    if (text == "twisted") return Flavor::twisted;
    if (text == "untwisted") return Flavor::untwisted;
    throw PreconditionError("unknown flavor \"" + std::string(text) + "\" (expected twisted or untwisted)");
}

AlgebraElement AlgebraElement::basis(Flavor f, const GroupElement& g, const Cyclotomic& c)
{
    AlgebraElement a(f);
    a.add_term(g, c);
    return a;
}

AlgebraElement AlgebraElement::basis_inverse(Flavor f, const GroupElement& g)
{
    const GroupElement gi = inverse(g);
    return basis(f, gi, structure_cocycle(f, g, gi).inverse().to_scalar());
}

Cyclotomic AlgebraElement::coefficient(const GroupElement& g) const
{
    auto it = terms_.find(g);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

void AlgebraElement::add_term(const GroupElement& g, const Cyclotomic& c)
{
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::check_flavor(const AlgebraElement& rhs) const
{
    if (flavor_ != rhs.flavor_)
        throw std::invalid_argument("algebra flavor mismatch: " + klein::to_string(flavor_) + " vs " +
                                    klein::to_string(rhs.flavor_));
}

AlgebraElement AlgebraElement::operator-() const
{
    AlgebraElement out = *this;
    for (auto& [g, c] : out.terms_) c = -c;
    return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs)
{
    check_flavor(rhs);
    for (const auto& [g, c] : rhs.terms_) add_term(g, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs)
{
    check_flavor(rhs);
    for (const auto& [g, c] : rhs.terms_) add_term(g, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Cyclotomic& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, x] : terms_) x *= c;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
{
    a.check_flavor(b);
    AlgebraElement out(a.flavor_);
    for (const auto& [g, x] : a.terms_)
        for (const auto& [h, y] : b.terms_) {
            const Phase mu = structure_cocycle(a.flavor_, g, h);
            Cyclotomic c = x * y;
            if (mu != Phase::one()) c *= mu.to_scalar();
            out.add_term(multiply(g, h), c);
        }
    return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b)
{
    return a.flavor_ == b.flavor_ && a.terms_ == b.terms_;
}

std::string AlgebraElement::to_string() const
{
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : terms_) {
        std::string coeff = c.to_string();
        const bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
        if (compound) coeff = "(" + coeff + ")";
        if (!out.empty()) out += coeff.front() == '-' ? " - " : " + ";
        if (!out.empty() && coeff.front() == '-') coeff.erase(0, 1);
        if (coeff == "1")
            coeff.clear();
        else if (coeff == "-1")
            coeff = "-";
        else
            coeff += "*";
        out += coeff + "N" + g.to_string();
    }
    return out;
}

bool PresentationReport::pass() const
{
    for (const auto& r : relations)
        if (!r.holds) return false;
    return true;
}

PresentationReport verify_presentation(Flavor f)
{
    const auto s = AlgebraElement::basis(f, kGenS);
    const auto x = AlgebraElement::basis(f, kGenX);
    const auto y = AlgebraElement::basis(f, kGenY);
    const auto xi = AlgebraElement::basis_inverse(f, kGenX);
    const auto si = AlgebraElement::basis_inverse(f, kGenS);
    const auto one = AlgebraElement::unit(f);
    const bool tw = f == Flavor::twisted;

    PresentationReport report{f, {}};
    auto add = [&](std::string name, std::string relation, const AlgebraElement& residual) {
        report.relations.push_back({std::move(name), std::move(relation), residual.is_zero(), residual.to_string()});
    };
    add("involution", "s^2 - 1", s * s - one);
    if (tw)
        add("anticommute-sY", "sY + Ys", s * y + y * s);
    else
        add("commute-sY", "sY - Ys", s * y - y * s);
    add("dihedral-sX", "sX - X^-1 s", s * x - xi * s);
    add("commute-XY", "XY - YX", x * y - y * x);
    add("conjugate-X", "s X s^-1 - X^-1", s * x * si - xi);
    add("conjugate-Y", tw ? "s Y s^-1 + Y" : "s Y s^-1 - Y", tw ? s * y * si + y : s * y * si - y);
    return report;
}

long long finite_dimension(int modulus)
{
    quotient_project(kIdentity, modulus);
    return 2LL * modulus * modulus;
}

}  // namespace klein
