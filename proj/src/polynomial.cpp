#include "bst/polynomial.hpp"

#include <algorithm>

namespace bst {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

Polynomial Polynomial::constant(const Rat& c)
{
    return Polynomial(std::vector<Rat>{c});
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rat Polynomial::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : Rat(0);
}

Rat Polynomial::operator()(const Rat& x) const
{
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const
{
    std::vector<Rat> out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        out[i] += other.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const
{
    return *this + other.scaled(Rat(-1));
}

Polynomial Polynomial::operator*(const Polynomial& other) const
{
    if (is_zero() || other.is_zero())
        return Polynomial();
    std::vector<Rat> out(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rat& factor) const
{
    std::vector<Rat> out(coeffs_);
    for (auto& c : out)
        c *= factor;
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const
{
    if (divisor.is_zero())
        throw std::invalid_argument("Polynomial::divmod: division by zero polynomial");
    std::vector<Rat> rem(coeffs_);
    const auto& d = divisor.coeffs_;
    if (rem.size() < d.size())
        return {Polynomial(), Polynomial(std::move(rem))};
    std::vector<Rat> quot(rem.size() - d.size() + 1, Rat(0));
    for (std::size_t i = quot.size(); i-- > 0;) {
        Rat q = rem[i + d.size() - 1] / d.back();
        quot[i] = q;
        if (q == 0)
            continue;
        for (std::size_t j = 0; j < d.size(); ++j)
            rem[i + j] -= q * d[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::interpolate(const std::vector<Rat>& nodes,
                                   const std::vector<Rat>& values)
{
    if (nodes.size() != values.size() || nodes.empty())
        throw std::invalid_argument("Polynomial::interpolate: bad node/value lists");
    // divided-difference table, in place
    std::vector<Rat> dd(values);
    for (std::size_t level = 1; level < dd.size(); ++level)
        for (std::size_t i = dd.size() - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    // Horner on the Newton form
    Polynomial result = Polynomial::constant(dd.back());
    for (std::size_t i = dd.size() - 1; i-- > 0;) {
        Polynomial factor(std::vector<Rat>{-nodes[i], Rat(1)});
        result = result * factor + Polynomial::constant(dd[i]);
    }
    return result;
}

std::string to_string(const Polynomial& p)
{
    std::string out = "[";
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(c[i]);
    }
    out += "]";
    return out;
}

}  // namespace bst
