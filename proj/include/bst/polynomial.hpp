#ifndef BST_POLYNOMIAL_HPP
#define BST_POLYNOMIAL_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "bst/corenum.hpp"

namespace bst {

// Dense exact-rational polynomial in one indeterminate, coefficients by
// ascending power with trailing zeros trimmed. The zero polynomial has an
// empty coefficient list; degree() returns -1 as its marker.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rat> coeffs);
    static Polynomial constant(const Rat& c);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coefficients() const { return coeffs_; }
    Rat coefficient(std::size_t power) const;

    Rat operator()(const Rat& x) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rat& factor) const;

    // Exact euclidean division; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    // Newton divided differences through (nodes[i], values[i]).
    // Nodes must be pairwise distinct.
    static Polynomial interpolate(const std::vector<Rat>& nodes,
                                  const std::vector<Rat>& values);

    bool operator==(const Polynomial& other) const = default;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Ascending coefficient list, e.g. "[-1/24, 1/8]"; "[]" for zero.
std::string to_string(const Polynomial& p);

}  // namespace bst

#endif
