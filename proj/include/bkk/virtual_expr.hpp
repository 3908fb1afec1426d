#pragma once

#include <map>
#include <string>
#include <vector>

#include "bkk/lattice.hpp"
#include "bkk/numeric.hpp"

namespace bkk {

// Formal polynomial in named polytope symbols with rational coefficients.
// Degree-n monomials evaluate to mixed volumes of the bound polytopes;
// formal differences like (A - B) are ordinary expressions here, so
// multilinear expansion happens for free.
class VirtualExpr {
   public:
    using Monomial = std::vector<std::string>;  // sorted, with multiplicity

    VirtualExpr() = default;

    static VirtualExpr symbol(const std::string& name);
    static VirtualExpr constant(const Rat& c);

    VirtualExpr operator+(const VirtualExpr& other) const;
    VirtualExpr operator-(const VirtualExpr& other) const;
    VirtualExpr operator*(const VirtualExpr& other) const;
    VirtualExpr operator-() const;
    VirtualExpr scaled(const Rat& c) const;

    void bind(const std::string& name, SupportSet value);

    // Sum over degree-n monomials of coefficient * MV; throws UnboundSymbol.
    Rat evaluate(std::size_t degree) const;

    const std::map<Monomial, Rat>& terms() const { return terms_; }

   private:
    std::map<Monomial, Rat> terms_;
    std::map<std::string, SupportSet> binding_;

    void absorb_binding(const VirtualExpr& other);
};

// x - x^2 + x^3 - ... up to total degree n: the degree-n-relevant part of the
// generating factor x/(1+x).
VirtualExpr geometric_factor(const VirtualExpr& x, std::size_t n);

}  // namespace bkk
