#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "orbdual/exactlin.hpp"

namespace orbdual {

// Monomials of degree <= 4 in at most 65535 variables, packed as sorted 16-bit slots
// holding variable+1. Zero is the constant monomial.
using Monomial = std::uint64_t;

Monomial monomial(std::vector<std::size_t> vars);
std::vector<std::size_t> monomial_vars(Monomial m);
Monomial monomial_mul(Monomial a, Monomial b);

class Poly {
   public:
	std::map<Monomial, Scalar> terms;

	static Poly variable(std::size_t i);
	static Poly constant(const Scalar& c);

	[[nodiscard]] bool is_zero() const { return terms.empty(); }
	[[nodiscard]] Scalar eval(const Vector& x) const;
	[[nodiscard]] Poly derivative(std::size_t var) const;
	[[nodiscard]] Vector gradient(const Vector& x) const;
	void add_term(Monomial m, const Scalar& c);

	Poly& operator+=(const Poly& o);
	Poly& operator-=(const Poly& o);
	Poly& operator*=(const Scalar& c);
	bool operator==(const Poly& o) const = default;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Scalar& c);
Poly operator*(const Poly& a, const Poly& b);

}  // namespace orbdual
