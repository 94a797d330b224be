#include "orbdual/poly.hpp"

#include <algorithm>

namespace orbdual {

Monomial monomial(std::vector<std::size_t> vars) {
	if (vars.size() > 4) throw InvalidArgument("monomial degree above 4");
	std::sort(vars.begin(), vars.end());
	Monomial m = 0;
	for (std::size_t k = 0; k < vars.size(); ++k) {
		if (vars[k] >= 0xffff) throw InvalidArgument("too many variables");
		m |= static_cast<Monomial>(vars[k] + 1) << (16 * k);
	}
	return m;
}

std::vector<std::size_t> monomial_vars(Monomial m) {
	std::vector<std::size_t> v;
	for (; m != 0; m >>= 16) v.push_back(static_cast<std::size_t>(m & 0xffff) - 1);
	return v;
}

Monomial monomial_mul(Monomial a, Monomial b) {
	auto v = monomial_vars(a);
	auto w = monomial_vars(b);
	v.insert(v.end(), w.begin(), w.end());
	return monomial(v);
}

Poly Poly::variable(std::size_t i) {
	Poly p;
	p.terms[monomial({i})] = 1;
	return p;
}

Poly Poly::constant(const Scalar& c) {
	Poly p;
	if (sgn(c) != 0) p.terms[0] = c;
	return p;
}

void Poly::add_term(Monomial m, const Scalar& c) {
	if (sgn(c) == 0) return;
	auto [it, fresh] = terms.try_emplace(m, c);
	if (fresh) return;
	it->second += c;
	if (sgn(it->second) == 0) terms.erase(it);
}

Scalar Poly::eval(const Vector& x) const {
	Scalar s = 0;
	for (const auto& [m, c] : terms) {
		Scalar t = c;
		for (auto v : monomial_vars(m)) {
			if (v >= x.size()) throw InvalidArgument("polynomial variable out of range");
			t *= x[v];
			if (sgn(t) == 0) break;
		}
		s += t;
	}
	return s;
}

Poly Poly::derivative(std::size_t var) const {
	Poly d;
	for (const auto& [m, c] : terms) {
		auto vars = monomial_vars(m);
		auto k = std::count(vars.begin(), vars.end(), var);
		if (k == 0) continue;
		vars.erase(std::find(vars.begin(), vars.end(), var));
		d.add_term(monomial(vars), c * static_cast<long>(k));
	}
	return d;
}

Vector Poly::gradient(const Vector& x) const {
	Vector g(x.size());
	for (const auto& [m, c] : terms) {
		auto vars = monomial_vars(m);
		for (std::size_t k = 0; k < vars.size(); ++k) {
			if (k > 0 && vars[k] == vars[k - 1]) continue;
			auto mult = std::count(vars.begin(), vars.end(), vars[k]);
			Scalar t = c * static_cast<long>(mult);
			bool skipped = false;
			for (std::size_t l = 0; l < vars.size(); ++l) {
				if (!skipped && vars[l] == vars[k]) {
					skipped = true;
					continue;
				}
				t *= x[vars[l]];
			}
			g[vars[k]] += t;
		}
	}
	return g;
}

Poly& Poly::operator+=(const Poly& o) {
	for (const auto& [m, c] : o.terms) add_term(m, c);
	return *this;
}

Poly& Poly::operator-=(const Poly& o) {
	for (const auto& [m, c] : o.terms) add_term(m, -c);
	return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
	if (sgn(c) == 0) {
		terms.clear();
		return *this;
	}
	for (auto& [m, v] : terms) v *= c;
	return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Scalar& c) { return a *= c; }

Poly operator*(const Poly& a, const Poly& b) {
	Poly p;
	for (const auto& [m, c] : a.terms)
		for (const auto& [n, d] : b.terms) p.add_term(monomial_mul(m, n), c * d);
	return p;
}

}  // namespace orbdual
