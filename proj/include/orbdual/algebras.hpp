#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "orbdual/exactlin.hpp"
#include "orbdual/poly.hpp"

namespace orbdual {

Matrix unit_matrix(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);

// E_ii first, then E_ij (i != j) row by row
std::vector<Matrix> gl_basis(std::size_t n);
// upper triangular part of gl_basis
std::vector<Matrix> gl_borel(std::size_t n);

// Omega = [[0, J], [-J, 0]] with J antidiagonal; basis a_1..a_n, b_n..b_1
Matrix symplectic_form(std::size_t n);
std::vector<Matrix> sp_basis(std::size_t n);
std::vector<Matrix> sp_borel(std::size_t n);

// antidiagonal split form
Matrix split_quadratic_form(std::size_t n);
// Q^{-1}(E_ij - E_ji), i < j
std::vector<Matrix> so_basis(const Matrix& q);

// x |-> A x on row-major r x c matrices, and x |-> x B
Matrix left_action(const Matrix& a, std::size_t cols);
Matrix right_action(const Matrix& b, std::size_t rows);

struct SpinModule {
	std::size_t d = 0;
	Matrix metric;                     // B on C^d, basis e_1..e_k, f_1..f_k (, e_0)
	std::vector<Matrix> gamma;         // Clifford action on the full spinor space
	std::vector<Matrix> spinor_gens;   // gamma(x)gamma(y) - B(x,y) over basis pairs x < y
	std::vector<Matrix> vector_gens;   // matching action on C^d
	std::vector<std::size_t> even, odd;  // spinor basis indices by degree parity
};

SpinModule spin_module(std::size_t d);
// generator for the pair (x, y) of vectors in C^d; spinor and vector side
Matrix spin_generator(const SpinModule& s, const Vector& x, const Vector& y);
Matrix vector_generator(const SpinModule& s, const Vector& x, const Vector& y);
Matrix restrict_to(const Matrix& m, const std::vector<std::size_t>& idx);

// split octonions as Zorn vector matrices, coordinates (a, u1, u2, u3, v1, v2, v3, b)
using Octonion = std::array<Scalar, 8>;
Octonion oct_mul(const Octonion& x, const Octonion& y);
Octonion oct_conj(const Octonion& x);
Scalar oct_norm(const Octonion& x);
Octonion oct_basis(std::size_t i);

// imaginary octonions with basis (e_a - e_b), u1..u3, v1..v3
Octonion imaginary_embed(const Vector& x);
Vector imaginary_project(const Octonion& o);
Matrix imaginary_gram();
std::vector<Matrix> g2_basis();

// Hermitian 3x3 octonion matrices, coordinates (alpha1..3, c1, c2, c3) with
// X = [[a1, c3, c2*], [c3*, a2, c1], [c2, c1*, a3]]
struct JordanAlgebra {
	std::size_t dim = 27;
	std::vector<std::vector<std::pair<std::size_t, Scalar>>> mult;  // index i*27+j
	Vector identity;
	Poly det;
	std::vector<Poly> adjoint;

	[[nodiscard]] Vector product(const Vector& x, const Vector& y) const;
	[[nodiscard]] Scalar trace(const Vector& x) const;
	[[nodiscard]] Matrix left_mult(const Vector& a) const;
	[[nodiscard]] Vector sharp(const Vector& x) const;
};

const JordanAlgebra& jordan_h3o();
// structure algebra: L_a for traceless a and their commutators, an independent subset
std::vector<Matrix> e6_basis();

// rows of matrices flattened; keeps the first independent ones in order
std::vector<Matrix> independent_subset(const std::vector<Matrix>& ms, std::size_t limit = SIZE_MAX);

}  // namespace orbdual
