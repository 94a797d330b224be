#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbdual {

using Scalar = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Scalar>;

class Error : public std::runtime_error {
   public:
	using std::runtime_error::runtime_error;
};

// bad input: dimension mismatch, unknown label, malformed JSON ...
class InvalidArgument : public Error {
   public:
	using Error::Error;
};

// the oracle or a recipe disagrees with itself
class Inconsistent : public Error {
   public:
	using Error::Error;
};

std::string to_string(const Scalar& s);
Scalar parse_scalar(const std::string& text);

class Matrix {
   public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols);
	Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

	static Matrix identity(std::size_t n);
	static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

	[[nodiscard]] std::size_t rows() const { return rows_; }
	[[nodiscard]] std::size_t cols() const { return cols_; }
	Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
	const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
	[[nodiscard]] const std::vector<Scalar>& entries() const { return data_; }

	[[nodiscard]] Vector row(std::size_t i) const;
	[[nodiscard]] Vector col(std::size_t j) const;
	[[nodiscard]] Matrix transpose() const;
	[[nodiscard]] bool is_zero() const;
	[[nodiscard]] bool is_identity() const;
	[[nodiscard]] Scalar trace() const;
	[[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

	bool operator==(const Matrix& o) const = default;

	Matrix& operator+=(const Matrix& o);
	Matrix& operator-=(const Matrix& o);
	Matrix& operator*=(const Scalar& c);

   private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Scalar> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(Matrix a, const Scalar& c);
Matrix operator*(const Scalar& c, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix kron(const Matrix& a, const Matrix& b);
// block diagonal sum
Matrix direct_sum(const Matrix& a, const Matrix& b);

bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const Scalar& c);
Scalar dot(const Vector& a, const Vector& b);

// echelon data from fraction-free elimination
struct Echelon {
	std::vector<std::vector<Integer>> rows;  // integer echelon rows, one per pivot
	std::vector<std::size_t> pivots;
};
Echelon fraction_free_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
Matrix rref(const Matrix& m);

class Subspace {
   public:
	Subspace() = default;
	explicit Subspace(std::size_t ambient);  // zero subspace

	static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
	static Subspace row_space(const Matrix& m);
	static Subspace full(std::size_t ambient);

	[[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
	[[nodiscard]] std::size_t dim() const { return basis_.rows(); }
	// rows in reduced row echelon form
	[[nodiscard]] const Matrix& basis() const { return basis_; }
	[[nodiscard]] std::vector<Vector> vectors() const;

	bool operator==(const Subspace& o) const = default;

   private:
	std::size_t ambient_ = 0;
	Matrix basis_;
};

Subspace kernel(const Matrix& m);
// {y : v^T P y = 0 for every v in s}
Subspace annihilator(const Subspace& s, const Matrix& pairing);
Subspace annihilator(const Subspace& s);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vector& v);

// deterministic 64-bit generator; the sequence of std::mt19937_64 is fixed by the standard
class Rng {
   public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}
	std::uint64_t next() { return engine_(); }
	// uniform on [lo, hi] by rejection, independent of the library's distributions
	std::int64_t uniform(std::int64_t lo, std::int64_t hi);

   private:
	std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);
std::uint64_t hash_text(const std::string& s);

Vector random_vector(std::size_t n, Rng& rng, std::int64_t height = 100);
// integer combination of the basis with coefficients in [-height, height], never zero
Vector random_element(const Subspace& s, Rng& rng, std::int64_t height = 100);

}  // namespace orbdual
