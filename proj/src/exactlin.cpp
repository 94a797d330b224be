#include "orbdual/exactlin.hpp"

#include <algorithm>
#include <utility>

namespace orbdual {

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar parse_scalar(const std::string& text) {
	auto ok = !text.empty();
	auto start = (ok && (text[0] == '-' || text[0] == '+')) ? 1u : 0u;
	auto slash = text.find('/');
	auto digits = [&](std::size_t a, std::size_t b) {
		if (a >= b) return false;
		return std::all_of(text.begin() + a, text.begin() + b, [](char c) { return c >= '0' && c <= '9'; });
	};
	if (slash == std::string::npos) {
		ok = ok && digits(start, text.size());
	} else {
		ok = ok && digits(start, slash) && digits(slash + 1, text.size());
	}
	if (!ok) throw InvalidArgument("malformed scalar '" + text + "'");
	Scalar s;
	s.set_str(text[0] == '+' ? text.substr(1) : text, 10);
	if (s.get_den() == 0) throw InvalidArgument("zero denominator in '" + text + "'");
	s.canonicalize();
	return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
	if (data_.size() != rows * cols) throw InvalidArgument("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
	return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
	Matrix m(rows.size(), cols);
	for (std::size_t i = 0; i < rows.size(); ++i) {
		if (rows[i].size() != cols) throw InvalidArgument("row length mismatch");
		for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
	}
	return m;
}

Vector Matrix::row(std::size_t i) const { return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_}; }

Vector Matrix::col(std::size_t j) const {
	Vector v(rows_);
	for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
	return v;
}

Matrix Matrix::transpose() const {
	Matrix t(cols_, rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
	return t;
}

bool Matrix::is_zero() const {
	return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

bool Matrix::is_identity() const {
	if (rows_ != cols_) return false;
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j)
			if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
	return true;
}

Scalar Matrix::trace() const {
	Scalar t = 0;
	for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
	return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
	if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("block out of range");
	Matrix b(nr, nc);
	for (std::size_t i = 0; i < nr; ++i)
		for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
	return b;
}

Matrix& Matrix::operator+=(const Matrix& o) {
	if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shape mismatch in +");
	for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
	return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
	if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix shape mismatch in -");
	for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
	return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
	for (auto& x : data_) x *= c;
	return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= Scalar(-1); }
Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }

Matrix operator*(const Matrix& a, const Matrix& b) {
	if (a.cols() != b.rows()) throw InvalidArgument("matrix shape mismatch in *");
	Matrix c(a.rows(), b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i) {
		for (std::size_t k = 0; k < a.cols(); ++k) {
			const auto& aik = a(i, k);
			if (sgn(aik) == 0) continue;
			for (std::size_t j = 0; j < b.cols(); ++j) {
				if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
			}
		}
	}
	return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
	if (a.cols() != v.size()) throw InvalidArgument("matrix-vector shape mismatch");
	Vector out(a.rows());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t k = 0; k < a.cols(); ++k)
			if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
	return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix kron(const Matrix& a, const Matrix& b) {
	Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j) {
			if (sgn(a(i, j)) == 0) continue;
			for (std::size_t p = 0; p < b.rows(); ++p)
				for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
		}
	return k;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
	Matrix s(a.rows() + b.rows(), a.cols() + b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j);
	for (std::size_t i = 0; i < b.rows(); ++i)
		for (std::size_t j = 0; j < b.cols(); ++j) s(a.rows() + i, a.cols() + j) = b(i, j);
	return s;
}

bool is_zero(const Vector& v) {
	return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

Vector add(const Vector& a, const Vector& b) {
	if (a.size() != b.size()) throw InvalidArgument("vector length mismatch");
	Vector c(a);
	for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
	return c;
}

Vector scale(const Vector& a, const Scalar& c) {
	Vector out(a);
	for (auto& x : out) x *= c;
	return out;
}

Scalar dot(const Vector& a, const Vector& b) {
	if (a.size() != b.size()) throw InvalidArgument("vector length mismatch");
	Scalar s = 0;
	for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
	return s;
}

// Rows are cleared of denominators, then eliminated fraction-free: every entry after a
// step is a minor of the integer matrix, so the division by the previous pivot is exact.
Echelon fraction_free_echelon(const Matrix& m) {
	std::vector<std::vector<Integer>> a;
	a.reserve(m.rows());
	for (std::size_t i = 0; i < m.rows(); ++i) {
		Integer l = 1;
		bool nonzero = false;
		for (std::size_t j = 0; j < m.cols(); ++j) {
			if (sgn(m(i, j)) == 0) continue;
			nonzero = true;
			mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
		}
		if (!nonzero) continue;
		std::vector<Integer> r(m.cols());
		for (std::size_t j = 0; j < m.cols(); ++j) {
			if (sgn(m(i, j)) == 0) continue;
			r[j] = m(i, j).get_num() * (l / m(i, j).get_den());
		}
		a.push_back(std::move(r));
	}
	Echelon e;
	Integer prev = 1;
	std::size_t r = 0;
	const auto n = m.cols();
	Integer t;
	for (std::size_t c = 0; c < n && r < a.size(); ++c) {
		std::size_t p = r;
		while (p < a.size() && sgn(a[p][c]) == 0) ++p;
		if (p == a.size()) continue;
		std::swap(a[r], a[p]);
		for (std::size_t i = r + 1; i < a.size(); ++i) {
			for (std::size_t j = c + 1; j < n; ++j) {
				t = a[r][c] * a[i][j];
				if (sgn(a[i][c]) != 0) t -= a[i][c] * a[r][j];
				mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
			}
			a[i][c] = 0;
		}
		prev = a[r][c];
		e.pivots.push_back(c);
		++r;
	}
	a.resize(r);
	e.rows = std::move(a);
	return e;
}

std::size_t rank(const Matrix& m) { return fraction_free_echelon(m).pivots.size(); }

Matrix rref(const Matrix& m) {
	auto e = fraction_free_echelon(m);
	const auto r = e.pivots.size();
	Matrix out(r, m.cols());
	for (std::size_t i = 0; i < r; ++i) {
		const Integer& p = e.rows[i][e.pivots[i]];
		for (std::size_t j = 0; j < m.cols(); ++j)
			if (sgn(e.rows[i][j]) != 0) {
				out(i, j) = Scalar(e.rows[i][j], p);
				out(i, j).canonicalize();
			}
	}
	for (std::size_t i = r; i-- > 0;) {
		for (std::size_t k = 0; k < i; ++k) {
			Scalar f = out(k, e.pivots[i]);
			if (sgn(f) == 0) continue;
			for (std::size_t j = e.pivots[i]; j < m.cols(); ++j)
				if (sgn(out(i, j)) != 0) out(k, j) -= f * out(i, j);
		}
	}
	return out;
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::row_space(const Matrix& m) {
	Subspace s(m.cols());
	s.basis_ = rref(m);
	return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
	return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::full(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

std::vector<Vector> Subspace::vectors() const {
	std::vector<Vector> v;
	for (std::size_t i = 0; i < basis_.rows(); ++i) v.push_back(basis_.row(i));
	return v;
}

Subspace kernel(const Matrix& m) {
	Matrix r = rref(m);
	std::vector<std::size_t> pivots;
	std::vector<bool> is_pivot(m.cols(), false);
	for (std::size_t i = 0; i < r.rows(); ++i) {
		std::size_t j = 0;
		while (sgn(r(i, j)) == 0) ++j;
		pivots.push_back(j);
		is_pivot[j] = true;
	}
	std::vector<Vector> basis;
	for (std::size_t f = 0; f < m.cols(); ++f) {
		if (is_pivot[f]) continue;
		Vector v(m.cols());
		v[f] = 1;
		for (std::size_t i = 0; i < r.rows(); ++i) v[pivots[i]] = -r(i, f);
		basis.push_back(std::move(v));
	}
	return Subspace::span(m.cols(), basis);
}

Subspace annihilator(const Subspace& s) {
	if (s.dim() == 0) return Subspace::full(s.ambient_dim());
	return kernel(s.basis());
}

Subspace annihilator(const Subspace& s, const Matrix& pairing) {
	if (pairing.rows() != s.ambient_dim() || pairing.cols() != s.ambient_dim())
		throw InvalidArgument("pairing shape mismatch");
	if (pairing.is_identity()) return annihilator(s);
	if (rank(pairing) != pairing.rows()) throw InvalidArgument("singular pairing");
	if (s.dim() == 0) return Subspace::full(s.ambient_dim());
	return kernel(s.basis() * pairing);
}

Subspace sum(const Subspace& a, const Subspace& b) {
	if (a.ambient_dim() != b.ambient_dim()) throw InvalidArgument("ambient dimension mismatch");
	auto v = a.vectors();
	auto w = b.vectors();
	v.insert(v.end(), w.begin(), w.end());
	return Subspace::span(a.ambient_dim(), v);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
	if (a.ambient_dim() != b.ambient_dim()) throw InvalidArgument("ambient dimension mismatch");
	return annihilator(sum(annihilator(a), annihilator(b)));
}

bool contains(const Subspace& a, const Vector& v) {
	if (v.size() != a.ambient_dim()) throw InvalidArgument("vector length mismatch");
	if (is_zero(v)) return true;
	auto rows = a.vectors();
	rows.push_back(v);
	return rank(Matrix::from_rows(rows, a.ambient_dim())) == a.dim();
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
	if (lo > hi) throw InvalidArgument("empty range");
	const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
	if (span == 0) return static_cast<std::int64_t>(next());
	const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
	std::uint64_t x;
	do {
		x = next();
	} while (x >= limit);
	return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

// splitmix64 finaliser
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
	std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
	z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
	z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
	return z ^ (z >> 31);
}

// FNV-1a
std::uint64_t hash_text(const std::string& s) {
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (unsigned char c : s) {
		h ^= c;
		h *= 0x100000001b3ULL;
	}
	return h;
}

Vector random_vector(std::size_t n, Rng& rng, std::int64_t height) {
	Vector v(n);
	for (auto& x : v) x = rng.uniform(-height, height);
	return v;
}

Vector random_element(const Subspace& s, Rng& rng, std::int64_t height) {
	if (s.dim() == 0) throw InvalidArgument("zero subspace");
	if (height < 1) throw InvalidArgument("height must be positive");
	for (;;) {
		Vector c = random_vector(s.dim(), rng, height);
		if (is_zero(c)) continue;
		Vector v(s.ambient_dim());
		for (std::size_t i = 0; i < s.dim(); ++i) {
			if (sgn(c[i]) == 0) continue;
			for (std::size_t j = 0; j < v.size(); ++j)
				if (sgn(s.basis()(i, j)) != 0) v[j] += c[i] * s.basis()(i, j);
		}
		return v;
	}
}

}  // namespace orbdual
