#include "orbdual/algebras.hpp"

#include <bit>
#include <mutex>

#include "orbdual/sparse.hpp"

namespace orbdual {

Matrix unit_matrix(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
	Matrix m(rows, cols);
	m(i, j) = 1;
	return m;
}

std::vector<Matrix> gl_basis(std::size_t n) {
	std::vector<Matrix> b;
	for (std::size_t i = 0; i < n; ++i) b.push_back(unit_matrix(n, n, i, i));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (i != j) b.push_back(unit_matrix(n, n, i, j));
	return b;
}

std::vector<Matrix> gl_borel(std::size_t n) {
	std::vector<Matrix> b;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j) b.push_back(unit_matrix(n, n, i, j));
	return b;
}

Matrix symplectic_form(std::size_t n) {
	Matrix w(2 * n, 2 * n);
	for (std::size_t i = 0; i < n; ++i) {
		w(i, 2 * n - 1 - i) = 1;
		w(2 * n - 1 - i, i) = -1;
	}
	return w;
}

std::vector<Matrix> sp_basis(std::size_t n) {
	const auto w = symplectic_form(n);
	std::vector<Matrix> b;
	for (std::size_t i = 0; i < 2 * n; ++i)
		for (std::size_t j = i; j < 2 * n; ++j) {
			Matrix s = unit_matrix(2 * n, 2 * n, i, j) + unit_matrix(2 * n, 2 * n, j, i);
			b.push_back(-(w * s));
		}
	return b;
}

std::vector<Matrix> sp_borel(std::size_t n) {
	std::vector<Matrix> b;
	for (const auto& x : sp_basis(n)) {
		bool upper = true;
		for (std::size_t i = 0; i < x.rows() && upper; ++i)
			for (std::size_t j = 0; j < i; ++j)
				if (sgn(x(i, j)) != 0) {
					upper = false;
					break;
				}
		if (upper) b.push_back(x);
	}
	return b;
}

Matrix split_quadratic_form(std::size_t n) {
	Matrix q(n, n);
	for (std::size_t i = 0; i < n; ++i) q(i, n - 1 - i) = 1;
	return q;
}

namespace {

Matrix inverse(const Matrix& m) {
	const auto n = m.rows();
	Matrix aug(n, 2 * n);
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
		aug(i, n + i) = 1;
	}
	Matrix r = rref(aug);
	if (r.rows() != n || !r.block(0, 0, n, n).is_identity()) throw InvalidArgument("singular matrix");
	return r.block(0, n, n, n);
}

}  // namespace

std::vector<Matrix> so_basis(const Matrix& q) {
	const auto n = q.rows();
	const auto qi = inverse(q);
	std::vector<Matrix> b;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			b.push_back(qi * (unit_matrix(n, n, i, j) - unit_matrix(n, n, j, i)));
	return b;
}

Matrix left_action(const Matrix& a, std::size_t cols) { return kron(a, Matrix::identity(cols)); }

Matrix right_action(const Matrix& b, std::size_t rows) { return kron(Matrix::identity(rows), b.transpose()); }

namespace {

Matrix gamma_of(const SpinModule& s, const Vector& x) {
	Matrix g(s.gamma[0].rows(), s.gamma[0].cols());
	for (std::size_t i = 0; i < x.size(); ++i)
		if (sgn(x[i]) != 0) g += s.gamma[i] * x[i];
	return g;
}

Scalar metric_of(const SpinModule& s, const Vector& x, const Vector& y) { return dot(x, s.metric * y); }

Vector unit_vector(std::size_t n, std::size_t i) {
	Vector v(n);
	v[i] = 1;
	return v;
}

}  // namespace

SpinModule spin_module(std::size_t d) {
	if (d < 2) throw InvalidArgument("spin module needs d >= 2");
	SpinModule s;
	s.d = d;
	const std::size_t k = d / 2;
	const std::size_t dim = std::size_t{1} << k;
	s.metric = Matrix(d, d);
	for (std::size_t i = 0; i < k; ++i) {
		s.metric(i, k + i) = Scalar(1, 2);
		s.metric(k + i, i) = Scalar(1, 2);
	}
	if (d % 2 == 1) s.metric(2 * k, 2 * k) = 1;
	// exterior algebra on e_1..e_k; basis index = bitmask
	std::vector<Matrix> wedge(k, Matrix(dim, dim)), contract(k, Matrix(dim, dim));
	for (std::size_t i = 0; i < k; ++i) {
		for (std::size_t mask = 0; mask < dim; ++mask) {
			const int below = std::popcount(mask & ((std::size_t{1} << i) - 1));
			const int sign = below % 2 == 0 ? 1 : -1;
			if (mask & (std::size_t{1} << i)) {
				contract[i](mask ^ (std::size_t{1} << i), mask) = sign;
			} else {
				wedge[i](mask | (std::size_t{1} << i), mask) = sign;
			}
		}
	}
	for (std::size_t i = 0; i < k; ++i) s.gamma.push_back(wedge[i]);
	for (std::size_t i = 0; i < k; ++i) s.gamma.push_back(contract[i]);
	if (d % 2 == 1) {
		Matrix parity(dim, dim);
		for (std::size_t mask = 0; mask < dim; ++mask) parity(mask, mask) = std::popcount(mask) % 2 == 0 ? 1 : -1;
		s.gamma.push_back(parity);
	}
	for (std::size_t mask = 0; mask < dim; ++mask) (std::popcount(mask) % 2 == 0 ? s.even : s.odd).push_back(mask);
	for (std::size_t a = 0; a < d; ++a)
		for (std::size_t b = a + 1; b < d; ++b) {
			auto x = unit_vector(d, a);
			auto y = unit_vector(d, b);
			s.spinor_gens.push_back(spin_generator(s, x, y));
			s.vector_gens.push_back(vector_generator(s, x, y));
		}
	return s;
}

Matrix spin_generator(const SpinModule& s, const Vector& x, const Vector& y) {
	Matrix g = gamma_of(s, x) * gamma_of(s, y);
	const Scalar b = metric_of(s, x, y);
	for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= b;
	return g;
}

// v |-> 2(B(y,v)x - B(x,v)y)
Matrix vector_generator(const SpinModule& s, const Vector& x, const Vector& y) {
	Matrix m(s.d, s.d);
	const Vector by = s.metric * y;
	const Vector bx = s.metric * x;
	for (std::size_t c = 0; c < s.d; ++c)
		for (std::size_t r = 0; r < s.d; ++r) m(r, c) = 2 * (by[c] * x[r] - bx[c] * y[r]);
	return m;
}

Matrix restrict_to(const Matrix& m, const std::vector<std::size_t>& idx) {
	Matrix r(idx.size(), idx.size());
	for (std::size_t i = 0; i < idx.size(); ++i)
		for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = m(idx[i], idx[j]);
	return r;
}

namespace {

using V3 = std::array<Scalar, 3>;

V3 cross(const V3& u, const V3& v) {
	return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Scalar dot3(const V3& u, const V3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

}  // namespace

Octonion oct_mul(const Octonion& x, const Octonion& y) {
	const Scalar &a = x[0], &b = x[7], &a2 = y[0], &b2 = y[7];
	const V3 u{x[1], x[2], x[3]}, v{x[4], x[5], x[6]};
	const V3 u2{y[1], y[2], y[3]}, v2{y[4], y[5], y[6]};
	const auto vv = cross(v, v2);
	const auto uu = cross(u, u2);
	Octonion z;
	z[0] = a * a2 + dot3(u, v2);
	z[7] = b * b2 + dot3(v, u2);
	for (std::size_t i = 0; i < 3; ++i) {
		z[1 + i] = a * u2[i] + b2 * u[i] + vv[i];
		z[4 + i] = a2 * v[i] + b * v2[i] - uu[i];
	}
	return z;
}

Octonion oct_conj(const Octonion& x) {
	Octonion c;
	c[0] = x[7];
	c[7] = x[0];
	for (std::size_t i = 1; i < 7; ++i) c[i] = -x[i];
	return c;
}

Scalar oct_norm(const Octonion& x) { return x[0] * x[7] - (x[1] * x[4] + x[2] * x[5] + x[3] * x[6]); }

Octonion oct_basis(std::size_t i) {
	Octonion o;
	o[i] = 1;
	return o;
}

Octonion imaginary_embed(const Vector& x) {
	Octonion o;
	o[0] = x[0];
	o[7] = -x[0];
	for (std::size_t i = 1; i < 7; ++i) o[i] = x[i];
	return o;
}

Vector imaginary_project(const Octonion& o) {
	if (o[0] + o[7] != 0) throw Inconsistent("octonion is not imaginary");
	Vector x(7);
	x[0] = o[0];
	for (std::size_t i = 1; i < 7; ++i) x[i] = o[i];
	return x;
}

namespace {

Scalar oct_polar(const Octonion& x, const Octonion& y) {
	Octonion s;
	for (std::size_t i = 0; i < 8; ++i) s[i] = x[i] + y[i];
	return oct_norm(s) - oct_norm(x) - oct_norm(y);
}

}  // namespace

Matrix imaginary_gram() {
	Matrix q(7, 7);
	for (std::size_t i = 0; i < 7; ++i)
		for (std::size_t j = 0; j < 7; ++j)
			q(i, j) = oct_polar(imaginary_embed(unit_vector(7, i)), imaginary_embed(unit_vector(7, j)));
	return q;
}

// derivations of the octonions, found as the stabiliser of phi(x,y,z) = <x, yz> in so(Im O)
std::vector<Matrix> g2_basis() {
	const auto so7 = so_basis(imaginary_gram());
	std::vector<Octonion> e;
	for (std::size_t i = 0; i < 7; ++i) e.push_back(imaginary_embed(unit_vector(7, i)));
	auto phi = [&](const Octonion& x, const Octonion& y, const Octonion& z) { return oct_polar(x, oct_mul(y, z)); };
	auto image = [&](const Matrix& d, std::size_t i) { return imaginary_embed(d.col(i)); };
	std::vector<Vector> rows;
	for (std::size_t i = 0; i < 7; ++i)
		for (std::size_t j = i + 1; j < 7; ++j)
			for (std::size_t k = j + 1; k < 7; ++k) {
				Vector r;
				for (const auto& d : so7)
					r.push_back(phi(image(d, i), e[j], e[k]) + phi(e[i], image(d, j), e[k]) +
					            phi(e[i], e[j], image(d, k)));
				rows.push_back(r);
			}
	const auto ker = kernel(Matrix::from_rows(rows, so7.size()));
	std::vector<Matrix> g2;
	for (const auto& c : ker.vectors()) {
		Matrix d(7, 7);
		for (std::size_t t = 0; t < c.size(); ++t)
			if (sgn(c[t]) != 0) d += so7[t] * c[t];
		g2.push_back(d);
	}
	return g2;
}

namespace {

using OctMatrix = std::array<std::array<Octonion, 3>, 3>;

OctMatrix hermitian(const Vector& x) {
	OctMatrix m{};
	for (std::size_t i = 0; i < 3; ++i) {
		m[i][i][0] = x[i];
		m[i][i][7] = x[i];
	}
	auto c = [&](std::size_t which) {
		Octonion o;
		for (std::size_t t = 0; t < 8; ++t) o[t] = x[3 + 8 * which + t];
		return o;
	};
	m[1][2] = c(0);
	m[2][1] = oct_conj(c(0));
	m[2][0] = c(1);
	m[0][2] = oct_conj(c(1));
	m[0][1] = c(2);
	m[1][0] = oct_conj(c(2));
	return m;
}

OctMatrix mat_mul(const OctMatrix& a, const OctMatrix& b) {
	OctMatrix c{};
	for (std::size_t i = 0; i < 3; ++i)
		for (std::size_t j = 0; j < 3; ++j)
			for (std::size_t k = 0; k < 3; ++k) {
				auto p = oct_mul(a[i][k], b[k][j]);
				for (std::size_t t = 0; t < 8; ++t) c[i][j][t] += p[t];
			}
	return c;
}

Vector coordinates(const OctMatrix& m) {
	Vector x(27);
	for (std::size_t i = 0; i < 3; ++i) {
		const auto& d = m[i][i];
		if (d[0] != d[7] || sgn(d[1]) || sgn(d[2]) || sgn(d[3]) || sgn(d[4]) || sgn(d[5]) || sgn(d[6]))
			throw Inconsistent("Jordan product left the Hermitian matrices");
		x[i] = d[0];
	}
	const std::array<std::pair<std::size_t, std::size_t>, 3> pos{{{1, 2}, {2, 0}, {0, 1}}};
	for (std::size_t w = 0; w < 3; ++w)
		for (std::size_t t = 0; t < 8; ++t) x[3 + 8 * w + t] = m[pos[w].first][pos[w].second][t];
	return x;
}

JordanAlgebra build_jordan() {
	JordanAlgebra j;
	const std::size_t n = 27;
	j.mult.resize(n * n);
	std::vector<OctMatrix> basis;
	for (std::size_t i = 0; i < n; ++i) basis.push_back(hermitian(unit_vector(n, i)));
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) {
			auto ab = mat_mul(basis[a], basis[b]);
			auto ba = mat_mul(basis[b], basis[a]);
			for (std::size_t r = 0; r < 3; ++r)
				for (std::size_t c = 0; c < 3; ++c)
					for (std::size_t t = 0; t < 8; ++t) ab[r][c][t] = (ab[r][c][t] + ba[r][c][t]) / 2;
			const auto x = coordinates(ab);
			for (std::size_t k = 0; k < n; ++k)
				if (sgn(x[k]) != 0) j.mult[a * n + b].emplace_back(k, x[k]);
		}
	j.identity = Vector(n);
	for (std::size_t i = 0; i < 3; ++i) j.identity[i] = 1;

	// symbolic x^2, S(x), x# and N(x) = T(x o x#)/3
	std::vector<Poly> sq(n);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (const auto& [k, c] : j.mult[a * n + b]) sq[k].add_term(monomial({a, b}), c);
	Poly t1 = Poly::variable(0) + Poly::variable(1) + Poly::variable(2);
	Poly t2 = sq[0] + sq[1] + sq[2];
	Poly s = (t1 * t1 - t2) * Scalar(1, 2);
	j.adjoint.resize(n);
	for (std::size_t k = 0; k < n; ++k) {
		j.adjoint[k] = sq[k] - t1 * Poly::variable(k);
		if (k < 3) j.adjoint[k] += s;
	}
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			for (const auto& [k, c] : j.mult[a * n + b])
				if (k < 3) j.det += Poly::variable(a) * j.adjoint[b] * (c / 3);
	return j;
}

}  // namespace

Vector JordanAlgebra::product(const Vector& x, const Vector& y) const {
	Vector z(dim);
	for (std::size_t a = 0; a < dim; ++a) {
		if (sgn(x[a]) == 0) continue;
		for (std::size_t b = 0; b < dim; ++b) {
			if (sgn(y[b]) == 0) continue;
			for (const auto& [k, c] : mult[a * dim + b]) z[k] += c * x[a] * y[b];
		}
	}
	return z;
}

Scalar JordanAlgebra::trace(const Vector& x) const { return x[0] + x[1] + x[2]; }

Matrix JordanAlgebra::left_mult(const Vector& a) const {
	Matrix l(dim, dim);
	for (std::size_t b = 0; b < dim; ++b) {
		Vector e(dim);
		e[b] = 1;
		auto col = product(a, e);
		for (std::size_t k = 0; k < dim; ++k) l(k, b) = col[k];
	}
	return l;
}

Vector JordanAlgebra::sharp(const Vector& x) const {
	Vector s(dim);
	for (std::size_t k = 0; k < dim; ++k) s[k] = adjoint[k].eval(x);
	return s;
}

const JordanAlgebra& jordan_h3o() {
	static const JordanAlgebra j = build_jordan();
	return j;
}

std::vector<Matrix> independent_subset(const std::vector<Matrix>& ms, std::size_t limit) {
	SparseEliminator<std::size_t> elim;
	std::vector<Matrix> out;
	for (std::size_t t = 0; t < ms.size() && out.size() < limit; ++t) {
		SparseRow<std::size_t> row;
		const auto& e = ms[t].entries();
		for (std::size_t k = 0; k < e.size(); ++k)
			if (sgn(e[k]) != 0) row.emplace(k, e[k]);
		if (elim.insert(std::move(row), t).independent) out.push_back(ms[t]);
	}
	return out;
}

std::vector<Matrix> e6_basis() {
	const auto& j = jordan_h3o();
	std::vector<Matrix> ls;
	for (std::size_t i = 3; i < 27; ++i) {
		Vector a(27);
		a[i] = 1;
		ls.push_back(j.left_mult(a));
	}
	for (std::size_t i = 0; i < 2; ++i) {
		Vector a(27);
		a[i] = 1;
		a[i + 1] = -1;
		ls.push_back(j.left_mult(a));
	}
	std::vector<Matrix> all = ls;
	for (std::size_t a = 0; a < ls.size(); ++a)
		for (std::size_t b = a + 1; b < ls.size(); ++b) all.push_back(commutator(ls[a], ls[b]));
	return independent_subset(all, 78);
}

}  // namespace orbdual
