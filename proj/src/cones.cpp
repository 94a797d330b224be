#include "orbdual/cones.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "orbdual/algebras.hpp"

namespace orbdual {

void validate_system(const ConeSystem& s) {
	if (s.r == 0) throw InvalidArgument("cone system needs r >= 1");
	if (s.r > 10) throw InvalidArgument("cone system supports r <= 10");
	for (const auto& v : s.roots)
		if (v.size() != s.r) throw InvalidArgument("root length differs from r");
	if (!s.roots.empty() && rank(Matrix::from_rows(s.roots, s.r)) != s.roots.size())
		throw InvalidArgument("roots are linearly dependent");
	if (!s.names.empty() && s.names.size() != s.r) throw InvalidArgument("need one name per generator");
}

ConeSystem system_from_json(const Json& j) {
	if (!j.is_object() || !j.contains("r") || !j["r"].is_number_unsigned() || !j.contains("roots") ||
	    !j["roots"].is_array())
		throw InvalidArgument("cone system needs \"r\" and \"roots\"");
	ConeSystem s;
	s.r = j["r"].get<std::size_t>();
	for (const auto& v : j["roots"]) s.roots.push_back(vector_from_json(v));
	if (j.contains("names")) {
		if (!j["names"].is_array()) throw InvalidArgument("names must be an array of strings");
		for (const auto& n : j["names"]) {
			if (!n.is_string()) throw InvalidArgument("names must be an array of strings");
			s.names.push_back(n.get<std::string>());
		}
	}
	validate_system(s);
	return s;
}

Json system_to_json(const ConeSystem& s) {
	Json roots = Json::array();
	for (const auto& v : s.roots) roots.push_back(vector_to_json(v));
	Json j{{"r", s.r}, {"roots", roots}};
	if (!s.names.empty()) j["names"] = s.names;
	return j;
}

namespace {

// scale so that the first nonzero coefficient is +-1
LinearConstraint normalized(LinearConstraint c) {
	for (const auto& x : c.a)
		if (sgn(x) != 0) {
			const Scalar k = abs(x);
			for (auto& y : c.a) y /= k;
			c.b /= k;
			return c;
		}
	return c;
}

struct ConstraintLess {
	bool operator()(const LinearConstraint& x, const LinearConstraint& y) const {
		if (x.strict != y.strict) return x.strict < y.strict;
		for (std::size_t i = 0; i < x.a.size(); ++i)
			if (x.a[i] != y.a[i]) return x.a[i] < y.a[i];
		return x.b < y.b;
	}
};

bool satisfied(const LinearConstraint& c, const Vector& x) {
	const Scalar lhs = dot(c.a, x);
	return c.strict ? lhs < c.b : lhs <= c.b;
}

}  // namespace

std::optional<Vector> solve_system(std::size_t vars, const std::vector<LinearConstraint>& cs) {
	for (const auto& c : cs)
		if (c.a.size() != vars) throw InvalidArgument("constraint width differs from the variable count");
	// levels[k] involves variables 0..k-1 only
	std::vector<std::vector<LinearConstraint>> levels(vars + 1);
	levels[vars] = cs;
	for (std::size_t k = vars; k-- > 0;) {
		std::set<LinearConstraint, ConstraintLess> next;
		std::vector<const LinearConstraint*> pos, neg;
		for (const auto& c : levels[k + 1]) {
			const int s = sgn(c.a[k]);
			if (s > 0) pos.push_back(&c);
			else if (s < 0) neg.push_back(&c);
			else next.insert(normalized(c));
		}
		for (const auto* p : pos)
			for (const auto* q : neg) {
				const Scalar wp = -q->a[k], wq = p->a[k];
				LinearConstraint c{Vector(vars), wp * p->b + wq * q->b, p->strict || q->strict};
				for (std::size_t i = 0; i < vars; ++i) c.a[i] = wp * p->a[i] + wq * q->a[i];
				c.a[k] = 0;
				next.insert(normalized(std::move(c)));
			}
		levels[k].assign(next.begin(), next.end());
	}
	for (const auto& c : levels[0])
		if (!satisfied(c, Vector(vars))) return std::nullopt;
	Vector x(vars);
	for (std::size_t k = 0; k < vars; ++k) {
		std::optional<Scalar> lo, hi;
		for (const auto& c : levels[k + 1]) {
			const Scalar a = c.a[k];
			if (sgn(a) == 0) continue;
			Scalar rest = c.b;
			for (std::size_t i = 0; i < k; ++i) rest -= c.a[i] * x[i];
			const Scalar bound = rest / a;
			if (sgn(a) > 0) {
				if (!hi || bound < *hi) hi = bound;
			} else if (!lo || bound > *lo) {
				lo = bound;
			}
		}
		// the eliminated system guarantees lo < hi, or lo == hi with both bounds closed
		if (lo && hi) x[k] = (*lo + *hi) / 2;
		else if (lo) x[k] = *lo + 1;
		else if (hi) x[k] = *hi - 1;
	}
	for (const auto& c : cs)
		if (!satisfied(c, x)) throw Inconsistent("elimination produced an infeasible witness");
	return x;
}

std::optional<Vector> valuation_witness(const ConeSystem& s, const Face& face) {
	const auto k = face.size();
	std::vector<LinearConstraint> cs;
	for (std::size_t i = 0; i < k; ++i) {
		if (face[i] >= s.r) throw InvalidArgument("face index out of range");
		LinearConstraint c{Vector(k), 0, true};
		c.a[i] = -1;
		cs.push_back(std::move(c));
	}
	for (const auto& root : s.roots) {
		LinearConstraint c{Vector(k), 0, false};
		for (std::size_t i = 0; i < k; ++i) c.a[i] = root[face[i]];
		cs.push_back(std::move(c));
	}
	return solve_system(k, cs);
}

bool face_meets_valuation(const ConeSystem& s, const Face& face) { return valuation_witness(s, face).has_value(); }

bool grid_meets_valuation(const ConeSystem& s, const Face& face, int steps) {
	const auto k = face.size();
	if (k == 0) return true;
	std::vector<int> parts(k, 1);
	std::function<bool(std::size_t, int)> walk = [&](std::size_t i, int left) {
		if (i + 1 == k) {
			parts[i] = left;
			for (const auto& root : s.roots) {
				Scalar v = 0;
				for (std::size_t j = 0; j < k; ++j) v += root[face[j]] * parts[j];
				if (sgn(v) > 0) return false;
			}
			return true;
		}
		for (int p = 1; p <= left - static_cast<int>(k - i - 1); ++p) {
			parts[i] = p;
			if (walk(i + 1, left - p)) return true;
		}
		return false;
	};
	return steps >= static_cast<int>(k) && walk(0, steps);
}

std::string face_name(const Face& f) {
	if (f.empty()) return "{0}";
	const bool wide = !f.empty() && f.back() >= 9;
	std::string out = "(";
	for (std::size_t i = 0; i < f.size(); ++i) {
		if (wide && i > 0) out += ",";
		out += std::to_string(f[i] + 1);
	}
	return out + ")";
}

FaceDiagram abstract_diagram(const ConeSystem& s) {
	validate_system(s);
	FaceDiagram d;
	for (std::uint32_t mask = 0; mask < (1u << s.r); ++mask) {
		Face f;
		for (std::size_t i = 0; i < s.r; ++i)
			if (mask & (1u << i)) f.push_back(i);
		if (face_meets_valuation(s, f)) d.faces.push_back(std::move(f));
	}
	std::stable_sort(d.faces.begin(), d.faces.end(), [](const Face& a, const Face& b) {
		if (a.size() != b.size()) return a.size() > b.size();
		return a < b;
	});
	const auto n = d.faces.size();
	std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			le[a][b] = std::includes(d.faces[a].begin(), d.faces[a].end(), d.faces[b].begin(), d.faces[b].end());
	d.covers = transitive_reduction(le);
	return d;
}

std::string export_dot(const FaceDiagram& d) {
	std::ostringstream out;
	out << "digraph faces {\n  rankdir=LR;\n";
	for (std::size_t i = 0; i < d.faces.size(); ++i) out << "  f" << i << " [label=\"" << face_name(d.faces[i]) << "\"];\n";
	for (auto [a, b] : d.covers) out << "  f" << a << " -> f" << b << ";\n";
	out << "}\n";
	return out.str();
}

Json export_json(const FaceDiagram& d) {
	Json faces = Json::array();
	for (const auto& f : d.faces) {
		Json idx = Json::array();
		for (auto i : f) idx.push_back(i + 1);
		faces.push_back(Json{{"name", face_name(f)}, {"generators", idx}});
	}
	Json covers = Json::array();
	for (auto [a, b] : d.covers) covers.push_back(Json::array({a, b}));
	return Json{{"faces", faces}, {"covers", covers}};
}

ConeSystem bundled_sp2n_gl3() {
	auto v = [](std::initializer_list<int> xs) {
		Vector out;
		for (int x : xs) out.emplace_back(x);
		return out;
	};
	ConeSystem s;
	s.r = 6;
	s.roots = {v({1, 0, 0, 0, 1, -1}), v({-1, 1, -1, -1, 0, 1}), v({0, 0, 1, 0, -1, 0}), v({1, -1, 0, 0, -1, 1}),
	           v({0, 1, 0, 1, 0, -1})};
	s.names = {"w1+w'1", "w2+w'2", "w3+w'3", "w'2", "w1+w'3", "w2+w'1+w'3"};
	return s;
}

std::vector<std::pair<Face, RankPairLabel>> bundled_face_orbits() {
	return {{{0, 1, 2, 3, 4, 5}, {0, 0}}, {{1, 2, 3, 4, 5}, {1, 0}}, {{2, 3, 4, 5}, {2, 0}},
	        {{2, 4, 5}, {2, 2}},          {{3, 4, 5}, {3, 0}},       {{}, {3, 2}}};
}

bool is_isomorphism(const FaceDiagram& d, const OrbitPoset& p, const std::vector<std::size_t>& f) {
	const auto n = d.faces.size();
	if (f.size() != n || p.size() != n) return false;
	std::vector<bool> hit(n, false);
	for (auto v : f) {
		if (v >= n || hit[v]) return false;
		hit[v] = true;
	}
	const auto le = order_from_covers(n, d.covers);
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b)
			if (le[a][b] != p.leq(f[a], f[b])) return false;
	return true;
}

namespace {

Scalar minor(const Matrix& x, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
	Matrix m(rows.size(), cols.size());
	for (std::size_t i = 0; i < rows.size(); ++i)
		for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = x(rows[i] - 1, cols[j] - 1);
	if (rows.size() == 1) return m(0, 0);
	if (rows.size() == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
	return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
	       m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

void check_shape(int i, int n, const Matrix& x) {
	if (i < 1 || i > 6) throw InvalidArgument("semi-invariant index must be 1..6");
	if (n < 1 || ((i == 3 || i == 5 || i == 6) && n < 3)) throw InvalidArgument("semi-invariant needs n >= 3");
	if (x.rows() != 2 * static_cast<std::size_t>(n) || x.cols() != 3) throw InvalidArgument("expected a 2n x 3 matrix");
}

}  // namespace

Scalar semiinvariant_eval(int i, int n, const Matrix& x) {
	check_shape(i, n, x);
	const auto rows = 2 * static_cast<std::size_t>(n);
	auto omega = [&]() { return Matrix(x.transpose() * symplectic_form(static_cast<std::size_t>(n)) * x); };
	switch (i) {
		case 1:
			return x(0, 0);
		case 2:
			return minor(x, {1, 2}, {1, 2});
		case 3:
			return minor(x, {1, 2, 3}, {1, 2, 3});
		case 4:
			return omega()(0, 1);
		case 5: {
			Scalar s = 0;
			for (std::size_t k = 2; k <= static_cast<std::size_t>(n); ++k) s += minor(x, {1, k, rows - k + 1}, {1, 2, 3});
			return s;
		}
		default: {
			const auto w = omega();
			return w(0, 1) * minor(x, {1, 2}, {1, 3}) - w(0, 2) * minor(x, {1, 2}, {1, 2});
		}
	}
}

Vector semiinvariant_weight(int i, int n) {
	if (i < 1 || i > 6) throw InvalidArgument("semi-invariant index must be 1..6");
	const auto N = static_cast<std::size_t>(n);
	Vector w(N + 3);
	auto eps = [&](std::size_t k) -> Scalar& { return w[k - 1]; };
	auto eps2 = [&](std::size_t k) -> Scalar& { return w[N + k - 1]; };
	// omega_k and omega'_k are e_1 + ... + e_k
	auto omega = [&](std::size_t k) {
		for (std::size_t j = 1; j <= k; ++j) eps(j) += 1;
	};
	auto omega2 = [&](std::size_t k) {
		for (std::size_t j = 1; j <= k; ++j) eps2(j) += 1;
	};
	switch (i) {
		case 1: omega(1); omega2(1); break;
		case 2: omega(2); omega2(2); break;
		case 3: omega(3); omega2(3); break;
		case 4: omega2(2); break;
		case 5: omega(1); omega2(3); break;
		default: omega(2); omega2(1); omega2(3); break;
	}
	return w;
}

Matrix borel_action(const Matrix& xi, const Matrix& eta, const Matrix& x) {
	return Matrix(-(xi.transpose() * x) - x * eta);
}

Scalar directional_derivative(int i, int n, const Matrix& x, const Matrix& v) {
	auto g = [&](int t) { return semiinvariant_eval(i, n, Matrix(x + v * Scalar(t))); };
	return (g(-2) - 8 * g(-1) + 8 * g(1) - g(2)) / 12;
}

bool semiinvariance_check(int i, int n, const Vector& weight, std::size_t trials, Rng& rng) {
	const auto N = static_cast<std::size_t>(n);
	if (weight.size() != N + 3) throw InvalidArgument("weight needs n + 3 coordinates");
	const auto sp = sp_borel(N);
	const auto gl = gl_borel(3);
	for (std::size_t t = 0; t < trials; ++t) {
		const Matrix x(2 * N, 3, random_vector(6 * N, rng, 9));
		Matrix xi(2 * N, 2 * N), eta(3, 3);
		for (const auto& b : sp) xi += b * Scalar(rng.uniform(-9, 9));
		for (const auto& b : gl) eta += b * Scalar(rng.uniform(-9, 9));
		Scalar dl = 0;
		for (std::size_t k = 0; k < N; ++k) dl += weight[k] * xi(k, k);
		for (std::size_t k = 0; k < 3; ++k) dl += weight[N + k] * eta(k, k);
		const auto lhs = directional_derivative(i, n, x, borel_action(xi, eta, x));
		if (lhs != kWeightSign * dl * semiinvariant_eval(i, n, x)) return false;
	}
	return true;
}

}  // namespace orbdual
