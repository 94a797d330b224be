#include <gtest/gtest.h>

#include <algorithm>

#include "orbdual/algebras.hpp"
#include "orbdual/cones.hpp"

using namespace orbdual;

namespace {

std::vector<Face> all_faces(std::size_t r) {
	std::vector<Face> out;
	for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
		Face f;
		for (std::size_t i = 0; i < r; ++i)
			if (mask >> i & 1) f.push_back(i);
		out.push_back(f);
	}
	return out;
}

ConeSystem random_system(Rng& rng) {
	for (;;) {
		ConeSystem s;
		s.r = static_cast<std::size_t>(rng.uniform(1, 4));
		const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(s.r)));
		for (std::size_t i = 0; i < k; ++i) s.roots.push_back(random_vector(s.r, rng, 2));
		try {
			validate_system(s);
			return s;
		} catch (const InvalidArgument&) {
		}
	}
}

// symplectic form with the antidiagonal block J
Matrix antidiagonal_form(std::size_t n) {
	Matrix w(2 * n, 2 * n);
	for (std::size_t k = 0; k < n; ++k) {
		w(k, 2 * n - 1 - k) = 1;
		w(n + k, n - 1 - k) = -1;
	}
	return w;
}

Scalar det(const Matrix& m) {
	const auto n = m.rows();
	std::vector<std::size_t> perm(n);
	for (std::size_t i = 0; i < n; ++i) perm[i] = i;
	Scalar total = 0;
	do {
		Scalar term = 1;
		for (std::size_t i = 0; i < n; ++i) {
			term *= m(i, perm[i]);
			for (std::size_t j = i + 1; j < n; ++j)
				if (perm[i] > perm[j]) term = -term;
		}
		total += term;
	} while (std::next_permutation(perm.begin(), perm.end()));
	return total;
}

// minor with 1-based rows and columns
Scalar delta(const Matrix& x, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
	Matrix m(rows.size(), cols.size());
	for (std::size_t i = 0; i < rows.size(); ++i)
		for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = x(rows[i] - 1, cols[j] - 1);
	return det(m);
}

Scalar reference_semiinvariant(int i, std::size_t n, const Matrix& x) {
	const Matrix w = x.transpose() * antidiagonal_form(n) * x;
	auto om = [&](std::size_t a, std::size_t b) { return w(a - 1, b - 1); };
	switch (i) {
		case 1: return delta(x, {1}, {1});
		case 2: return delta(x, {1, 2}, {1, 2});
		case 3: return delta(x, {1, 2, 3}, {1, 2, 3});
		case 4: return om(1, 2);
		case 5: {
			Scalar s = 0;
			for (std::size_t k = 2; k <= n; ++k) s += delta(x, {1, k, 2 * n - k + 1}, {1, 2, 3});
			return s;
		}
		default:
			// cross product form
			return om(3, 1) * delta(x, {1, 2}, {1, 2}) - om(1, 2) * delta(x, {1, 2}, {3, 1});
	}
}

Scalar power(const Scalar& s, const Scalar& e) {
	const long k = e.get_num().get_si();
	Scalar out = 1;
	for (long j = 0; j < std::abs(k); ++j) out *= s;
	return k < 0 ? Scalar(1 / out) : out;
}

}  // namespace

TEST(Cones, SolveSystemSmallCases) {
	auto c = [](std::initializer_list<int> a, int b, bool strict) {
		LinearConstraint out{Vector(), Scalar(b), strict};
		for (int x : a) out.a.emplace_back(x);
		return out;
	};
	EXPECT_FALSE(solve_system(1, {c({1}, 1, true), c({-1}, -1, true)}));
	const auto eq = solve_system(1, {c({1}, 1, false), c({-1}, -1, false)});
	ASSERT_TRUE(eq);
	EXPECT_EQ((*eq)[0], 1);
	const auto open = solve_system(1, {c({1}, 1, true), c({-1}, 0, true)});
	ASSERT_TRUE(open);
	EXPECT_GT((*open)[0], 0);
	EXPECT_LT((*open)[0], 1);
	EXPECT_FALSE(solve_system(2, {c({1, 1}, 0, true), c({-1, 0}, 0, false), c({0, -1}, 0, false)}));
	EXPECT_TRUE(solve_system(0, {}));
	EXPECT_THROW(solve_system(2, {c({1}, 0, false)}), InvalidArgument);
}

// exact elimination against a rational grid search on random small systems
TEST(Cones, EliminationAgreesWithGridSearch) {
	Rng rng(61);
	std::size_t feasible = 0, infeasible = 0;
	for (int t = 0; t < 200; ++t) {
		const auto s = random_system(rng);
		for (const auto& f : all_faces(s.r)) {
			const auto w = valuation_witness(s, f);
			const bool grid = grid_meets_valuation(s, f, s.r <= 3 ? 60 : 24);
			EXPECT_EQ(w.has_value(), grid) << system_to_json(s).dump() << " " << face_name(f);
			if (!w) {
				++infeasible;
				continue;
			}
			++feasible;
			ASSERT_EQ(w->size(), f.size());
			for (const auto& c : *w) EXPECT_GT(c, 0);
			for (const auto& root : s.roots) {
				Scalar v = 0;
				for (std::size_t i = 0; i < f.size(); ++i) v += root[f[i]] * (*w)[i];
				EXPECT_LE(v, 0);
			}
		}
	}
	EXPECT_GT(feasible, 0u);
	EXPECT_GT(infeasible, 0u);
}

TEST(Cones, SystemValidation) {
	ConeSystem s;
	s.r = 2;
	s.roots = {Vector{Scalar(1), Scalar(0)}, Vector{Scalar(2), Scalar(0)}};
	EXPECT_THROW(validate_system(s), InvalidArgument);
	s.r = 0;
	s.roots.clear();
	EXPECT_THROW(validate_system(s), InvalidArgument);
	s.r = 11;
	EXPECT_THROW(validate_system(s), InvalidArgument);
	const auto b = bundled_sp2n_gl3();
	const auto back = system_from_json(system_to_json(b));
	EXPECT_EQ(back.r, b.r);
	EXPECT_EQ(back.roots, b.roots);
	EXPECT_THROW(system_from_json(parse_json_text("{\"r\":2,\"roots\":[[1]]}")), InvalidArgument);
}

TEST(Cones, SingleGeneratorWithoutRoots) {
	ConeSystem s;
	s.r = 1;
	const auto d = abstract_diagram(s);
	ASSERT_EQ(d.faces.size(), 2u);
	EXPECT_EQ(d.faces[0], (Face{0}));
	EXPECT_EQ(d.faces[1], Face{});
	EXPECT_EQ(d.covers, (std::vector<Edge>{{0, 1}}));
	EXPECT_EQ(export_dot(d), export_dot(abstract_diagram(s)));
}

TEST(Cones, BundledSystemFaces) {
	const auto s = bundled_sp2n_gl3();
	EXPECT_FALSE(face_meets_valuation(s, {0, 1}));
	EXPECT_TRUE(face_meets_valuation(s, {2, 4, 5}));
	EXPECT_TRUE(face_meets_valuation(s, {}));
	const auto d = abstract_diagram(s);
	std::vector<std::string> names;
	for (const auto& f : d.faces) names.push_back(face_name(f));
	EXPECT_EQ(names, (std::vector<std::string>{"(123456)", "(23456)", "(3456)", "(356)", "(456)", "{0}"}));
	// the admitted faces are the only ones meeting the valuation cone on a grid as well
	for (const auto& f : all_faces(6))
		EXPECT_EQ(std::find(d.faces.begin(), d.faces.end(), f) != d.faces.end(), grid_meets_valuation(s, f, 24)) << face_name(f);
}

TEST(Cones, BundledDiagramIsTheSymplecticOrbitDiagram) {
	const auto d = abstract_diagram(bundled_sp2n_gl3());
	for (int n : {3, 4}) {
		const auto p = builtin_poset(parse_case("A10 n=" + std::to_string(n) + " m=3"));
		std::vector<std::size_t> f(d.faces.size());
		for (const auto& [face, label] : bundled_face_orbits()) {
			const auto it = std::find(d.faces.begin(), d.faces.end(), face);
			ASSERT_NE(it, d.faces.end());
			f[static_cast<std::size_t>(it - d.faces.begin())] = p.index_of(label);
		}
		EXPECT_TRUE(is_isomorphism(d, p, f));
		// the two middle faces are incomparable, so exchanging them is a symmetry
		auto g = f;
		std::swap(g[3], g[4]);
		EXPECT_TRUE(is_isomorphism(d, p, g));
		std::swap(f[2], f[3]);
		EXPECT_FALSE(is_isomorphism(d, p, f));
	}
}

// the spherical roots, written in the weights of the basic semi-invariants, are roots of the group
TEST(Cones, SphericalRootsAreRoots) {
	const std::size_t n = 3;
	std::vector<Vector> weights;
	for (int i = 1; i <= 6; ++i) weights.push_back(semiinvariant_weight(i, n));
	auto e = [&](std::initializer_list<std::pair<std::size_t, int>> parts) {
		Vector v(n + 3);
		for (auto [k, c] : parts) v[k] = c;
		return v;
	};
	const std::vector<Vector> expected{e({{0, 1}, {1, -1}}), e({{1, 1}, {2, -1}}), e({{1, 1}, {2, 1}}),
	                                   e({{3, 1}, {4, -1}}), e({{4, 1}, {5, -1}})};
	const auto s = bundled_sp2n_gl3();
	ASSERT_EQ(s.roots.size(), expected.size());
	for (std::size_t k = 0; k < s.roots.size(); ++k) {
		Vector v(n + 3);
		for (std::size_t i = 0; i < 6; ++i)
			for (std::size_t j = 0; j < n + 3; ++j) v[j] += s.roots[k][i] * weights[i][j];
		EXPECT_EQ(v, expected[k]) << k;
	}
}

TEST(Cones, SemiinvariantsMatchTheirDefinitions) {
	Rng rng(62);
	for (std::size_t n : {3u, 4u}) {
		EXPECT_EQ(symplectic_form(n), antidiagonal_form(n));
		for (int t = 0; t < 5; ++t) {
			const Matrix x(2 * n, 3, random_vector(6 * n, rng, 6));
			for (int i = 1; i <= 6; ++i)
				EXPECT_EQ(semiinvariant_eval(i, static_cast<int>(n), x), reference_semiinvariant(i, n, x)) << i;
		}
	}
}

// group-level check: f(g^T x h) = lambda(g, h) f(x) for torus elements and unipotent upper triangular pairs
TEST(Cones, SemiinvariantsUnderTheBorelGroup) {
	Rng rng(63);
	for (std::size_t n : {3u, 4u}) {
		std::vector<Matrix> sp_nil, gl_nil;
		for (const auto& b : sp_borel(n)) {
			bool diagonal = true;
			for (std::size_t k = 0; k < 2 * n; ++k) diagonal = diagonal && b(k, k) == 0;
			if (diagonal) sp_nil.push_back(b);
		}
		for (const auto& b : gl_borel(3))
			if (b(0, 0) == 0 && b(1, 1) == 0 && b(2, 2) == 0) gl_nil.push_back(b);
		ASSERT_EQ(sp_nil.size(), n * n);
		ASSERT_EQ(gl_nil.size(), 3u);
		for (int trial = 0; trial < 4; ++trial) {
			const Matrix x(2 * n, 3, random_vector(6 * n, rng, 6));
			std::vector<Scalar> s(n), u(3);
			Matrix t(2 * n, 2 * n), h(3, 3);
			for (std::size_t k = 0; k < n; ++k) {
				s[k] = Scalar(rng.uniform(1, 5), rng.uniform(1, 5));
				s[k].canonicalize();
				t(k, k) = s[k];
				t(2 * n - 1 - k, 2 * n - 1 - k) = 1 / s[k];
			}
			ASSERT_EQ(Matrix(t.transpose() * antidiagonal_form(n) * t), antidiagonal_form(n));
			for (std::size_t k = 0; k < 3; ++k) {
				u[k] = Scalar(rng.uniform(1, 5), rng.uniform(1, 5));
				u[k].canonicalize();
				h(k, k) = u[k];
			}
			Matrix xi(2 * n, 2 * n), eta(3, 3);
			for (const auto& b : sp_nil) xi += b * Scalar(rng.uniform(-3, 3));
			for (const auto& b : gl_nil) eta += b * Scalar(rng.uniform(-3, 3));
			const auto g = exp_nilpotent(xi, 1), k = exp_nilpotent(eta, 1);
			ASSERT_EQ(Matrix(g.transpose() * antidiagonal_form(n) * g), antidiagonal_form(n));
			for (int i = 1; i <= 6; ++i) {
				const auto w = semiinvariant_weight(i, static_cast<int>(n));
				Scalar chi = 1;
				for (std::size_t a = 0; a < n; ++a) chi *= power(s[a], w[a]);
				for (std::size_t a = 0; a < 3; ++a) chi *= power(u[a], w[n + a]);
				const auto f = reference_semiinvariant(i, n, x);
				EXPECT_EQ(reference_semiinvariant(i, n, Matrix(t.transpose() * x * h)), chi * f) << i;
				EXPECT_EQ(reference_semiinvariant(i, n, Matrix(g.transpose() * x * k)), f) << i;
			}
		}
	}
}

TEST(Cones, InfinitesimalSemiinvariance) {
	Rng rng(64);
	for (int n : {3, 4, 5})
		for (int i = 1; i <= 6; ++i) {
			EXPECT_TRUE(semiinvariance_check(i, n, semiinvariant_weight(i, n), 3, rng)) << i;
			auto wrong = semiinvariant_weight(i, n);
			wrong[0] += 1;
			EXPECT_FALSE(semiinvariance_check(i, n, wrong, 3, rng)) << i;
		}
	EXPECT_THROW(semiinvariant_eval(5, 2, Matrix(4, 3)), InvalidArgument);
	EXPECT_THROW(semiinvariant_weight(7, 3), InvalidArgument);
}
