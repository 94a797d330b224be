#include <gtest/gtest.h>

#include "orbdual/algebras.hpp"
#include "orbdual/conormal.hpp"

using namespace orbdual;

namespace {

OrbitLabel dual_of(const char* c, const OrbitLabel& l, std::uint64_t seed = 7) {
	const auto id = parse_case(c);
	Rng rng(seed);
	return empirical_dual(shared_case(id), l, EmpiricalOptions{}, rng);
}

Vector concat(const Vector& a, const Vector& b) {
	Vector v(a.size() + b.size());
	for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i];
	for (std::size_t i = 0; i < b.size(); ++i) v[a.size() + i] = b[i];
	return v;
}

Vector slice(const Vector& v, std::size_t from, std::size_t len) {
	Vector out(len);
	for (std::size_t i = 0; i < len; ++i) out[i] = v[from + i];
	return out;
}

// direct product of two cases acting block-diagonally on the direct sum
CaseSpec product_spec(const CaseSpec& a, const CaseSpec& b) {
	CaseSpec s;
	s.dim = a.dim + b.dim;
	s.summands = {a.dim, b.dim};
	for (const auto& g : a.generators) s.generators.push_back(direct_sum(g, Matrix(b.dim, b.dim)));
	for (const auto& g : b.generators) s.generators.push_back(direct_sum(Matrix(a.dim, a.dim), g));
	s.pairing = Matrix::identity(s.dim);
	return s;
}

// GL_2n with independent scalings on C^2n + C^2n: the orbit of (x, y) is fixed by which
// parts vanish and the rank of [x y]
enum class PairOrbit { Zero, First, Second, Proportional, Independent };

PairOrbit pair_orbit(const Vector& v, std::size_t n2) {
	const auto x = slice(v, 0, n2), y = slice(v, n2, n2);
	if (is_zero(x) && is_zero(y)) return PairOrbit::Zero;
	if (is_zero(y)) return PairOrbit::First;
	if (is_zero(x)) return PairOrbit::Second;
	return Subspace::span(n2, {x, y}).dim() == 1 ? PairOrbit::Proportional : PairOrbit::Independent;
}

PairOrbit pair_dual(PairOrbit o) {
	switch (o) {
		case PairOrbit::Zero: return PairOrbit::Independent;
		case PairOrbit::First: return PairOrbit::Second;
		case PairOrbit::Second: return PairOrbit::First;
		case PairOrbit::Proportional: return PairOrbit::Proportional;
		case PairOrbit::Independent: return PairOrbit::Zero;
	}
	return PairOrbit::Zero;
}

std::vector<Matrix> gl_pair_generators(std::size_t n2) {
	std::vector<Matrix> gens;
	for (const auto& e : gl_basis(n2)) gens.push_back(direct_sum(e, e));
	gens.push_back(direct_sum(Matrix::identity(n2), Matrix(n2, n2)));
	gens.push_back(direct_sum(Matrix(n2, n2), Matrix::identity(n2)));
	return gens;
}

Subspace span_of(const std::vector<Matrix>& ms) {
	std::vector<Vector> vs;
	for (const auto& m : ms) vs.push_back(m.entries());
	return Subspace::span(ms[0].entries().size(), vs);
}

}  // namespace

TEST(Conormal, TangentAndConormalAreComplementary) {
	Rng rng(51);
	for (const auto& id : verify_grid()) {
		const auto& s = shared_case(id);
		for (const auto& l : enumerate_labels(id)) {
			const auto x = apply_word(s, random_group_word(s, rng, 4), representative(s, l));
			const auto t = tangent(s, x);
			const auto n = conormal(s, x);
			EXPECT_EQ(t.dim() + n.dim(), s.dim) << case_name(id);
			for (const auto& y : n.vectors())
				for (const auto& v : t.vectors()) EXPECT_EQ(dot(v, s.pairing * y), 0);
			EXPECT_EQ(point_orbit_dim(s, x), t.dim());
		}
	}
}

TEST(Conormal, SymplecticExamples) {
	EXPECT_EQ(dual_of("A10 n=2 m=3", RankPairLabel{1, 0}), (OrbitLabel{RankPairLabel{2, 2}}));
	EXPECT_EQ(dual_of("A10 n=2 m=3", RankPairLabel{2, 0}), (OrbitLabel{RankPairLabel{2, 0}}));
	EXPECT_EQ(dual_of("A10 n=2 m=3", RankPairLabel{0, 0}), (OrbitLabel{RankPairLabel{3, 2}}));
	EXPECT_EQ(dual_of("A10 n=3 m=3", RankPairLabel{0, 0}), (OrbitLabel{RankPairLabel{3, 2}}));
}

TEST(Conormal, AbelianExamples) {
	for (int i = 0; i <= 3; ++i) EXPECT_EQ(dual_of("A2 n=3", IndexLabel{i}), OrbitLabel{IndexLabel{3 - i}});
	for (int i = 0; i <= 2; ++i) EXPECT_EQ(dual_of("A1 q=2 p=3", IndexLabel{i}), OrbitLabel{IndexLabel{2 - i}});
	for (int i = 0; i <= 3; ++i) EXPECT_EQ(dual_of("A4", IndexLabel{i}), OrbitLabel{IndexLabel{3 - i}});
}

TEST(Conormal, ThreeOrbitCases) {
	for (const char* c : {"A5 n=5", "A6", "A7", "A8"}) {
		EXPECT_EQ(dual_of(c, IndexLabel{0}), (OrbitLabel{IndexLabel{2}})) << c;
		EXPECT_EQ(dual_of(c, IndexLabel{1}), (OrbitLabel{IndexLabel{1}})) << c;
	}
	EXPECT_EQ(dual_of("A9", IndexLabel{0}), (OrbitLabel{IndexLabel{3}}));
	EXPECT_EQ(dual_of("A9", IndexLabel{1}), (OrbitLabel{IndexLabel{1}}));
	EXPECT_EQ(dual_of("A9", IndexLabel{2}), (OrbitLabel{IndexLabel{2}}));
}

TEST(Conormal, ReducibleExamples) {
	const ZLabel sim{ZKind::Sim, 0, {1, -1}, {1, -1}}, circ{ZKind::Circ, 0, {1, -1}, {1, -1}};
	EXPECT_EQ(dual_of("B5 n=2", sim), OrbitLabel{sim});
	EXPECT_EQ(dual_of("B5 n=2", circ), OrbitLabel{circ});
	EXPECT_EQ(dual_of("B5 n=2", Pure1Label{{1, -1}}), (OrbitLabel{Pure2Label{{1, -1}}}));
	const ZLabel z{ZKind::Unit, 0, {1, 0}, {1, -1}};
	EXPECT_EQ(dual_of("B8 n=2 m=2", z), OrbitLabel{z});
}

TEST(Conormal, EmpiricalDualIsDeterministic) {
	const auto& s = shared_case(parse_case("B8 n=2 m=2"));
	const auto p = builtin_poset(parse_case("B8 n=2 m=2"));
	Rng a(9), b(9);
	const auto x = empirical_dual(s, p, Pure1Label{{1, 0}}, EmpiricalOptions{}, a);
	const auto y = empirical_dual(s, p, Pure1Label{{1, 0}}, EmpiricalOptions{}, b);
	EXPECT_EQ(x.label, y.label);
	EXPECT_EQ(x.observed, y.observed);
	EXPECT_EQ(x.observed.size(), EmpiricalOptions{}.trials);
}

// the dual of a product orbit is the product of the duals
TEST(Conormal, ProductDuality) {
	const auto ia = parse_case("A1 q=2 p=2"), ib = parse_case("A2 n=2");
	const auto &a = shared_case(ia), &b = shared_case(ib);
	const auto s = product_spec(a, b);
	Rng rng(52);
	for (const auto& la : enumerate_labels(ia))
		for (const auto& lb : enumerate_labels(ib)) {
			const auto x = concat(apply_word(a, random_group_word(a, rng, 4), representative(a, la)),
			                      apply_word(b, random_group_word(b, rng, 4), representative(b, lb)));
			const auto n = conormal(s, x);
			int best_a = -1, best_b = -1;
			for (int t = 0; t < 4; ++t) {
				const auto y = n.dim() ? random_element(n, rng, 50) : Vector(s.dim);
				best_a = std::max(best_a, std::get<IndexLabel>(classify_dual(a, slice(y, 0, a.dim))).i);
				best_b = std::max(best_b, std::get<IndexLabel>(classify_dual(b, slice(y, a.dim, b.dim))).i);
			}
			EXPECT_EQ(OrbitLabel{IndexLabel{best_a}}, recorded_dual(ia, la));
			EXPECT_EQ(OrbitLabel{IndexLabel{best_b}}, recorded_dual(ib, lb));
			EXPECT_EQ(point_orbit_dim(s, x), point_orbit_dim(a, slice(x, 0, a.dim)) + point_orbit_dim(b, slice(x, a.dim, b.dim)));
		}
}

// a subgroup orbit that is open in the orbit of the larger group has the same conormal space there
TEST(Conormal, Spin9InsideSpin10) {
	const auto i9 = parse_case("A9"), i10 = parse_case("A8");
	const auto &g = shared_case(i9), &h = shared_case(i10);
	const auto big = span_of(h.generators);
	for (const auto& x : g.generators) ASSERT_TRUE(contains(big, x.entries()));
	const std::vector<std::pair<int, int>> image{{0, 0}, {1, 1}, {2, 2}, {3, 2}};
	Rng rng(53);
	int checked = 0;
	for (auto [i, j] : image) {
		const auto x = apply_word(g, random_group_word(g, rng, 5), representative(g, IndexLabel{i}));
		EXPECT_EQ(classify(h, x), OrbitLabel{IndexLabel{j}});
		const bool open = point_orbit_dim(g, x) == point_orbit_dim(h, x);
		EXPECT_EQ(open, i != 2) << i;
		if (!open) continue;
		const auto d = std::get<IndexLabel>(recorded_dual(i9, IndexLabel{i})).i;
		const auto dual_open = image[static_cast<std::size_t>(d)].first != 2;
		if (!dual_open) continue;
		const auto n = conormal(g, x);
		const auto y = n.dim() ? random_element(n, rng, 50) : Vector(g.dim);
		EXPECT_EQ(classify_dual(h, y), recorded_dual(i10, IndexLabel{j})) << i;
		++checked;
	}
	EXPECT_EQ(checked, 3);
}

TEST(Conormal, SymplecticPairsInsideGeneralLinearPairs) {
	for (int n : {2, 3}) {
		const auto id = parse_case("B5 n=" + std::to_string(n));
		const auto& g = shared_case(id);
		const auto n2 = static_cast<std::size_t>(2 * n);
		const auto hgens = gl_pair_generators(n2);
		const auto big = span_of(hgens);
		for (const auto& x : g.generators) ASSERT_TRUE(contains(big, x.entries()));
		Rng rng(54);
		int checked = 0;
		for (const auto& l : enumerate_labels(id)) {
			const auto x = apply_word(g, random_group_word(g, rng, 5), representative(g, l));
			if (point_orbit_dim(g, x) != tangent(hgens, x).dim()) continue;
			const auto dx = apply_word(g, random_group_word(g, rng, 5), representative(g, recorded_dual(id, l)));
			if (point_orbit_dim(g, dx) != tangent(hgens, dx).dim()) continue;
			const auto nc = conormal(g, x);
			const auto y = nc.dim() ? random_element(nc, rng, 50) : Vector(g.dim);
			// the general linear group acts on covectors by -xi^T, with the same orbit description
			EXPECT_EQ(pair_orbit(y, n2), pair_dual(pair_orbit(x, n2))) << label_name(l);
			EXPECT_EQ(pair_orbit(dx, n2), pair_dual(pair_orbit(x, n2))) << label_name(l);
			++checked;
		}
		// everything except Zo, which is not open in the rank-two orbit
		EXPECT_EQ(checked, 5);
	}
}
