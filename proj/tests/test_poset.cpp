#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "orbdual/conormal.hpp"
#include "orbdual/poset.hpp"

using namespace orbdual;

namespace {

bool is_b_case(Family f) { return f >= Family::B1; }

std::string read_text(const std::string& path) {
	std::ifstream in(path);
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

ComponentChains chains_of(const CaseId& id) {
	return ComponentChains{id.family, component_chain(id, 0), component_chain(id, 1)};
}

// the bare diagram with its vertices renumbered by perm (new index of old vertex v is perm[v])
BarePoset permuted(const BarePoset& b, const std::vector<std::size_t>& perm) {
	BarePoset out{b.size, {}};
	for (auto [x, y] : b.covers) out.covers.emplace_back(perm[x], perm[y]);
	return out;
}

}  // namespace

TEST(Poset, OrderFromCovers) {
	const auto le = order_from_covers(4, {{0, 1}, {1, 2}, {0, 3}});
	EXPECT_TRUE(le[0][2]);
	EXPECT_TRUE(le[3][3]);
	EXPECT_FALSE(le[3][2]);
	EXPECT_FALSE(le[2][0]);
	EXPECT_EQ(transitive_reduction(order_from_covers(3, {{0, 1}, {1, 2}, {0, 2}})), (std::vector<Edge>{{0, 1}, {1, 2}}));
	EXPECT_THROW(order_from_covers(2, {{0, 1}, {1, 0}}), InvalidArgument);
	EXPECT_THROW(order_from_covers(2, {{0, 5}}), InvalidArgument);
}

TEST(Poset, BuiltinDiagramsAreConsistent) {
	for (const auto& id : verify_grid()) {
		SCOPED_TRACE(case_name(id));
		const auto p = builtin_poset(id);
		EXPECT_EQ(p.size(), enumerate_labels(id).size());
		EXPECT_EQ(transitive_reduction(p.order), p.covers);
		for (std::size_t i = 0; i < p.size(); ++i) {
			// duality is an involution
			EXPECT_EQ(p.duality[p.duality[i]], i);
			EXPECT_EQ(p.labels[p.duality[i]], recorded_dual(id, p.labels[i]));
			for (std::size_t j = 0; j < p.size(); ++j) EXPECT_EQ(p.leq(i, j), closure_leq(id, p.labels[i], p.labels[j]));
		}
		for (auto [a, b] : p.covers) EXPECT_LT(p.dims[a], p.dims[b]);
		// the origin is dual to the open orbit
		EXPECT_EQ(p.duality[0], p.size() - 1);
	}
}

TEST(Poset, RecordedDimensionsMatchTangentSpaces) {
	for (const auto& id : verify_grid()) {
		const auto& s = shared_case(id);
		for (const auto& l : enumerate_labels(id))
			EXPECT_EQ(recorded_dim(id, l), static_cast<long>(orbit_dim(s, l))) << case_name(id) << " " << label_name(l);
	}
}

TEST(Poset, AbelianDualityReversesTheChain) {
	for (const auto& id : verify_grid()) {
		if (id.family > Family::A4) continue;
		SCOPED_TRACE(case_name(id));
		const auto p = builtin_poset(id);
		const auto top = p.size() - 1;
		for (std::size_t i = 0; i < p.size(); ++i) {
			EXPECT_EQ(std::get<IndexLabel>(p.labels[i]).i, static_cast<int>(i));
			EXPECT_EQ(p.duality[i], top - i);
			for (std::size_t j = 0; j < p.size(); ++j) {
				EXPECT_EQ(p.leq(i, j), i <= j);
				EXPECT_EQ(p.leq(i, j), p.leq(p.duality[j], p.duality[i]));
			}
		}
	}
}

// outside the abelian cases duality need not reverse the order
TEST(Poset, ReducibleDualityIsNotOrderReversing) {
	const auto id = parse_case("B6 n=2");
	const auto p = builtin_poset(id);
	const auto a = p.index_of(Pure2Label{Component{1, -1}});
	const auto b = p.index_of(ZLabel{ZKind::Unit, 0, Component{1, 0}, Component{1, -1}});
	ASSERT_TRUE(p.leq(a, b));
	EXPECT_FALSE(p.leq(p.duality[b], p.duality[a]));
}

TEST(Poset, SymplecticExamples) {
	const auto p = builtin_poset(parse_case("A10 n=2 m=3"));
	std::vector<std::string> names;
	for (const auto& l : p.labels) names.push_back(label_name(l));
	EXPECT_EQ(names, (std::vector<std::string>{"O00", "O10", "O20", "O22", "O32"}));
	EXPECT_EQ(p.covers, (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
	EXPECT_EQ(p.duality, (std::vector<std::size_t>{4, 3, 2, 1, 0}));

	const auto h = builtin_poset(parse_case("A10 n=3 m=3"));
	const auto o22 = h.index_of(RankPairLabel{2, 2}), o30 = h.index_of(RankPairLabel{3, 0});
	EXPECT_FALSE(h.leq(o22, o30));
	EXPECT_FALSE(h.leq(o30, o22));
	EXPECT_EQ(h.size(), 6u);
	EXPECT_EQ(recorded_dual(parse_case("A10 n=3 m=3"), RankPairLabel{0, 0}), (OrbitLabel{RankPairLabel{3, 2}}));
	EXPECT_EQ(export_dot(p), read_text(std::string(ORBDUAL_TEST_DATA) + "/a10_n2_m3.dot"));
}

TEST(Poset, JsonRoundTrip) {
	for (const auto& id : verify_grid()) {
		const auto p = builtin_poset(id);
		const auto q = import_json(parse_json_text(export_json(p).dump()));
		EXPECT_EQ(q.labels, p.labels);
		EXPECT_EQ(q.dims, p.dims);
		EXPECT_EQ(q.duality, p.duality);
		EXPECT_EQ(q.covers, p.covers);
		EXPECT_EQ(export_dot(q), export_dot(p));
	}
}

TEST(Poset, ImportRejectsInconsistentDiagrams) {
	const auto base = export_json(builtin_poset(parse_case("A10 n=2 m=3")));
	auto expect_rejected = [&](const std::function<void(Json&)>& edit, const std::string& what) {
		Json j = base;
		edit(j);
		try {
			import_json(j);
			ADD_FAILURE() << "accepted: " << what;
		} catch (const InvalidArgument& e) {
			EXPECT_NE(std::string(e.what()).find(what), std::string::npos) << e.what();
		}
	};
	expect_rejected([](Json& j) { j["orbits"][1]["label"] = j["orbits"][0]["label"]; }, "duplicate");
	expect_rejected([](Json& j) { j["orbits"][1]["dual"] = "O20"; }, "involution");
	expect_rejected([](Json& j) { j["orbits"][1]["dual"] = "Q5"; }, "not in the poset");
	expect_rejected([](Json& j) { j["covers"].push_back(Json::array({0, 2})); }, "transitive reduction");
	expect_rejected([](Json& j) { j["orbits"][2]["dim"] = 6; }, "increase");
	expect_rejected([](Json& j) { j["covers"].push_back(Json::array({4, 0})); }, "cycle");
	expect_rejected([](Json& j) { j.erase("covers"); }, "covers");
	expect_rejected([](Json& j) { j["covers"].push_back(Json::array({-1, 2})); }, "vertex indices");
}

TEST(Poset, AssignmentReproducesTheBuiltinLabels) {
	Rng rng(41);
	for (const auto& id : verify_grid()) {
		if (!is_b_case(id.family)) continue;
		SCOPED_TRACE(case_name(id));
		const auto p = builtin_poset(id);
		std::vector<std::size_t> perm(p.size());
		for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
		for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
		const auto a = assign_orbits(permuted(p.bare(), perm), chains_of(id));
		std::vector<OrbitLabel> got(p.size());
		for (std::size_t v = 0; v < p.size(); ++v) got[v] = a.labels[perm[v]];
		if (!a.flexible) {
			EXPECT_EQ(got, p.labels);
			continue;
		}
		// a flexible diagram may come back mirrored: same label set, covers preserved
		auto sorted_names = [](const std::vector<OrbitLabel>& ls) {
			std::vector<std::string> v;
			for (const auto& l : ls) v.push_back(label_name(l));
			std::sort(v.begin(), v.end());
			return v;
		};
		EXPECT_EQ(sorted_names(got), sorted_names(p.labels));
		for (auto [x, y] : p.covers) {
			const auto gx = p.index_of(got[x]), gy = p.index_of(got[y]);
			EXPECT_NE(std::find(p.covers.begin(), p.covers.end(), Edge{gx, gy}), p.covers.end());
		}
	}
}

TEST(Poset, FlexibleDiagramAcceptsBothOrientations) {
	const auto id = parse_case("B5 n=2");
	const auto p = builtin_poset(id);
	auto chains = chains_of(id);
	const auto a = assign_orbits(p.bare(), chains);
	EXPECT_TRUE(a.flexible);
	std::swap(chains.first, chains.second);
	const auto b = assign_orbits(p.bare(), chains);
	EXPECT_TRUE(b.flexible);
	std::vector<std::string> na, nb;
	for (const auto& l : a.labels) na.push_back(label_name(l));
	for (const auto& l : b.labels) nb.push_back(label_name(l));
	std::sort(na.begin(), na.end());
	std::sort(nb.begin(), nb.end());
	EXPECT_EQ(na, nb);
}

// the B8 diagram for n = 2, m = 2 given only by its shape
TEST(Poset, AssignmentOfTheBareB8Diagram) {
	enum { v0, a1, a2, a3, b1, b2, P, Q, c21, c31, c12, c22, vmax, count };
	const std::vector<Edge> covers{{v0, a1},  {a1, a2},  {a2, a3},   {a1, P},   {b1, P},    {P, Q},
	                               {Q, c12},  {Q, c21},  {c21, c31}, {b2, c12}, {c12, c22}, {c22, vmax},
	                               {v0, b1},  {a2, c21}, {a3, c31},  {b1, b2},  {c21, c22}, {c31, vmax}};
	const auto id = parse_case("B8 n=2 m=2");
	const auto a = assign_orbits(BarePoset{count, covers}, chains_of(id));
	EXPECT_FALSE(a.flexible);
	const std::map<int, std::string> expected{{v0, "0"},       {a1, "O10"},    {a2, "O20"},    {a3, "O22"},   {b1, "O'1"},
	                                          {b2, "O'2"},     {P, "Z10,1"},   {Q, "Y10,1"},   {c21, "Y20,1"},
	                                          {c31, "Y22,1"},  {c12, "Y10,2"}, {c22, "Y20,2"}, {vmax, "Y22,2"}};
	for (const auto& [v, name] : expected) EXPECT_EQ(label_name(a.labels[v]), name) << v;
	// the shape is the builtin diagram
	const auto p = builtin_poset(id);
	EXPECT_EQ(p.size(), static_cast<std::size_t>(count));
	for (auto [x, y] : covers) EXPECT_TRUE(closure_leq(id, a.labels[x], a.labels[y]));
}

TEST(Poset, AssignmentRejectsMismatchedShapes) {
	const auto id = parse_case("B8 n=2 m=2");
	auto chains = chains_of(id);
	chains.second.push_back(Component{3, -1});
	EXPECT_THROW(assign_orbits(builtin_poset(id).bare(), chains), InvalidArgument);
	EXPECT_THROW(assign_orbits(BarePoset{3, {{0, 1}, {1, 2}}}, chains_of(id)), InvalidArgument);
}
