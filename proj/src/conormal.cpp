#include "orbdual/conormal.hpp"

namespace orbdual {

Subspace tangent(const std::vector<Matrix>& gens, const Vector& x) {
	std::vector<Vector> vs;
	vs.reserve(gens.size());
	for (const auto& g : gens) vs.push_back(g * x);
	return Subspace::span(x.size(), vs);
}

Subspace tangent(const CaseSpec& spec, const Vector& x) { return tangent(spec.generators, x); }

Subspace conormal(const CaseSpec& spec, const Vector& x) { return annihilator(tangent(spec, x), spec.pairing); }

std::size_t point_orbit_dim(const CaseSpec& spec, const Vector& x) { return tangent(spec, x).dim(); }

std::size_t covector_orbit_dim(const CaseSpec& spec, const Vector& y) {
	return tangent(spec.dual_generators(), y).dim();
}

std::size_t orbit_dim(const CaseSpec& spec, const OrbitLabel& l) {
	return point_orbit_dim(spec, representative(spec, l));
}

EmpiricalDual empirical_dual(const CaseSpec& spec, const OrbitPoset& poset, const OrbitLabel& l,
                             const EmpiricalOptions& opt, Rng& rng) {
	if (opt.trials == 0) throw InvalidArgument("trials must be positive");
	const auto base = representative(spec, l);
	EmpiricalDual out;
	for (std::size_t t = 0; t < opt.trials; ++t) {
		const auto x = apply_word(spec, random_group_word(spec, rng, opt.steps), base);
		const auto n = conormal(spec, x);
		const auto y = n.dim() == 0 ? Vector(spec.dim) : random_element(n, rng, opt.height);
		out.observed.push_back(classify_dual(spec, y));
	}
	for (const auto& cand : out.observed) {
		const auto c = poset.index_of(cand);
		bool top = true;
		for (const auto& o : out.observed) top = top && poset.leq(poset.index_of(o), c);
		if (top) {
			out.label = cand;
			return out;
		}
	}
	throw Inconsistent("inconsistent samples for the dual of " + label_name(l) + " in " + case_name(spec.id));
}

OrbitLabel empirical_dual(const CaseSpec& spec, const OrbitLabel& l, const EmpiricalOptions& opt, Rng& rng) {
	return empirical_dual(spec, builtin_poset(spec.id), l, opt, rng).label;
}

namespace {

bool indexed_z(Family f) { return f == Family::B1 || f == Family::B2 || f == Family::B3 || f == Family::B4; }

}  // namespace

Json verify_case(const CaseId& id, const EmpiricalOptions& opt, std::uint64_t seed) {
	const auto& spec = shared_case(id);
	const auto poset = builtin_poset(id);
	const auto name = case_name(id);
	Json orbits = Json::array();
	std::vector<std::size_t> empirical(poset.size());
	bool ok = true;
	for (std::size_t i = 0; i < poset.size(); ++i) {
		const auto& l = poset.labels[i];
		Rng rng(mix_seed(seed, hash_text(name + "|" + label_name(l))));
		const auto emp = empirical_dual(spec, poset, l, opt, rng);
		empirical[i] = poset.index_of(emp.label);
		const auto dim = static_cast<long>(orbit_dim(spec, l));
		const auto& expected = poset.labels[poset.duality[i]];
		const bool dual_ok = emp.label == expected;
		const bool dim_ok = dim == poset.dims[i];
		ok = ok && dual_ok && dim_ok;
		orbits.push_back(Json{{"label", label_name(l)},
		                      {"expected", label_name(expected)},
		                      {"empirical", label_name(emp.label)},
		                      {"dims", Json{{"recorded", poset.dims[i]}, {"computed", dim}}},
		                      {"match", dual_ok && dim_ok}});
	}
	bool involution = true;
	for (std::size_t i = 0; i < poset.size(); ++i)
		involution = involution && empirical[empirical[i]] == i && poset.duality[poset.duality[i]] == i;
	ok = ok && involution;
	Json report{{"case", name}, {"seed", seed}, {"trials", opt.trials}, {"orbits", orbits}, {"involution", involution}};
	if (indexed_z(id.family)) {
		Json zmap = Json::array();
		for (std::size_t i = 0; i < poset.size(); ++i) {
			const auto* z = std::get_if<ZLabel>(&poset.labels[i]);
			if (z == nullptr) continue;
			const auto* w = std::get_if<ZLabel>(&poset.labels[empirical[i]]);
			const int stored = z_dual_index(id, z->i);
			const int found = w != nullptr ? w->i : -1;
			ok = ok && stored == found;
			zmap.push_back(Json{{"i", z->i}, {"j", found}, {"stored", stored}});
		}
		report["z_map"] = zmap;
	}
	report["ok"] = ok;
	return report;
}

std::vector<CaseId> verify_grid() {
	std::vector<CaseId> out;
	auto add = [&](Family f, std::map<std::string, int> p) { out.push_back(CaseId{f, std::move(p)}); };
	for (int q = 1; q <= 3; ++q)
		for (int p = 1; p <= 3; ++p) add(Family::A1, {{"q", q}, {"p", p}});
	for (int n = 1; n <= 4; ++n) add(Family::A2, {{"n", n}});
	for (int n = 2; n <= 4; ++n) add(Family::A3, {{"n", n}});
	add(Family::A4, {});
	for (int n : {2, 3, 7}) add(Family::A5, {{"n", n}});
	add(Family::A6, {});
	add(Family::A7, {});
	add(Family::A8, {});
	add(Family::A9, {});
	for (int n = 1; n <= 3; ++n)
		for (int m = 1; m <= 5; ++m) add(Family::A10, {{"n", n}, {"m", m}});
	for (auto f : {Family::B1, Family::B2})
		for (int n = 2; n <= 5; ++n) add(f, {{"n", n}});
	for (auto f : {Family::B3, Family::B4})
		for (int q = 1; q <= 5; ++q)
			for (int p = 1; p <= 5; ++p) add(f, {{"q", q}, {"p", p}});
	for (int n = 2; n <= 3; ++n) add(Family::B5, {{"n", n}});
	for (int n = 2; n <= 3; ++n) add(Family::B6, {{"n", n}});
	for (int n = 1; n <= 3; ++n)
		for (int m = 1; m <= 3; ++m) add(Family::B7, {{"n", n}, {"m", m}});
	for (int n = 2; n <= 3; ++n)
		for (int m = 1; m <= 3; ++m) add(Family::B8, {{"n", n}, {"m", m}});
	for (int n = 2; n <= 3; ++n)
		for (int m = 2; m <= 3; ++m) add(Family::B9, {{"n", n}, {"m", m}});
	add(Family::B10, {});
	return out;
}

Json verify_all(const std::vector<CaseId>& cases, const EmpiricalOptions& opt, std::uint64_t seed) {
	Json reports = Json::array();
	bool ok = true;
	for (const auto& id : cases) {
		auto r = verify_case(id, opt, seed);
		ok = ok && r["ok"].get<bool>();
		reports.push_back(std::move(r));
	}
	return Json{{"seed", seed}, {"trials", opt.trials}, {"cases", reports}, {"ok", ok}};
}

}  // namespace orbdual
