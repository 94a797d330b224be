#include "orbdual/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace orbdual {

std::vector<std::vector<bool>> order_from_covers(std::size_t n, const std::vector<Edge>& covers) {
	std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
	for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
	for (auto [a, b] : covers) {
		if (a >= n || b >= n) throw InvalidArgument("cover edge refers to a missing vertex");
		le[a][b] = true;
	}
	for (std::size_t k = 0; k < n; ++k)
		for (std::size_t i = 0; i < n; ++i)
			if (le[i][k])
				for (std::size_t j = 0; j < n; ++j)
					if (le[k][j]) le[i][j] = true;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			if (le[i][j] && le[j][i]) throw InvalidArgument("cover relation has a cycle");
	return le;
}

std::vector<Edge> transitive_reduction(const std::vector<std::vector<bool>>& le) {
	const auto n = le.size();
	std::vector<Edge> covers;
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) {
			if (a == b || !le[a][b]) continue;
			bool direct = true;
			for (std::size_t c = 0; c < n && direct; ++c)
				if (c != a && c != b && le[a][c] && le[c][b]) direct = false;
			if (direct) covers.emplace_back(a, b);
		}
	return covers;
}

std::size_t OrbitPoset::index_of(const OrbitLabel& l) const {
	auto it = std::find(labels.begin(), labels.end(), l);
	if (it == labels.end()) throw InvalidArgument("orbit " + label_name(l) + " not in " + name);
	return static_cast<std::size_t>(it - labels.begin());
}

namespace {

int P(const CaseId& id, const char* k) { return id.param(k); }

long symplectic_dim(int n, int m, int r, int s) {
	return static_cast<long>(r) * (2 * n + m - r) - static_cast<long>(r - s) * (r - s - 1) / 2;
}

int floor_even(int x) { return x >= 0 ? x - x % 2 : -((-x + 1) / 2 * 2); }

Component symplectic_dual(int n, int m, const Component& c) {
	const int k = floor_even(c.r - c.s);
	const int r2 = std::min(2 * n, m + k) - c.r;
	const int s2 = (r2 - k) % 2 == 0 ? r2 - k : r2 - k - 1;
	return Component{r2, s2};
}

long component_dim(const CaseId& id, std::size_t k, const Component& c) {
	if (c.is_zero()) return 0;
	const int i = c.r;
	switch (id.family) {
		case Family::B1:
		case Family::B2:
			return k == 0 ? static_cast<long>(i) * (2 * P(id, "n") - 2 * i - 1) : P(id, "n");
		case Family::B3:
		case Family::B4:
			return k == 0 ? static_cast<long>(i) * (P(id, "p") + P(id, "q")) - static_cast<long>(i) * i : P(id, "p");
		case Family::B5:
			return 2 * P(id, "n");
		case Family::B6:
			return k == 0 ? symplectic_dim(P(id, "n"), 2, c.r, c.s) : 2;
		case Family::B7:
			return k == 0 ? static_cast<long>(i) * (P(id, "n") + 2) - i * i : static_cast<long>(i) * (P(id, "m") + 2) - i * i;
		case Family::B8:
			return k == 0 ? symplectic_dim(P(id, "n"), 2, c.r, c.s) : static_cast<long>(i) * (P(id, "m") + 2) - i * i;
		case Family::B9:
			return k == 0 ? symplectic_dim(P(id, "n"), 2, c.r, c.s) : symplectic_dim(P(id, "m"), 2, c.r, c.s);
		case Family::B10:
			return i == 1 ? 7 : 8;
		default:
			throw InvalidArgument("not a reducible case");
	}
}

Component component_dual(const CaseId& id, std::size_t k, const Component& c) {
	const auto chain = component_chain(id, k);
	if (chain.back().is_pair()) {
		const int n = (id.family == Family::B9 && k == 1) ? P(id, "m") : P(id, "n");
		return symplectic_dual(n, 2, c.is_zero() ? Component{0, 0} : c);
	}
	return Component{chain.back().r - c.r, -1};
}

OrbitLabel from_components(const Component& a, const Component& b) {
	if (a.is_zero() && b.is_zero()) return OriginLabel{};
	if (b.is_zero()) return Pure1Label{a};
	if (a.is_zero()) return Pure2Label{b};
	return YLabel{a, b};
}

}  // namespace

int z_dual_index(const CaseId& id, int i) {
	switch (id.family) {
		case Family::B1:
		case Family::B2:
			return floor_even(P(id, "n") - 2 * i + 1) / 2;
		case Family::B3:
		case Family::B4:
			return std::min(P(id, "p") - i, P(id, "q") - i + 1);
		default:
			throw InvalidArgument("Z orbits of " + case_name(id) + " are not indexed");
	}
}

long recorded_dim(const CaseId& id, const OrbitLabel& l) {
	if (!is_label_of(id, l)) throw InvalidArgument("unknown orbit " + label_name(l) + " of " + case_name(id));
	if (auto rp = std::get_if<RankPairLabel>(&l)) return symplectic_dim(P(id, "n"), P(id, "m"), rp->r, rp->s);
	if (auto ix = std::get_if<IndexLabel>(&l)) {
		const long i = ix->i;
		switch (id.family) {
			case Family::A1:
				return i * (P(id, "p") + P(id, "q")) - i * i;
			case Family::A2:
				return i * P(id, "n") - i * (i - 1) / 2;
			case Family::A3:
				return i * (2 * P(id, "n") - 2 * i - 1);
			case Family::A4:
				return std::vector<long>{0, 17, 26, 27}[static_cast<std::size_t>(i)];
			case Family::A5:
				return i == 0 ? 0 : (i == 1 ? P(id, "n") - 1 : P(id, "n"));
			case Family::A6:
				return std::vector<long>{0, 6, 7}[static_cast<std::size_t>(i)];
			case Family::A7:
				return std::vector<long>{0, 7, 8}[static_cast<std::size_t>(i)];
			case Family::A8:
				return std::vector<long>{0, 11, 16}[static_cast<std::size_t>(i)];
			case Family::A9:
				return std::vector<long>{0, 11, 15, 16}[static_cast<std::size_t>(i)];
			default:
				break;
		}
	}
	if (auto z = std::get_if<ZLabel>(&l)) {
		const long n = id.params.count("n") ? P(id, "n") : 0;
		const long m = id.params.count("m") ? P(id, "m") : 0;
		const long i = z->i;
		switch (id.family) {
			case Family::B1:
				return i * (2 * n - 2 * i + 1);
			case Family::B2:
				return n + i * (2 * n - 2 * i - 3);
			case Family::B3:
				return i * (P(id, "p") + P(id, "q") - i + 1);
			case Family::B4:
				return P(id, "p") + i * (P(id, "p") + P(id, "q") - i - 1);
			case Family::B5:
				return z->kind == ZKind::Sim ? 2 * n + 1 : 4 * n - 1;
			case Family::B6:
				return 2 * n + 2;
			case Family::B7:
				return m + n + 1;
			case Family::B8:
				return 2 * n + m + 1;
			case Family::B9:
				return 2 * (n + m) + 1;
			case Family::B10:
				return 11;
			default:
				break;
		}
	}
	const auto [a, b] = components_of(l);
	return component_dim(id, 0, a) + component_dim(id, 1, b);
}

OrbitLabel recorded_dual(const CaseId& id, const OrbitLabel& l) {
	if (!is_label_of(id, l)) throw InvalidArgument("unknown orbit " + label_name(l) + " of " + case_name(id));
	if (auto rp = std::get_if<RankPairLabel>(&l)) {
		auto c = symplectic_dual(P(id, "n"), P(id, "m"), Component{rp->r, rp->s});
		return RankPairLabel{c.r, c.s};
	}
	if (auto ix = std::get_if<IndexLabel>(&l)) {
		const int top = std::get<IndexLabel>(enumerate_labels(id).back()).i;
		if (id.family == Family::A9 && (ix->i == 1 || ix->i == 2)) return l;
		return IndexLabel{top - ix->i};
	}
	if (auto z = std::get_if<ZLabel>(&l)) {
		if (z->kind != ZKind::Index) return l;
		const int j = z_dual_index(id, z->i);
		return z_label_for(id.family, Component{j, -1}, z->b, 1);
	}
	const auto [a, b] = components_of(l);
	return from_components(component_dual(id, 0, a), component_dual(id, 1, b));
}

bool closure_leq(const CaseId& id, const OrbitLabel& a, const OrbitLabel& b) {
	if (a == b) return true;
	if (auto x = std::get_if<IndexLabel>(&a)) return x->i <= std::get<IndexLabel>(b).i;
	if (auto x = std::get_if<RankPairLabel>(&a)) {
		const auto& y = std::get<RankPairLabel>(b);
		return x->r <= y.r && x->s <= y.s;
	}
	const auto [a1, a2] = components_of(a);
	const auto [b1, b2] = components_of(b);
	const bool below = component_leq(a1, b1) && component_leq(a2, b2);
	const auto* zb = std::get_if<ZLabel>(&b);
	if (zb == nullptr) return below;
	if (!below) return false;
	const auto* za = std::get_if<ZLabel>(&a);
	const bool pure = !za && !std::holds_alternative<YLabel>(a);
	switch (id.family) {
		case Family::B1:
		case Family::B3:
			// closure of Z_i holds every Y_k with k < i
			return !(std::holds_alternative<YLabel>(a) && a1 == b1);
		case Family::B2:
		case Family::B4:
			return pure || za != nullptr;
		case Family::B5:
			return pure || (za != nullptr && za->kind == ZKind::Sim);
		default:
			return pure;
	}
}

OrbitPoset builtin_poset(const CaseId& id) {
	OrbitPoset p;
	p.name = case_name(id);
	p.labels = enumerate_labels(id);
	const auto n = p.labels.size();
	std::map<std::string, std::size_t> at;
	for (std::size_t i = 0; i < n; ++i) at[label_name(p.labels[i])] = i;
	for (const auto& l : p.labels) {
		p.dims.push_back(recorded_dim(id, l));
		p.duality.push_back(at.at(label_name(recorded_dual(id, l))));
	}
	p.order.assign(n, std::vector<bool>(n, false));
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = 0; b < n; ++b) p.order[a][b] = closure_leq(id, p.labels[a], p.labels[b]);
	p.covers = transitive_reduction(p.order);
	return p;
}

namespace {

std::string quoted(const std::string& s) {
	std::string out = "\"";
	for (char c : s) {
		if (c == '"' || c == '\\') out += '\\';
		out += c;
	}
	return out + "\"";
}

}  // namespace

std::string export_dot(const OrbitPoset& p) {
	std::ostringstream out;
	out << "digraph " << quoted(p.name) << " {\n";
	out << "  rankdir=BT;\n";
	for (std::size_t i = 0; i < p.size(); ++i)
		out << "  n" << i << " [label=" << quoted(label_name(p.labels[i])) << ", dim=" << p.dims[i]
		    << ", dual=" << quoted(label_name(p.labels[p.duality[i]])) << "];\n";
	for (auto [a, b] : p.covers) out << "  n" << a << " -> n" << b << ";\n";
	out << "}\n";
	return out.str();
}

Json export_json(const OrbitPoset& p) {
	Json orbits = Json::array();
	for (std::size_t i = 0; i < p.size(); ++i)
		orbits.push_back(Json{{"name", label_name(p.labels[i])},
		                      {"label", label_to_json(p.labels[i])},
		                      {"dim", p.dims[i]},
		                      {"dual", label_name(p.labels[p.duality[i]])}});
	Json covers = Json::array();
	for (auto [a, b] : p.covers) covers.push_back(Json::array({a, b}));
	return Json{{"case", p.name}, {"orbits", orbits}, {"covers", covers}};
}

OrbitPoset import_json(const Json& j) {
	if (!j.is_object() || !j.contains("orbits") || !j["orbits"].is_array() || !j.contains("covers") ||
	    !j["covers"].is_array())
		throw InvalidArgument("poset JSON needs orbits and covers arrays");
	OrbitPoset p;
	p.name = j.value("case", std::string());
	std::map<std::string, std::size_t> at;
	std::vector<std::string> duals;
	for (const auto& o : j["orbits"]) {
		if (!o.is_object() || !o.contains("label") || !o.contains("dim") || !o["dim"].is_number_integer())
			throw InvalidArgument("orbit entry needs label and integer dim");
		p.labels.push_back(label_from_json(o["label"]));
		const auto nm = label_name(p.labels.back());
		if (at.count(nm)) throw InvalidArgument("duplicate orbit " + nm);
		at[nm] = p.labels.size() - 1;
		p.dims.push_back(o["dim"].get<long>());
		duals.push_back(o.contains("dual") && o["dual"].is_string() ? o["dual"].get<std::string>() : nm);
	}
	for (const auto& d : duals) {
		if (!at.count(d)) throw InvalidArgument("dual orbit " + d + " is not in the poset");
		p.duality.push_back(at[d]);
	}
	for (std::size_t i = 0; i < p.duality.size(); ++i)
		if (p.duality[p.duality[i]] != i) throw InvalidArgument("duality is not an involution");
	for (const auto& e : j["covers"]) {
		if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() || e[0].get<long>() < 0 ||
		    e[1].get<long>() < 0)
			throw InvalidArgument("cover edges are pairs of vertex indices");
		p.covers.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
	}
	p.order = order_from_covers(p.size(), p.covers);
	auto reduced = transitive_reduction(p.order);
	auto given = p.covers;
	std::sort(reduced.begin(), reduced.end());
	std::sort(given.begin(), given.end());
	if (reduced != given) throw InvalidArgument("cover list is not a transitive reduction");
	for (auto [a, b] : p.covers)
		if (p.dims[a] >= p.dims[b]) throw InvalidArgument("dimensions must increase along covers");
	return p;
}

Assignment assign_orbits(const BarePoset& abstract, const ComponentChains& chains) {
	const auto n = abstract.size;
	const auto le = order_from_covers(n, abstract.covers);
	std::size_t bottom = n;
	for (std::size_t v = 0; v < n && bottom == n; ++v) {
		bool all = true;
		for (std::size_t w = 0; w < n; ++w) all = all && le[v][w];
		if (all) bottom = v;
	}
	if (bottom == n) throw InvalidArgument("unassignable: diagram has no least vertex");
	std::vector<std::size_t> starts;
	for (auto [a, b] : abstract.covers)
		if (a == bottom) starts.push_back(b);
	std::sort(starts.begin(), starts.end());
	if (starts.size() != 2) throw InvalidArgument("unassignable: the least vertex must have exactly two covers");

	auto chain_from = [&](std::size_t first, std::size_t other) {
		std::vector<std::size_t> ch{first};
		for (;;) {
			std::vector<std::size_t> next;
			for (auto [a, b] : abstract.covers)
				if (a == ch.back() && !le[other][b]) next.push_back(b);
			if (next.empty()) break;
			if (next.size() > 1) throw InvalidArgument("unassignable: pure chain branches");
			ch.push_back(next[0]);
		}
		return ch;
	};
	auto ga = chain_from(starts[0], starts[1]);
	auto gb = chain_from(starts[1], starts[0]);
	const bool direct = ga.size() + 1 == chains.first.size() && gb.size() + 1 == chains.second.size();
	const bool swapped = gb.size() + 1 == chains.first.size() && ga.size() + 1 == chains.second.size();
	if (!direct && !swapped) throw InvalidArgument("unassignable: pure chains do not match the component chains");
	Assignment out;
	out.flexible = direct && swapped;
	if (!direct) std::swap(ga, gb);

	std::vector<bool> done(n, false);
	out.labels.assign(n, OriginLabel{});
	done[bottom] = true;
	for (std::size_t i = 0; i < ga.size(); ++i) {
		out.labels[ga[i]] = Pure1Label{chains.first[i + 1]};
		done[ga[i]] = true;
	}
	for (std::size_t j = 0; j < gb.size(); ++j) {
		out.labels[gb[j]] = Pure2Label{chains.second[j + 1]};
		done[gb[j]] = true;
	}
	std::vector<std::pair<std::size_t, std::size_t>> cells;
	for (std::size_t i = 0; i < ga.size(); ++i)
		for (std::size_t j = 0; j < gb.size(); ++j) cells.emplace_back(i, j);
	std::stable_sort(cells.begin(), cells.end(), [](auto x, auto y) {
		if (x.first + x.second != y.first + y.second) return x.first + x.second > y.first + y.second;
		return x.first > y.first;
	});
	for (auto [i, j] : cells) {
		std::vector<std::size_t> s;
		for (std::size_t v = 0; v < n; ++v)
			if (!done[v] && le[ga[i]][v] && le[gb[j]][v]) s.push_back(v);
		// lowest first; the cell's vertices form a chain
		std::sort(s.begin(), s.end(), [&](auto x, auto y) { return le[x][y] && x != y; });
		for (std::size_t k = 0; k + 1 < s.size(); ++k)
			if (!le[s[k]][s[k + 1]]) throw InvalidArgument("unassignable: vertices of one cell are incomparable");
		if (s.empty() || s.size() > 3) throw InvalidArgument("unassignable: cell has an unexpected number of vertices");
		const auto& a = chains.first[i + 1];
		const auto& b = chains.second[j + 1];
		for (std::size_t k = 0; k + 1 < s.size(); ++k) out.labels[s[k]] = z_label_for(chains.family, a, b, static_cast<int>(k + 1));
		out.labels[s.back()] = YLabel{a, b};
		for (auto v : s) done[v] = true;
	}
	for (std::size_t v = 0; v < n; ++v)
		if (!done[v]) throw InvalidArgument("unassignable: vertex " + std::to_string(v) + " could not be assigned");
	return out;
}

}  // namespace orbdual
