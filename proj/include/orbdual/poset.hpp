#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbdual/classify.hpp"
#include "orbdual/labels.hpp"
#include "orbdual/repcat.hpp"

namespace orbdual {

using Edge = std::pair<std::size_t, std::size_t>;  // (lower, upper)

// reflexive-transitive closure of a cover relation; throws on cycles
std::vector<std::vector<bool>> order_from_covers(std::size_t n, const std::vector<Edge>& covers);
std::vector<Edge> transitive_reduction(const std::vector<std::vector<bool>>& order);

struct BarePoset {
	std::size_t size = 0;
	std::vector<Edge> covers;
};

struct OrbitPoset {
	std::string name;
	std::vector<OrbitLabel> labels;
	std::vector<long> dims;
	std::vector<std::size_t> duality;  // index of the dual orbit
	std::vector<Edge> covers;
	std::vector<std::vector<bool>> order;  // order[a][b]: orbit a lies in the closure of orbit b

	[[nodiscard]] std::size_t size() const { return labels.size(); }
	[[nodiscard]] std::size_t index_of(const OrbitLabel& l) const;
	[[nodiscard]] bool leq(std::size_t a, std::size_t b) const { return order[a][b]; }
	[[nodiscard]] BarePoset bare() const { return BarePoset{labels.size(), covers}; }
};

long recorded_dim(const CaseId& id, const OrbitLabel& l);
OrbitLabel recorded_dual(const CaseId& id, const OrbitLabel& l);
// closure order between two orbits of the case
bool closure_leq(const CaseId& id, const OrbitLabel& a, const OrbitLabel& b);
OrbitPoset builtin_poset(const CaseId& id);

// index of the Z orbit dual to Z_i in the first four reducible families
int z_dual_index(const CaseId& id, int i);

std::string export_dot(const OrbitPoset& p);
Json export_json(const OrbitPoset& p);
OrbitPoset import_json(const Json& j);

struct ComponentChains {
	Family family = Family::B1;
	std::vector<Component> first, second;  // zero orbit first
};

struct Assignment {
	std::vector<OrbitLabel> labels;  // per vertex of the bare poset
	bool flexible = false;           // the swapped assignment is equally valid
};

// names the vertices of an abstract diagram of a reducible case from its component chains
Assignment assign_orbits(const BarePoset& abstract, const ComponentChains& chains);

}  // namespace orbdual
