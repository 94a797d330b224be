#pragma once

#include <string>
#include <variant>

#include "orbdual/json_io.hpp"

namespace orbdual {

// orbit of one summand of a reducible case: a plain index, or a rank pair (r, s)
struct Component {
	int r = 0;
	int s = -1;  // -1 for a plain index

	[[nodiscard]] bool is_pair() const { return s >= 0; }
	[[nodiscard]] bool is_zero() const { return r == 0; }
	bool operator==(const Component&) const = default;
	auto operator<=>(const Component&) const = default;
};

bool component_leq(const Component& a, const Component& b);

struct IndexLabel {
	int i = 0;
	bool operator==(const IndexLabel&) const = default;
};

struct RankPairLabel {
	int r = 0, s = 0;
	bool operator==(const RankPairLabel&) const = default;
};

// covector invariants (k, t) of the symplectic case
struct DualRankPairLabel {
	int k = 0, t = 0;
	bool operator==(const DualRankPairLabel&) const = default;
};

struct OriginLabel {
	bool operator==(const OriginLabel&) const = default;
};

struct Pure1Label {
	Component c;
	bool operator==(const Pure1Label&) const = default;
};

struct Pure2Label {
	Component c;
	bool operator==(const Pure2Label&) const = default;
};

struct YLabel {
	Component a, b;
	bool operator==(const YLabel&) const = default;
};

enum class ZKind { Index, Sim, Circ, Unit };

struct ZLabel {
	ZKind kind = ZKind::Index;
	int i = 0;       // for ZKind::Index
	Component a, b;  // the cell (a, b) of component orbits containing it
	bool operator==(const ZLabel&) const = default;
};

using OrbitLabel =
    std::variant<IndexLabel, RankPairLabel, DualRankPairLabel, OriginLabel, Pure1Label, Pure2Label, YLabel, ZLabel>;

std::string label_name(const OrbitLabel& l);
Json label_to_json(const OrbitLabel& l);
OrbitLabel label_from_json(const Json& j);

// component orbits of a reducible-case label; (0, 0) for the origin
std::pair<Component, Component> components_of(const OrbitLabel& l);

}  // namespace orbdual
