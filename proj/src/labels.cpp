#include "orbdual/labels.hpp"

namespace orbdual {

bool component_leq(const Component& a, const Component& b) {
	if (a.is_pair() != b.is_pair()) {
		// the zero orbit compares with anything
		if (a.is_zero()) return true;
		if (b.is_zero()) return false;
		throw InvalidArgument("comparing components of different kinds");
	}
	return a.r <= b.r && (!a.is_pair() || a.s <= b.s);
}

namespace {

std::string pair_text(int a, int b) {
	if (a >= 10 || b >= 10) return std::to_string(a) + "," + std::to_string(b);
	return std::to_string(a) + std::to_string(b);
}

std::string component_text(const Component& c) { return c.is_pair() ? pair_text(c.r, c.s) : std::to_string(c.r); }

Json component_json(const Component& c) {
	if (c.is_pair()) return Json{{"r", c.r}, {"s", c.s}};
	return Json{{"i", c.r}};
}

int get_int(const Json& j, const char* key) {
	if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer())
		throw InvalidArgument(std::string("label field '") + key + "' missing or not an integer");
	return j[key].get<int>();
}

Component component_from(const Json& j) {
	if (j.is_object() && j.contains("i")) return Component{get_int(j, "i"), -1};
	return Component{get_int(j, "r"), get_int(j, "s")};
}

template <class... Ts>
struct overloaded : Ts... {
	using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string label_name(const OrbitLabel& l) {
	return std::visit(
	    overloaded{
	        [](const IndexLabel& x) { return "O" + std::to_string(x.i); },
	        [](const RankPairLabel& x) { return "O" + pair_text(x.r, x.s); },
	        [](const DualRankPairLabel& x) { return "Q" + pair_text(x.k, x.t); },
	        [](const OriginLabel&) { return std::string("0"); },
	        [](const Pure1Label& x) { return "O" + component_text(x.c); },
	        [](const Pure2Label& x) { return "O'" + component_text(x.c); },
	        [](const YLabel& x) { return "Y" + component_text(x.a) + "," + component_text(x.b); },
	        [](const ZLabel& x) {
		        switch (x.kind) {
			        case ZKind::Index:
				        return "Z" + std::to_string(x.i);
			        case ZKind::Sim:
				        return std::string("Z~");
			        case ZKind::Circ:
				        return std::string("Zo");
			        default:
				        return "Z" + component_text(x.a) + "," + component_text(x.b);
		        }
	        },
	    },
	    l);
}

Json label_to_json(const OrbitLabel& l) {
	Json j = std::visit(
	    overloaded{
	        [](const IndexLabel& x) { return Json{{"variant", "Index"}, {"i", x.i}}; },
	        [](const RankPairLabel& x) { return Json{{"variant", "RankPair"}, {"r", x.r}, {"s", x.s}}; },
	        [](const DualRankPairLabel& x) { return Json{{"variant", "DualRankPair"}, {"k", x.k}, {"t", x.t}}; },
	        [](const OriginLabel&) { return Json{{"variant", "Origin"}}; },
	        [](const Pure1Label& x) { return Json{{"variant", "Pure1"}, {"component", component_json(x.c)}}; },
	        [](const Pure2Label& x) { return Json{{"variant", "Pure2"}, {"component", component_json(x.c)}}; },
	        [](const YLabel& x) {
		        return Json{{"variant", "Y"}, {"first", component_json(x.a)}, {"second", component_json(x.b)}};
	        },
	        [](const ZLabel& x) {
		        static const char* kinds[] = {"index", "sim", "circ", "unit"};
		        Json z{{"variant", "Z"}, {"kind", kinds[static_cast<int>(x.kind)]}};
		        if (x.kind == ZKind::Index) z["i"] = x.i;
		        z["first"] = component_json(x.a);
		        z["second"] = component_json(x.b);
		        return z;
	        },
	    },
	    l);
	j["name"] = label_name(l);
	return j;
}

OrbitLabel label_from_json(const Json& j) {
	if (!j.is_object() || !j.contains("variant") || !j["variant"].is_string())
		throw InvalidArgument("label needs a \"variant\" string");
	const auto v = j["variant"].get<std::string>();
	if (v == "Index") return IndexLabel{get_int(j, "i")};
	if (v == "RankPair") return RankPairLabel{get_int(j, "r"), get_int(j, "s")};
	if (v == "DualRankPair") return DualRankPairLabel{get_int(j, "k"), get_int(j, "t")};
	if (v == "Origin") return OriginLabel{};
	auto comp = [&](const char* key) {
		if (!j.contains(key)) throw InvalidArgument(std::string("label field '") + key + "' missing");
		return component_from(j[key]);
	};
	if (v == "Pure1") return Pure1Label{comp("component")};
	if (v == "Pure2") return Pure2Label{comp("component")};
	if (v == "Y") return YLabel{comp("first"), comp("second")};
	if (v == "Z") {
		if (!j.contains("kind") || !j["kind"].is_string()) throw InvalidArgument("Z label needs a kind");
		const auto k = j["kind"].get<std::string>();
		ZLabel z;
		if (k == "index") {
			z.kind = ZKind::Index;
			z.i = get_int(j, "i");
		} else if (k == "sim") {
			z.kind = ZKind::Sim;
		} else if (k == "circ") {
			z.kind = ZKind::Circ;
		} else if (k == "unit") {
			z.kind = ZKind::Unit;
		} else {
			throw InvalidArgument("unknown Z kind '" + k + "'");
		}
		z.a = comp("first");
		z.b = comp("second");
		return z;
	}
	throw InvalidArgument("unknown label variant '" + v + "'");
}

std::pair<Component, Component> components_of(const OrbitLabel& l) {
	if (auto p = std::get_if<Pure1Label>(&l)) return {p->c, Component{}};
	if (auto p = std::get_if<Pure2Label>(&l)) return {Component{}, p->c};
	if (auto p = std::get_if<YLabel>(&l)) return {p->a, p->b};
	if (auto p = std::get_if<ZLabel>(&l)) return {p->a, p->b};
	if (std::holds_alternative<OriginLabel>(l)) return {Component{}, Component{}};
	throw InvalidArgument("label " + label_name(l) + " has no components");
}

}  // namespace orbdual
