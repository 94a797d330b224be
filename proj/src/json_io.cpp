#include "orbdual/json_io.hpp"

namespace orbdual {

Json scalar_to_json(const Scalar& s) { return to_string(s); }

Scalar scalar_from_json(const Json& j) {
	if (j.is_string()) return parse_scalar(j.get<std::string>());
	if (j.is_number_integer()) return Scalar(std::to_string(j.get<long long>()));
	throw InvalidArgument("scalar must be a \"num/den\" string or an integer");
}

Json matrix_to_json(const Matrix& m) {
	Json e = Json::array();
	for (const auto& x : m.entries()) e.push_back(scalar_to_json(x));
	return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

Matrix matrix_from_json(const Json& j) {
	if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
		throw InvalidArgument("matrix needs rows, cols and entries");
	if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() || !j["entries"].is_array())
		throw InvalidArgument("matrix fields have the wrong type");
	auto r = j["rows"].get<std::size_t>();
	auto c = j["cols"].get<std::size_t>();
	std::vector<Scalar> entries;
	for (const auto& x : j["entries"]) entries.push_back(scalar_from_json(x));
	return Matrix(r, c, std::move(entries));
}

Json vector_to_json(const Vector& v) {
	Json a = Json::array();
	for (const auto& x : v) a.push_back(scalar_to_json(x));
	return a;
}

Vector vector_from_json(const Json& j) {
	if (j.is_array()) {
		Vector v;
		for (const auto& x : j) v.push_back(scalar_from_json(x));
		return v;
	}
	if (j.is_object()) {
		auto m = matrix_from_json(j);
		if (m.rows() != 1 && m.cols() != 1) throw InvalidArgument("vector matrix must have one row or one column");
		return m.entries();
	}
	throw InvalidArgument("vector must be an array or a matrix object");
}

Json parse_json_text(const std::string& text) {
	try {
		return Json::parse(text);
	} catch (const nlohmann::json::exception& e) {
		throw InvalidArgument(std::string("malformed JSON: ") + e.what());
	}
}

}  // namespace orbdual
