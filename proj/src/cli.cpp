#include "orbdual/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "orbdual/classify.hpp"
#include "orbdual/cones.hpp"
#include "orbdual/conormal.hpp"
#include "orbdual/poset.hpp"

namespace orbdual {

namespace {

std::string join(const std::vector<std::string>& parts) {
	std::string s;
	for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
	return s;
}

std::string read_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw InvalidArgument("cannot read " + path);
	std::ostringstream s;
	s << in.rdbuf();
	return s.str();
}

// inline text, or the contents of a file of that name
std::string text_or_file(const std::string& s) {
	std::error_code ec;
	if (!s.empty() && s.front() != '{' && s.front() != '[' && std::filesystem::is_regular_file(s, ec)) return read_file(s);
	return s;
}

CaseId case_arg(const std::vector<std::string>& tokens) { return parse_case(text_or_file(join(tokens))); }

OrbitLabel label_arg(const CaseId& id, const std::string& text) {
	const auto t = text_or_file(text);
	if (!t.empty() && t.front() == '{') {
		auto l = label_from_json(parse_json_text(t));
		if (!is_label_of(id, l)) throw InvalidArgument("label " + label_name(l) + " is not an orbit of " + case_name(id));
		return l;
	}
	return label_from_text(id, t);
}

Vector vector_arg(const CaseSpec& spec, const std::string& text) {
	if (text == "zeros") return Vector(spec.dim);
	return vector_from_json(parse_json_text(text_or_file(text)));
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
	if (path.empty()) {
		out << text;
		return;
	}
	std::ofstream f(path);
	if (!f) throw InvalidArgument("cannot write " + path);
	f << text;
}

struct Options {
	std::vector<std::string> case_tokens;
	std::string label, vector, format = "dot", out_path, system;
	std::uint64_t seed = 42;
	std::size_t trials = 8, steps = 6;
	std::int64_t height = 100;
	int n = 3;
	bool dual = false, json = false, empirical = false;
};

EmpiricalOptions empirical_options(const Options& o) { return EmpiricalOptions{o.trials, o.steps, o.height}; }

void add_oracle_flags(CLI::App* c, Options& o) {
	c->add_option("--seed", o.seed, "random seed")->capture_default_str();
	c->add_option("--trials", o.trials, "oracle trials per orbit")->capture_default_str()->check(CLI::PositiveNumber);
	c->add_option("--steps", o.steps, "group word length")->capture_default_str();
	c->add_option("--height", o.height, "coefficient height")->capture_default_str()->check(CLI::PositiveNumber);
}

CLI::Option* add_case(CLI::App* c, Options& o) {
	return c->add_option("--case", o.case_tokens, "case as JSON, a file, or e.g. \"A10 n=2 m=3\"")
	    ->expected(1, -1)
	    ->required();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
	CLI::App app{"orbit duality engine for saturated spherical representations"};
	app.require_subcommand(1);
	Options o;

	auto* classify_cmd = app.add_subcommand("classify", "orbit of a vector (or covector with --dual)");
	add_case(classify_cmd, o);
	classify_cmd->add_option("--vector", o.vector, "JSON vector, a file, or 'zeros'")->required();
	classify_cmd->add_flag("--dual", o.dual, "classify a covector");
	classify_cmd->add_flag("--json", o.json, "print the label as JSON");

	auto* dual_cmd = app.add_subcommand("dual", "dual orbit of a label");
	add_case(dual_cmd, o);
	dual_cmd->add_option("--label", o.label, "orbit name such as O1, O22, Y1,0 or a JSON label")->required();
	dual_cmd->add_flag("--empirical", o.empirical, "use the conormal oracle");
	dual_cmd->add_flag("--json", o.json, "print the label as JSON");
	add_oracle_flags(dual_cmd, o);

	auto* dim_cmd = app.add_subcommand("dim", "orbit dimension from the tangent space");
	add_case(dim_cmd, o);
	dim_cmd->add_option("--label", o.label, "orbit")->required();

	auto* diagram_cmd = app.add_subcommand("diagram", "orbit diagram with dimensions and duality");
	add_case(diagram_cmd, o);
	diagram_cmd->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
	diagram_cmd->add_option("--out", o.out_path, "output file");

	auto* verify_cmd = app.add_subcommand("verify", "compare oracle duals and dimensions with the closed forms");
	add_case(verify_cmd, o);
	add_oracle_flags(verify_cmd, o);
	verify_cmd->add_option("--out", o.out_path, "report file");

	auto* cones_cmd = app.add_subcommand("cones", "faces of a cone system meeting the valuation cone");
	cones_cmd->add_option("--system", o.system, "JSON file or text, or 'bundled'")->required();
	cones_cmd->add_option("--format", o.format, "dot or json")->check(CLI::IsMember({"dot", "json"}))->capture_default_str();
	cones_cmd->add_option("--out", o.out_path, "output file");

	auto* semiinv_cmd = app.add_subcommand("semiinv", "semi-invariance of f1..f6 under the Borel subalgebra");
	semiinv_cmd->add_option("--n", o.n, "rank of the symplectic factor")->capture_default_str()->check(CLI::Range(3, 64));
	semiinv_cmd->add_option("--trials", o.trials, "random trials")->capture_default_str();
	semiinv_cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();

	auto* all_cmd = app.add_subcommand("verify-all", "verify every case of the parameter grid");
	add_oracle_flags(all_cmd, o);
	all_cmd->add_option("--out", o.out_path, "report file");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		return app.exit(e, out, err) == 0 ? 0 : 2;
	}

	try {
		if (*classify_cmd) {
			const auto& spec = shared_case(case_arg(o.case_tokens));
			const auto v = vector_arg(spec, o.vector);
			const auto l = o.dual ? classify_dual(spec, v) : classify(spec, v);
			out << (o.json ? label_to_json(l).dump() : label_name(l)) << "\n";
			return 0;
		}
		if (*dual_cmd) {
			const auto id = case_arg(o.case_tokens);
			const auto l = label_arg(id, o.label);
			OrbitLabel d = recorded_dual(id, l);
			if (o.empirical) {
				Rng rng(mix_seed(o.seed, hash_text(case_name(id) + "|" + label_name(l))));
				d = empirical_dual(shared_case(id), l, empirical_options(o), rng);
			}
			out << (o.json ? label_to_json(d).dump() : label_name(d)) << "\n";
			return 0;
		}
		if (*dim_cmd) {
			const auto id = case_arg(o.case_tokens);
			out << orbit_dim(shared_case(id), label_arg(id, o.label)) << "\n";
			return 0;
		}
		if (*diagram_cmd) {
			const auto p = builtin_poset(case_arg(o.case_tokens));
			emit(o.format == "dot" ? export_dot(p) : export_json(p).dump(2) + "\n", o.out_path, out);
			return 0;
		}
		if (*verify_cmd) {
			const auto report = verify_case(case_arg(o.case_tokens), empirical_options(o), o.seed);
			emit(report.dump(2) + "\n", o.out_path, out);
			return report["ok"].get<bool>() ? 0 : 1;
		}
		if (*cones_cmd) {
			const auto s = o.system == "bundled" ? bundled_sp2n_gl3() : system_from_json(parse_json_text(text_or_file(o.system)));
			const auto d = abstract_diagram(s);
			emit(o.format == "dot" ? export_dot(d) : export_json(d).dump(2) + "\n", o.out_path, out);
			return 0;
		}
		if (*semiinv_cmd) {
			Rng rng(o.seed);
			Json results = Json::array();
			bool ok = true;
			for (int i = 1; i <= 6; ++i) {
				const bool pass = semiinvariance_check(i, o.n, semiinvariant_weight(i, o.n), o.trials, rng);
				ok = ok && pass;
				results.push_back(Json{{"f", i}, {"weight", vector_to_json(semiinvariant_weight(i, o.n))}, {"pass", pass}});
			}
			out << Json{{"n", o.n}, {"seed", o.seed}, {"trials", o.trials}, {"sign", kWeightSign}, {"results", results}}.dump(2)
			    << "\n";
			return ok ? 0 : 1;
		}
		if (*all_cmd) {
			const auto report = verify_all(verify_grid(), empirical_options(o), o.seed);
			emit(report.dump(2) + "\n", o.out_path, out);
			return report["ok"].get<bool>() ? 0 : 1;
		}
	} catch (const InvalidArgument& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	} catch (const Json::exception& e) {
		err << "error: " << e.what() << "\n";
		return 2;
	} catch (const Inconsistent& e) {
		err << "inconsistent: " << e.what() << "\n";
		return 3;
	}
	return 2;
}

}  // namespace orbdual
