#include "orbdual/repcat.hpp"

#include <array>
#include <mutex>
#include <sstream>

#include "orbdual/algebras.hpp"
#include "orbdual/sparse.hpp"

namespace orbdual {

namespace {

const std::array<const char*, 20> kFamilyNames{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10",
                                               "B1", "B2", "B3", "B4", "B5", "B6", "B7", "B8", "B9", "B10"};

}  // namespace

std::string family_name(Family f) { return kFamilyNames[static_cast<std::size_t>(f)]; }

Family parse_family(const std::string& s) {
	for (std::size_t i = 0; i < kFamilyNames.size(); ++i)
		if (s == kFamilyNames[i]) return static_cast<Family>(i);
	throw InvalidArgument("unknown case family '" + s + "'");
}

bool is_reducible(Family f) { return static_cast<int>(f) >= static_cast<int>(Family::B1); }

std::vector<std::string> family_params(Family f) {
	switch (f) {
		case Family::A1:
		case Family::B3:
		case Family::B4:
			return {"q", "p"};
		case Family::A2:
		case Family::A3:
		case Family::A5:
		case Family::B1:
		case Family::B2:
		case Family::B5:
		case Family::B6:
			return {"n"};
		case Family::A10:
		case Family::B7:
		case Family::B8:
		case Family::B9:
			return {"n", "m"};
		default:
			return {};
	}
}

int CaseId::param(const std::string& name) const {
	auto it = params.find(name);
	if (it == params.end()) throw InvalidArgument(family_name(family) + " has no parameter " + name);
	return it->second;
}

std::string case_name(const CaseId& id) {
	std::string s = family_name(id.family);
	for (const auto& p : family_params(id.family)) s += " " + p + "=" + std::to_string(id.param(p));
	return s;
}

Json case_to_json(const CaseId& id) {
	Json params = Json::object();
	for (const auto& p : family_params(id.family)) params[p] = id.param(p);
	return Json{{"family", family_name(id.family)}, {"params", params}};
}

void validate_case(const CaseId& id) {
	const auto names = family_params(id.family);
	if (id.params.size() != names.size()) throw InvalidArgument("wrong parameter set for " + family_name(id.family));
	for (const auto& n : names)
		if (!id.params.count(n)) throw InvalidArgument(family_name(id.family) + " needs parameter " + n);
	auto need = [&](const char* p, int lo, int hi = 64) {
		int v = id.param(p);
		if (v < lo || v > hi)
			throw InvalidArgument(family_name(id.family) + " parameter " + p + " out of range [" + std::to_string(lo) + ", " +
			                      std::to_string(hi) + "]");
	};
	switch (id.family) {
		case Family::A1:
		case Family::B3:
		case Family::B4:
			need("q", 1);
			need("p", 1);
			break;
		case Family::A2:
			need("n", 1);
			break;
		case Family::A3:
		case Family::A5:
		case Family::B1:
		case Family::B2:
		case Family::B5:
		case Family::B6:
			need("n", 2);
			break;
		case Family::A10:
		case Family::B7:
			need("n", 1);
			need("m", 1);
			break;
		case Family::B8:
			need("n", 2);
			need("m", 1);
			break;
		case Family::B9:
			need("n", 2);
			need("m", 2);
			break;
		default:
			break;
	}
}

CaseId case_from_json(const Json& j) {
	if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
		throw InvalidArgument("case needs a \"family\" string");
	CaseId id;
	id.family = parse_family(j["family"].get<std::string>());
	if (j.contains("params")) {
		if (!j["params"].is_object()) throw InvalidArgument("case params must be an object");
		for (const auto& [k, v] : j["params"].items()) {
			if (!v.is_number_integer()) throw InvalidArgument("case parameter " + k + " must be an integer");
			id.params[k] = v.get<int>();
		}
	}
	validate_case(id);
	return id;
}

CaseId parse_case(const std::string& text) {
	auto first = text.find_first_not_of(" \t\n");
	if (first != std::string::npos && text[first] == '{') return case_from_json(parse_json_text(text));
	std::istringstream in(text);
	std::string fam;
	in >> fam;
	if (fam.empty()) throw InvalidArgument("empty case");
	CaseId id;
	id.family = parse_family(fam);
	std::string tok;
	while (in >> tok) {
		auto eq = tok.find('=');
		if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size()) throw InvalidArgument("bad case parameter '" + tok + "'");
		try {
			std::size_t used = 0;
			int v = std::stoi(tok.substr(eq + 1), &used);
			if (used != tok.size() - eq - 1) throw std::invalid_argument(tok);
			id.params[tok.substr(0, eq)] = v;
		} catch (const std::logic_error&) {
			throw InvalidArgument("bad case parameter '" + tok + "'");
		}
	}
	validate_case(id);
	return id;
}

namespace detail {

struct InvariantCache {
	std::mutex mutex;
	std::map<InvariantSlot, std::vector<InvariantTensor>> tensors;
};

}  // namespace detail

std::vector<Matrix> CaseSpec::dual_generators() const {
	std::vector<Matrix> d;
	for (const auto& g : generators) d.push_back(-g.transpose());
	return d;
}

std::size_t CaseSpec::summand_offset(std::size_t k) const {
	std::size_t off = 0;
	for (std::size_t i = 0; i < k; ++i) off += summands.at(i);
	return off;
}

const std::vector<InvariantTensor>& CaseSpec::invariants(const InvariantSlot& slot) const {
	std::lock_guard<std::mutex> lock(cache->mutex);
	auto it = cache->tensors.find(slot);
	if (it != cache->tensors.end()) return it->second;

	auto twist = [&](const Matrix& m) { return slot.dual ? Matrix(-m.transpose()) : m; };
	std::vector<Matrix> gens, target;
	std::vector<std::size_t> blocks;
	TensorShape shape = TensorShape::SymmetricBilinear;
	if (slot.kind == InvariantKind::Pairing) {
		if (pairing_gens.empty()) throw InvalidArgument(case_name(id) + " has no equivariant pairing");
		for (const auto& g : pairing_gens) gens.push_back(twist(g));
		for (const auto& g : pairing_target) target.push_back(twist(g));
		blocks = pairing_blocks;
		shape = TensorShape::EquivariantPairing;
	} else {
		for (std::size_t k = 0; k < generators.size(); ++k) {
			if (central[k]) continue;
			Matrix g = twist(generators[k]);
			if (slot.block >= 0) {
				auto b = static_cast<std::size_t>(slot.block);
				g = g.block(summand_offset(b), summand_offset(b), summands.at(b), summands.at(b));
			}
			gens.push_back(std::move(g));
		}
		shape = slot.kind == InvariantKind::Cubic ? TensorShape::SymmetricCubic : TensorShape::SymmetricBilinear;
	}
	auto sol = solve_invariants(gens, shape, target, blocks);
	return cache->tensors.emplace(slot, std::move(sol)).first->second;
}

const InvariantTensor& CaseSpec::invariant(const InvariantSlot& slot) const {
	const auto& all = invariants(slot);
	if (all.size() != 1)
		throw Inconsistent(case_name(id) + ": expected a unique invariant, solution space has dimension " +
		                   std::to_string(all.size()));
	return all[0];
}

namespace {

struct Builder {
	std::vector<std::size_t> summands;
	std::vector<Matrix> gens;
	std::vector<bool> central;

	[[nodiscard]] std::size_t dim() const {
		std::size_t d = 0;
		for (auto s : summands) d += s;
		return d;
	}

	// one block per summand; empty blocks mean zero
	void add(const std::vector<Matrix>& blocks, bool is_central = false) {
		Matrix g(0, 0);
		for (std::size_t k = 0; k < summands.size(); ++k) {
			const Matrix b = (k < blocks.size() && blocks[k].rows() > 0) ? blocks[k] : Matrix(summands[k], summands[k]);
			g = direct_sum(g, b);
		}
		gens.push_back(std::move(g));
		central.push_back(is_central);
	}

	void scaling(std::size_t k) {
		std::vector<Matrix> b(summands.size());
		b[k] = Matrix::identity(summands[k]);
		add(b, true);
	}
};

// action X |-> xi X + X xi^T on symmetric (sign = 1) or skew (sign = -1) matrices,
// coordinates X_ij for i <= j (resp. i < j)
Matrix square_action(const Matrix& xi, int sign) {
	const auto n = xi.rows();
	std::vector<std::pair<std::size_t, std::size_t>> idx;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = sign > 0 ? i : i + 1; j < n; ++j) idx.emplace_back(i, j);
	Matrix m(idx.size(), idx.size());
	for (std::size_t c = 0; c < idx.size(); ++c) {
		Matrix x(n, n);
		x(idx[c].first, idx[c].second) = 1;
		x(idx[c].second, idx[c].first) = sign;
		const Matrix y = xi * x + x * xi.transpose();
		for (std::size_t r = 0; r < idx.size(); ++r) m(r, c) = y(idx[r].first, idx[r].second);
	}
	return m;
}

std::vector<Matrix> sl2_basis() {
	return {unit_matrix(2, 2, 0, 0) - unit_matrix(2, 2, 1, 1), unit_matrix(2, 2, 0, 1), unit_matrix(2, 2, 1, 0)};
}

// nilpotent elements of the algebra: weight components, for a diagonal element h of the
// algebra, of each generator at nonzero eigenvalues of ad h
std::vector<Matrix> root_vectors(const std::vector<Matrix>& gens) {
	if (gens.empty()) return {};
	const auto n = gens[0].rows();
	std::vector<std::pair<std::size_t, std::size_t>> off;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (i != j) {
				for (const auto& g : gens)
					if (sgn(g(i, j)) != 0) {
						off.emplace_back(i, j);
						break;
					}
			}
	std::vector<Vector> rows;
	for (auto [i, j] : off) {
		Vector r;
		for (const auto& g : gens) r.push_back(g(i, j));
		rows.push_back(r);
	}
	const auto diag = kernel(Matrix::from_rows(rows, gens.size()));
	if (diag.dim() == 0) return {};
	Vector h(n);
	Scalar weight = 1;
	for (const auto& c : diag.vectors()) {
		for (std::size_t k = 0; k < gens.size(); ++k)
			if (sgn(c[k]) != 0)
				for (std::size_t i = 0; i < n; ++i) h[i] += weight * c[k] * gens[k](i, i);
		weight = weight * 10 + 1;
	}
	std::vector<Matrix> pieces;
	for (const auto& g : gens) {
		std::map<Scalar, Matrix> byweight;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j) {
				if (sgn(g(i, j)) == 0) continue;
				Scalar lambda = h[i] - h[j];
				if (sgn(lambda) == 0) continue;
				auto it = byweight.try_emplace(lambda, n, n).first;
				it->second(i, j) = g(i, j);
			}
		for (auto& [l, m] : byweight) pieces.push_back(std::move(m));
	}
	return independent_subset(pieces);
}

CaseSpec assemble(const CaseId& id, Builder b) {
	CaseSpec s;
	s.id = id;
	s.summands = b.summands;
	s.dim = b.dim();
	s.generators = std::move(b.gens);
	s.central = std::move(b.central);
	s.pairing = Matrix::identity(s.dim);
	s.cache = std::make_shared<detail::InvariantCache>();
	return s;
}

std::vector<Matrix> gl_on_hom_left(std::size_t q, std::size_t p) {
	std::vector<Matrix> out;
	for (const auto& e : gl_basis(q)) out.push_back(left_action(e, p));
	return out;
}

std::vector<Matrix> gl_on_hom_right(std::size_t q, std::size_t p) {
	std::vector<Matrix> out;
	for (const auto& e : gl_basis(p)) out.push_back(-right_action(e, q));
	return out;
}

// Sp_2n acting on 2n x c matrices by x |-> -xi^T x
std::vector<Matrix> sp_on_columns(std::size_t n, std::size_t c) {
	std::vector<Matrix> out;
	for (const auto& xi : sp_basis(n)) out.push_back(left_action(-xi.transpose(), c));
	return out;
}

CaseSpec build_raw(const CaseId& id) {
	Builder b;
	const auto P = [&](const char* k) { return static_cast<std::size_t>(id.param(k)); };
	switch (id.family) {
		case Family::A1: {
			const auto q = P("q"), p = P("p");
			b.summands = {q * p};
			for (auto& g : gl_on_hom_left(q, p)) b.add({g});
			for (auto& g : gl_on_hom_right(q, p)) b.add({g});
			break;
		}
		case Family::A2:
		case Family::A3: {
			const auto n = P("n");
			const int sign = id.family == Family::A2 ? 1 : -1;
			b.summands = {sign > 0 ? n * (n + 1) / 2 : n * (n - 1) / 2};
			for (const auto& e : gl_basis(n)) b.add({square_action(e, sign)});
			break;
		}
		case Family::A4: {
			b.summands = {27};
			for (auto& g : e6_basis()) b.add({g});
			b.scaling(0);
			break;
		}
		case Family::A5: {
			const auto n = P("n");
			b.summands = {n};
			for (auto& g : so_basis(split_quadratic_form(n))) b.add({g});
			b.scaling(0);
			break;
		}
		case Family::A6: {
			b.summands = {7};
			for (auto& g : g2_basis()) b.add({g});
			b.scaling(0);
			break;
		}
		case Family::A7: {
			auto s = spin_module(7);
			b.summands = {8};
			for (auto& g : s.spinor_gens) b.add({g});
			b.scaling(0);
			break;
		}
		case Family::A8:
		case Family::A9: {
			auto s = spin_module(10);
			b.summands = {16};
			std::vector<Matrix> pg, pt;
			for (std::size_t k = 0; k < s.spinor_gens.size(); ++k) {
				pg.push_back(restrict_to(s.spinor_gens[k], s.even));
				pt.push_back(s.vector_gens[k]);
			}
			if (id.family == Family::A8) {
				for (auto& g : pg) b.add({g});
			} else {
				// so_9 as the stabiliser of u = e5 + f5: pairs from e1..e4, f1..f4, e5 - f5
				std::vector<Vector> perp;
				for (std::size_t i = 0; i < 10; ++i) {
					if (i == 4 || i == 9) continue;
					Vector v(10);
					v[i] = 1;
					perp.push_back(v);
				}
				Vector w(10);
				w[4] = 1;
				w[9] = -1;
				perp.push_back(w);
				for (std::size_t a = 0; a < perp.size(); ++a)
					for (std::size_t c = a + 1; c < perp.size(); ++c)
						b.add({restrict_to(spin_generator(s, perp[a], perp[c]), s.even)});
			}
			b.scaling(0);
			auto spec = assemble(id, std::move(b));
			spec.pairing_gens = std::move(pg);
			spec.pairing_target = std::move(pt);
			return spec;
		}
		case Family::A10: {
			const auto n = P("n"), m = P("m");
			b.summands = {2 * n * m};
			for (auto& g : sp_on_columns(n, m)) b.add({g});
			for (auto& g : gl_on_hom_right(2 * n, m)) b.add({g});
			break;
		}
		case Family::B1:
		case Family::B2: {
			const auto n = P("n");
			b.summands = {n * (n - 1) / 2, n};
			for (const auto& e : gl_basis(n))
				b.add({square_action(e, -1), id.family == Family::B1 ? e : Matrix(-e.transpose())});
			b.scaling(1);
			break;
		}
		case Family::B3:
		case Family::B4: {
			const auto q = P("q"), p = P("p");
			b.summands = {q * p, p};
			for (auto& g : gl_on_hom_left(q, p)) b.add({g});
			for (const auto& e : gl_basis(p))
				b.add({-right_action(e, q), id.family == Family::B3 ? Matrix(-e.transpose()) : e});
			break;
		}
		case Family::B5: {
			const auto n = P("n");
			b.summands = {2 * n, 2 * n};
			for (const auto& xi : sp_basis(n)) b.add({xi, xi});
			b.scaling(0);
			b.scaling(1);
			break;
		}
		case Family::B6: {
			const auto n = P("n");
			b.summands = {4 * n, 2};
			for (auto& g : sp_on_columns(n, 2)) b.add({g});
			b.scaling(0);
			for (const auto& e : gl_basis(2)) b.add({-right_action(e, 2 * n), e});
			break;
		}
		case Family::B7:
		case Family::B8:
		case Family::B9: {
			const auto n = P("n"), m = P("m");
			const bool symp1 = id.family != Family::B7;
			const auto rows1 = symp1 ? 2 * n : n;
			const auto cols2 = id.family == Family::B9 ? 2 * m : m;
			b.summands = {rows1 * 2, 2 * cols2};
			if (symp1) {
				for (auto& g : sp_on_columns(n, 2)) b.add({g});
				b.scaling(0);
			} else {
				for (auto& g : gl_on_hom_left(n, 2)) b.add({g});
			}
			const auto middle = id.family == Family::B9 ? gl_basis(2) : sl2_basis();
			for (const auto& e : middle) b.add({-right_action(e, rows1), left_action(e, cols2)});
			if (id.family == Family::B9) {
				for (const auto& z : sp_basis(m)) b.add({Matrix(), -right_action(z, 2)});
				b.scaling(1);
			} else {
				for (const auto& e : gl_basis(m)) b.add({Matrix(), -right_action(e, 2)});
			}
			break;
		}
		case Family::B10: {
			auto s = spin_module(8);
			b.summands = {8, 8};
			std::vector<Matrix> pg;
			for (const auto& g : s.spinor_gens) {
				auto plus = restrict_to(g, s.even);
				auto minus = restrict_to(g, s.odd);
				b.add({plus, minus});
				pg.push_back(direct_sum(plus, minus));
			}
			b.scaling(0);
			b.scaling(1);
			auto spec = assemble(id, std::move(b));
			spec.pairing_gens = std::move(pg);
			spec.pairing_target = s.vector_gens;
			spec.pairing_blocks = {8, 8};
			return spec;
		}
	}
	return assemble(id, std::move(b));
}

}  // namespace

CaseSpec build_case(const CaseId& id) {
	validate_case(id);
	CaseSpec s = build_raw(id);
	std::vector<Matrix> noncentral;
	for (std::size_t k = 0; k < s.generators.size(); ++k)
		if (!s.central[k]) noncentral.push_back(s.generators[k]);
	s.nilpotents = root_vectors(noncentral);
	return s;
}

const CaseSpec& shared_case(const CaseId& id) {
	static std::mutex mutex;
	static std::map<std::string, std::unique_ptr<CaseSpec>> cases;
	const auto key = case_name(id);
	{
		std::lock_guard<std::mutex> lock(mutex);
		auto it = cases.find(key);
		if (it != cases.end()) return *it->second;
	}
	auto spec = std::make_unique<CaseSpec>(build_case(id));
	std::lock_guard<std::mutex> lock(mutex);
	auto [it, fresh] = cases.emplace(key, std::move(spec));
	return *it->second;
}

Matrix exp_nilpotent(const Matrix& xi, const Scalar& c) {
	const auto n = xi.rows();
	Matrix result = Matrix::identity(n);
	Matrix term = Matrix::identity(n);
	for (std::size_t k = 1; k <= n + 1; ++k) {
		term = term * xi;
		if (term.is_zero()) return result;
		term *= c / static_cast<long>(k);
		result += term;
	}
	throw InvalidArgument("matrix is not nilpotent");
}

GroupWord random_group_word(const CaseSpec& spec, Rng& rng, std::size_t steps) {
	GroupWord w;
	if (spec.nilpotents.empty()) return w;
	for (std::size_t s = 0; s < steps; ++s) {
		auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(spec.nilpotents.size()) - 1));
		std::int64_t num = 0;
		while (num == 0) num = rng.uniform(-3, 3);
		std::int64_t den = rng.uniform(1, 2);
		Scalar c(num, den);
		c.canonicalize();
		w.factors.emplace_back(pick, c);
	}
	return w;
}

Matrix word_matrix(const CaseSpec& spec, const GroupWord& w) {
	Matrix g = Matrix::identity(spec.dim);
	for (const auto& [k, c] : w.factors) g = g * exp_nilpotent(spec.nilpotents[k], c);
	return g;
}

Vector apply_word(const CaseSpec& spec, const GroupWord& w, Vector x) {
	for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
		const auto& xi = spec.nilpotents[it->first];
		Vector term = x;
		Vector out = x;
		for (std::size_t k = 1; k <= spec.dim + 1; ++k) {
			term = xi * term;
			if (is_zero(term)) break;
			term = scale(term, it->second / static_cast<long>(k));
			out = add(out, term);
		}
		x = std::move(out);
	}
	return x;
}

Matrix random_group_element(const CaseSpec& spec, Rng& rng, std::size_t steps) {
	return word_matrix(spec, random_group_word(spec, rng, steps));
}

}  // namespace orbdual
