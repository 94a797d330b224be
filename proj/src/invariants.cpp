#include <algorithm>
#include <compare>
#include <cstdint>

#include "orbdual/repcat.hpp"
#include "orbdual/sparse.hpp"

namespace orbdual {

namespace {

struct TKey {
	Monomial m = 0;
	std::uint32_t w = 0;
	auto operator<=>(const TKey&) const = default;
};

using Row = SparseRow<TKey>;

struct GenData {
	std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;   // rows of the U action
	std::vector<std::vector<std::pair<std::size_t, Scalar>>> wcols;  // columns of the W action
	bool diagonal = true;
};

GenData prepare(const Matrix& u, const Matrix* w) {
	GenData g;
	g.rows.resize(u.rows());
	for (std::size_t i = 0; i < u.rows(); ++i)
		for (std::size_t j = 0; j < u.cols(); ++j)
			if (sgn(u(i, j)) != 0) {
				g.rows[i].emplace_back(j, u(i, j));
				if (i != j) g.diagonal = false;
			}
	if (w != nullptr) {
		g.wcols.resize(w->cols());
		for (std::size_t j = 0; j < w->cols(); ++j)
			for (std::size_t i = 0; i < w->rows(); ++i)
				if (sgn((*w)(i, j)) != 0) {
					g.wcols[j].emplace_back(i, (*w)(i, j));
					if (i != j) g.diagonal = false;
				}
	}
	return g;
}

void add_to(Row& r, const TKey& k, const Scalar& c) {
	auto [it, fresh] = r.try_emplace(k, c);
	if (fresh) return;
	it->second += c;
	if (sgn(it->second) == 0) r.erase(it);
}

// (xi . T)(u) = dT(u)(xi u) - xi_W T(u); T is invariant when this vanishes
Row act(const GenData& g, const Row& t) {
	Row out;
	for (const auto& [key, coeff] : t) {
		const auto vars = monomial_vars(key.m);
		for (std::size_t p = 0; p < vars.size(); ++p) {
			std::vector<std::size_t> rest;
			for (std::size_t q = 0; q < vars.size(); ++q)
				if (q != p) rest.push_back(vars[q]);
			for (const auto& [j, c] : g.rows[vars[p]]) {
				auto r = rest;
				r.push_back(j);
				add_to(out, TKey{monomial(r), key.w}, coeff * c);
			}
		}
		if (!g.wcols.empty())
			for (const auto& [w2, c] : g.wcols[key.w]) add_to(out, TKey{key.m, static_cast<std::uint32_t>(w2)}, -coeff * c);
	}
	return out;
}

std::vector<TKey> candidates(std::size_t n, TensorShape shape, std::size_t wdim, const std::vector<std::size_t>& blocks) {
	std::vector<TKey> keys;
	std::vector<Monomial> monos;
	if (shape == TensorShape::SymmetricCubic) {
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i; j < n; ++j)
				for (std::size_t k = j; k < n; ++k) monos.push_back(monomial({i, j, k}));
	} else if (shape == TensorShape::EquivariantPairing && blocks.size() == 2) {
		for (std::size_t i = 0; i < blocks[0]; ++i)
			for (std::size_t j = blocks[0]; j < blocks[0] + blocks[1]; ++j) monos.push_back(monomial({i, j}));
	} else {
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = i; j < n; ++j) monos.push_back(monomial({i, j}));
	}
	for (std::size_t w = 0; w < std::max<std::size_t>(wdim, 1); ++w)
		for (auto m : monos) keys.push_back(TKey{m, static_cast<std::uint32_t>(w)});
	return keys;
}

}  // namespace

std::vector<InvariantTensor> solve_invariants(const std::vector<Matrix>& gens, TensorShape shape,
                                              const std::vector<Matrix>& target_gens,
                                              const std::vector<std::size_t>& blocks) {
	if (gens.empty()) throw InvalidArgument("no generators");
	const std::size_t n = gens[0].rows();
	const bool equivariant = shape == TensorShape::EquivariantPairing;
	if (equivariant && target_gens.size() != gens.size())
		throw InvalidArgument("equivariant pairing needs one target generator per generator");
	if (!blocks.empty() && (blocks.size() != 2 || blocks[0] + blocks[1] != n))
		throw InvalidArgument("pairing blocks must split V in two");
	const std::size_t wdim = equivariant ? target_gens[0].rows() : 0;

	std::vector<GenData> data;
	for (std::size_t k = 0; k < gens.size(); ++k) data.push_back(prepare(gens[k], equivariant ? &target_gens[k] : nullptr));
	std::vector<std::size_t> order(gens.size());
	for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
	// diagonal generators cut the space down to zero weight cheaply
	std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return data[a].diagonal && !data[b].diagonal; });

	std::vector<Row> basis;
	for (const auto& k : candidates(n, shape, wdim, blocks)) basis.push_back(Row{{k, Scalar(1)}});

	for (auto gi : order) {
		SparseEliminator<TKey> elim;
		std::vector<Row> next;
		for (std::size_t j = 0; j < basis.size(); ++j) {
			auto res = elim.insert(act(data[gi], basis[j]), j);
			if (res.independent) continue;
			Row v;
			for (const auto& [t, c] : res.relation) axpy(v, c, basis[t]);
			next.push_back(std::move(v));
		}
		basis = std::move(next);
		if (basis.empty()) break;
	}

	SparseEliminator<TKey> canon;
	for (std::size_t j = 0; j < basis.size(); ++j) canon.insert(basis[j], j);
	std::vector<InvariantTensor> out;
	for (const auto& r : canon.reduced()) {
		InvariantTensor t;
		t.shape = shape;
		t.components.resize(std::max<std::size_t>(wdim, 1));
		for (const auto& [k, c] : r) t.components[k.w].add_term(k.m, c);
		out.push_back(std::move(t));
	}
	return out;
}

Vector InvariantTensor::eval(const Vector& u) const {
	Vector out;
	for (const auto& p : components) out.push_back(p.eval(u));
	return out;
}

bool InvariantTensor::vanishes_at(const Vector& u) const {
	return std::all_of(components.begin(), components.end(), [&](const Poly& p) { return sgn(p.eval(u)) == 0; });
}

}  // namespace orbdual
