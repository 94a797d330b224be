#include "orbdual/classify.hpp"

#include <algorithm>
#include <functional>

#include "orbdual/algebras.hpp"

namespace orbdual {

Matrix hom_view(const Vector& v, std::size_t offset, std::size_t rows, std::size_t cols) {
	if (offset + rows * cols > v.size()) throw InvalidArgument("vector too short for matrix view");
	Matrix m(rows, cols);
	for (std::size_t i = 0; i < rows; ++i)
		for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[offset + i * cols + j];
	return m;
}

Matrix skew_view(const Vector& v, std::size_t offset, std::size_t n) {
	Matrix m(n, n);
	std::size_t k = offset;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j) {
			m(i, j) = v.at(k);
			m(j, i) = -v.at(k);
			++k;
		}
	return m;
}

Matrix sym_view(const Vector& v, std::size_t offset, std::size_t n, bool halve_off_diagonal) {
	Matrix m(n, n);
	std::size_t k = offset;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j) {
			Scalar x = v.at(k++);
			if (i != j && halve_off_diagonal) x /= 2;
			m(i, j) = x;
			m(j, i) = x;
		}
	return m;
}

namespace {

int P(const CaseId& id, const char* k) { return id.param(k); }

// valid (r, s) of the symplectic case with 2n rows and m columns
std::vector<Component> symplectic_pairs(int n, int m) {
	std::vector<Component> out;
	for (int r = 0; r <= std::min(2 * n, m); ++r)
		for (int s = 0; s <= r; s += 2)
			if (2 * r - s <= 2 * n) out.push_back(Component{r, s});
	return out;
}

std::vector<Component> index_chain(int top) {
	std::vector<Component> out;
	for (int i = 0; i <= top; ++i) out.push_back(Component{i, -1});
	return out;
}

int rank_i(const Matrix& m) { return static_cast<int>(rank(m)); }

Component symplectic_component(const Matrix& x) {
	const auto w = symplectic_form(x.rows() / 2);
	return Component{rank_i(x), rank_i(x.transpose() * w * x)};
}

struct Layout {
	std::size_t off0 = 0, off1 = 0;
};

Layout layout(const CaseSpec& s) { return Layout{0, s.summand_offset(1)}; }

Vector slice(const Vector& v, std::size_t off, std::size_t len) {
	return Vector(v.begin() + static_cast<std::ptrdiff_t>(off), v.begin() + static_cast<std::ptrdiff_t>(off + len));
}

// component orbit of summand k
Component classify_component(const CaseSpec& s, std::size_t k, const Vector& v, bool dual) {
	const auto& id = s.id;
	const auto off = s.summand_offset(k);
	const auto len = s.summands[k];
	const auto part = slice(v, off, len);
	if (k == 1 && id.family <= Family::B6)
		return Component{is_zero(part) ? 0 : 1, -1};
	switch (id.family) {
		case Family::B1:
		case Family::B2:
			return Component{rank_i(skew_view(part, 0, static_cast<std::size_t>(P(id, "n")))) / 2, -1};
		case Family::B3:
		case Family::B4:
			return Component{rank_i(hom_view(part, 0, static_cast<std::size_t>(P(id, "q")), static_cast<std::size_t>(P(id, "p")))), -1};
		case Family::B5:
			return Component{is_zero(part) ? 0 : 1, -1};
		case Family::B6:
		case Family::B8:
		case Family::B9:
			if (k == 0) return symplectic_component(hom_view(part, 0, 2 * static_cast<std::size_t>(P(id, "n")), 2));
			if (id.family == Family::B8) return Component{rank_i(hom_view(part, 0, 2, static_cast<std::size_t>(P(id, "m")))), -1};
			return symplectic_component(hom_view(part, 0, 2, 2 * static_cast<std::size_t>(P(id, "m"))).transpose());
		case Family::B7:
			if (k == 0) return Component{rank_i(hom_view(part, 0, static_cast<std::size_t>(P(id, "n")), 2)), -1};
			return Component{rank_i(hom_view(part, 0, 2, static_cast<std::size_t>(P(id, "m")))), -1};
		case Family::B10: {
			if (is_zero(part)) return Component{0, -1};
			const auto& q = s.invariant(InvariantSlot{InvariantKind::Quadric, dual, static_cast<int>(k)});
			return Component{q.vanishes_at(part) ? 1 : 2, -1};
		}
		default:
			throw InvalidArgument(case_name(id) + " is not reducible");
	}
}

// whether the (nonzero, nonzero) point of cell (a, b) lies on the Z stratum there;
// for B5 returns 1 for the proportional stratum, 2 for the isotropic one, 0 otherwise
int z_test(const CaseSpec& s, const Vector& v, const Component& a, const Component& b, bool dual) {
	const auto& id = s.id;
	const auto L = layout(s);
	auto x_part = slice(v, L.off0, s.summands[0]);
	auto y_part = slice(v, L.off1, s.summands[1]);
	switch (id.family) {
		case Family::B1: {
			const auto n = static_cast<std::size_t>(P(id, "n"));
			if (2 * a.r >= static_cast<int>(n)) return 0;
			auto x = skew_view(x_part, 0, n);
			std::vector<Vector> cols;
			for (std::size_t j = 0; j < n; ++j) cols.push_back(x.col(j));
			return contains(Subspace::span(n, cols), y_part) ? 1 : 0;
		}
		case Family::B2: {
			const auto n = static_cast<std::size_t>(P(id, "n"));
			if (2 * a.r >= static_cast<int>(n)) return 0;
			return is_zero(skew_view(x_part, 0, n) * y_part) ? 1 : 0;
		}
		case Family::B3: {
			const auto q = static_cast<std::size_t>(P(id, "q")), p = static_cast<std::size_t>(P(id, "p"));
			if (a.r >= static_cast<int>(p)) return 0;
			auto x = hom_view(x_part, 0, q, p);
			return contains(Subspace::row_space(x), y_part) ? 1 : 0;
		}
		case Family::B4: {
			const auto q = static_cast<std::size_t>(P(id, "q")), p = static_cast<std::size_t>(P(id, "p"));
			return is_zero(hom_view(x_part, 0, q, p) * y_part) ? 1 : 0;
		}
		case Family::B5: {
			const auto n = static_cast<std::size_t>(P(id, "n"));
			if (rank(Matrix::from_rows({x_part, y_part}, 2 * n)) == 1) return 1;
			return sgn(dot(x_part, symplectic_form(n) * y_part)) == 0 ? 2 : 0;
		}
		case Family::B6:
		case Family::B7:
		case Family::B8:
		case Family::B9: {
			const bool cell = id.family == Family::B7 || id.family == Family::B8 ? (a.r == 1 && b.r == 1)
			                  : id.family == Family::B6                          ? (a == Component{1, 0} && b.r == 1)
			                                                                     : (a == Component{1, 0} && b == Component{1, 0});
			if (!cell) return 0;
			const std::size_t rows = id.family == Family::B7 ? static_cast<std::size_t>(P(id, "n")) : 2 * static_cast<std::size_t>(P(id, "n"));
			auto x = hom_view(x_part, 0, rows, 2);
			if (id.family == Family::B6) return is_zero(x * y_part) ? 1 : 0;
			const std::size_t cols = id.family == Family::B9 ? 2 * static_cast<std::size_t>(P(id, "m")) : static_cast<std::size_t>(P(id, "m"));
			return (x * hom_view(y_part, 0, 2, cols)).is_zero() ? 1 : 0;
		}
		case Family::B10: {
			if (a.r != 1 || b.r != 1) return 0;
			return s.invariant(InvariantSlot{InvariantKind::Pairing, dual, -1}).vanishes_at(v) ? 1 : 0;
		}
		default:
			return 0;
	}
}

}  // namespace

ZLabel z_label_for(Family f, const Component& a, const Component& b, int which) {
	ZLabel z;
	z.a = a;
	z.b = b;
	if (f <= Family::B4) {
		z.kind = ZKind::Index;
		z.i = a.r;
	} else if (f == Family::B5) {
		z.kind = which == 1 ? ZKind::Sim : ZKind::Circ;
	} else {
		z.kind = ZKind::Unit;
	}
	return z;
}

namespace {

OrbitLabel classify_reducible(const CaseSpec& s, const Vector& v, bool dual) {
	const auto a = classify_component(s, 0, v, dual);
	const auto b = classify_component(s, 1, v, dual);
	if (a.is_zero() && b.is_zero()) return OriginLabel{};
	if (b.is_zero()) return Pure1Label{a};
	if (a.is_zero()) return Pure2Label{b};
	const int z = z_test(s, v, a, b, dual);
	if (z != 0) return z_label_for(s.id.family, a, b, z);
	return YLabel{a, b};
}

Vector unit(std::size_t n, std::size_t i) {
	Vector v(n);
	v[i] = 1;
	return v;
}

// symplectic representative: columns a1, b1, ..., then isotropic a's
Matrix symplectic_rep(int n, std::size_t cols, int r, int s) {
	Matrix x(2 * static_cast<std::size_t>(n), cols);
	for (int p = 0; p < s / 2; ++p) {
		x(static_cast<std::size_t>(p), static_cast<std::size_t>(2 * p)) = 1;
		x(static_cast<std::size_t>(2 * n - 1 - p), static_cast<std::size_t>(2 * p + 1)) = 1;
	}
	for (int t = 0; t < r - s; ++t) x(static_cast<std::size_t>(s / 2 + t), static_cast<std::size_t>(s + t)) = 1;
	return x;
}

Matrix rank_rep(std::size_t rows, std::size_t cols, int r) {
	Matrix x(rows, cols);
	for (int k = 0; k < r; ++k) x(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = 1;
	return x;
}

Vector flatten(const Matrix& m) { return m.entries(); }

Vector skew_rep(std::size_t n, int i) {
	Vector v(n * (n - 1) / 2);
	std::size_t k = 0;
	for (std::size_t a = 0; a < n; ++a)
		for (std::size_t b = a + 1; b < n; ++b) {
			if (a % 2 == 0 && b == a + 1 && static_cast<int>(a / 2) < i) v[k] = 1;
			++k;
		}
	return v;
}

Vector concat(const Vector& a, const Vector& b) {
	Vector c(a);
	c.insert(c.end(), b.begin(), b.end());
	return c;
}

// deterministic candidates: basis vectors, then sums and differences of two, then of three
Vector search(std::size_t n, const std::function<bool(const Vector&)>& ok) {
	for (std::size_t i = 0; i < n; ++i)
		if (auto v = unit(n, i); ok(v)) return v;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (int sgn_j : {1, -1}) {
				auto v = unit(n, i);
				v[j] = sgn_j;
				if (ok(v)) return v;
			}
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i + 1; j < n; ++j)
			for (std::size_t k = j + 1; k < n; ++k)
				for (int sj : {1, -1})
					for (int sk : {1, -1}) {
						auto v = unit(n, i);
						v[j] = sj;
						v[k] = sk;
						if (ok(v)) return v;
					}
	throw Inconsistent("no representative found among small candidates");
}

Vector component_rep(const CaseSpec& s, std::size_t k, const Component& c) {
	const auto& id = s.id;
	const auto len = s.summands[k];
	if (c.is_zero()) return Vector(len);
	if ((k == 1 && id.family <= Family::B6) || id.family == Family::B5) return unit(len, 0);
	switch (id.family) {
		case Family::B1:
		case Family::B2:
			return skew_rep(static_cast<std::size_t>(P(id, "n")), c.r);
		case Family::B3:
		case Family::B4:
			return flatten(rank_rep(static_cast<std::size_t>(P(id, "q")), static_cast<std::size_t>(P(id, "p")), c.r));
		case Family::B6:
		case Family::B8:
		case Family::B9:
			if (k == 0) return flatten(symplectic_rep(P(id, "n"), 2, c.r, c.s));
			if (id.family == Family::B8) return flatten(rank_rep(2, static_cast<std::size_t>(P(id, "m")), c.r));
			return flatten(symplectic_rep(P(id, "m"), 2, c.r, c.s).transpose());
		case Family::B7:
			if (k == 0) return flatten(rank_rep(static_cast<std::size_t>(P(id, "n")), 2, c.r));
			return flatten(rank_rep(2, static_cast<std::size_t>(P(id, "m")), c.r));
		case Family::B10:
			return search(len, [&](const Vector& v) {
				Vector full(s.dim);
				std::copy(v.begin(), v.end(), full.begin() + static_cast<std::ptrdiff_t>(s.summand_offset(k)));
				return classify_component(s, k, full, false) == c;
			});
		default:
			throw InvalidArgument("no component representative");
	}
}

Vector reducible_rep(const CaseSpec& s, const OrbitLabel& l) {
	const auto [a, b] = components_of(l);
	const auto& id = s.id;
	Vector x = component_rep(s, 0, a);
	Vector y = component_rep(s, 1, b);
	const bool is_z = std::holds_alternative<ZLabel>(l);
	if (!a.is_zero() && !b.is_zero()) {
		const auto ylen = s.summands[1];
		switch (id.family) {
			case Family::B1: {
				const auto n = static_cast<std::size_t>(P(id, "n"));
				y = unit(ylen, is_z ? 0 : n - 1);
				break;
			}
			case Family::B2: {
				const auto n = static_cast<std::size_t>(P(id, "n"));
				y = unit(ylen, is_z ? n - 1 : 0);
				break;
			}
			case Family::B3:
			case Family::B4: {
				const auto p = static_cast<std::size_t>(P(id, "p"));
				const bool last = (id.family == Family::B3) != is_z;
				y = unit(ylen, last ? p - 1 : 0);
				break;
			}
			case Family::B5: {
				const auto n = static_cast<std::size_t>(P(id, "n"));
				if (is_z && std::get<ZLabel>(l).kind == ZKind::Sim) y = unit(ylen, 0);
				else if (is_z) y = unit(ylen, 1);
				else y = unit(ylen, 2 * n - 1);
				break;
			}
			case Family::B6:
				if (a == Component{1, 0}) y = unit(ylen, is_z ? 1 : 0);
				break;
			case Family::B7:
			case Family::B8:
			case Family::B9:
				if (is_z) {
					// x uses column 0 only; put y in row 1
					const std::size_t cols = ylen / 2;
					y = Vector(ylen);
					y[cols] = 1;
				}
				break;
			case Family::B10: {
				// search pairs of component representatives
				auto xs = std::vector<Vector>{};
				auto ys = std::vector<Vector>{};
				const auto n0 = s.summands[0];
				for (std::size_t i = 0; i < n0; ++i) {
					auto u = unit(n0, i);
					if (classify_component(s, 0, concat(u, Vector(ylen)), false) == a) xs.push_back(u);
				}
				for (std::size_t j = 0; j < ylen; ++j) {
					auto w = unit(ylen, j);
					if (classify_component(s, 1, concat(Vector(n0), w), false) == b) ys.push_back(w);
				}
				for (const auto& u : xs)
					for (const auto& w : ys)
						if (classify_reducible(s, concat(u, w), false) == l) return concat(u, w);
				break;
			}
			default:
				break;
		}
	}
	Vector v = concat(x, y);
	if (classify_reducible(s, v, false) != l) {
		v = search(s.dim, [&](const Vector& c) { return classify_reducible(s, c, false) == l; });
	}
	return v;
}

}  // namespace

std::vector<Component> component_chain(const CaseId& id, std::size_t k) {
	if (!is_reducible(id.family)) throw InvalidArgument(case_name(id) + " is not reducible");
	switch (id.family) {
		case Family::B1:
		case Family::B2:
			return k == 0 ? index_chain(P(id, "n") / 2) : index_chain(1);
		case Family::B3:
		case Family::B4:
			return k == 0 ? index_chain(std::min(P(id, "p"), P(id, "q"))) : index_chain(1);
		case Family::B5:
			return index_chain(1);
		case Family::B6:
			return k == 0 ? symplectic_pairs(P(id, "n"), 2) : index_chain(1);
		case Family::B7:
			return k == 0 ? index_chain(std::min(P(id, "n"), 2)) : index_chain(std::min(P(id, "m"), 2));
		case Family::B8:
			return k == 0 ? symplectic_pairs(P(id, "n"), 2) : index_chain(std::min(P(id, "m"), 2));
		case Family::B9:
			return k == 0 ? symplectic_pairs(P(id, "n"), 2) : symplectic_pairs(P(id, "m"), 2);
		case Family::B10:
			return index_chain(2);
		default:
			return {};
	}
}

std::vector<OrbitLabel> enumerate_labels(const CaseId& id) {
	validate_case(id);
	std::vector<OrbitLabel> out;
	auto indices = [&](int top) {
		for (int i = 0; i <= top; ++i) out.push_back(IndexLabel{i});
	};
	switch (id.family) {
		case Family::A1:
			indices(std::min(P(id, "p"), P(id, "q")));
			return out;
		case Family::A2:
			indices(P(id, "n"));
			return out;
		case Family::A3:
			indices(P(id, "n") / 2);
			return out;
		case Family::A4:
		case Family::A9:
			indices(3);
			return out;
		case Family::A5:
		case Family::A6:
		case Family::A7:
		case Family::A8:
			indices(2);
			return out;
		case Family::A10:
			for (const auto& c : symplectic_pairs(P(id, "n"), P(id, "m"))) out.push_back(RankPairLabel{c.r, c.s});
			return out;
		default:
			break;
	}
	const auto c0 = component_chain(id, 0);
	const auto c1 = component_chain(id, 1);
	out.push_back(OriginLabel{});
	for (std::size_t i = 1; i < c0.size(); ++i) out.push_back(Pure1Label{c0[i]});
	for (std::size_t j = 1; j < c1.size(); ++j) out.push_back(Pure2Label{c1[j]});
	for (std::size_t i = 1; i < c0.size(); ++i)
		for (std::size_t j = 1; j < c1.size(); ++j) {
			const auto& a = c0[i];
			const auto& b = c1[j];
			switch (id.family) {
				case Family::B1:
				case Family::B2:
					if (2 * a.r < P(id, "n")) out.push_back(z_label_for(id.family, a, b, 1));
					break;
				case Family::B3:
				case Family::B4:
					if (a.r < P(id, "p")) out.push_back(z_label_for(id.family, a, b, 1));
					break;
				case Family::B5:
					out.push_back(z_label_for(id.family, a, b, 1));
					out.push_back(z_label_for(id.family, a, b, 2));
					break;
				case Family::B6:
				case Family::B8:
					if (a == Component{1, 0} && b.r == 1) out.push_back(z_label_for(id.family, a, b, 1));
					break;
				case Family::B7:
				case Family::B10:
					if (a.r == 1 && b.r == 1) out.push_back(z_label_for(id.family, a, b, 1));
					break;
				case Family::B9:
					if (a == Component{1, 0} && b == Component{1, 0}) out.push_back(z_label_for(id.family, a, b, 1));
					break;
				default:
					break;
			}
			out.push_back(YLabel{a, b});
		}
	return out;
}

bool is_label_of(const CaseId& id, const OrbitLabel& l) {
	const auto all = enumerate_labels(id);
	return std::find(all.begin(), all.end(), l) != all.end();
}

OrbitLabel label_from_text(const CaseId& id, const std::string& text) {
	for (const auto& l : enumerate_labels(id))
		if (label_name(l) == text) return l;
	throw InvalidArgument("no orbit '" + text + "' in " + case_name(id));
}

namespace {

OrbitLabel classify_impl(const CaseSpec& s, const Vector& v, bool dual) {
	if (v.size() != s.dim)
		throw InvalidArgument("vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(s.dim));
	const auto& id = s.id;
	if (is_reducible(id.family)) return classify_reducible(s, v, dual);
	if (is_zero(v)) return id.family == Family::A10 ? OrbitLabel{RankPairLabel{0, 0}} : OrbitLabel{IndexLabel{0}};
	switch (id.family) {
		case Family::A1:
			return IndexLabel{rank_i(hom_view(v, 0, static_cast<std::size_t>(P(id, "q")), static_cast<std::size_t>(P(id, "p"))))};
		case Family::A2:
			return IndexLabel{rank_i(sym_view(v, 0, static_cast<std::size_t>(P(id, "n")), dual))};
		case Family::A3:
			return IndexLabel{rank_i(skew_view(v, 0, static_cast<std::size_t>(P(id, "n")))) / 2};
		case Family::A4: {
			if (!dual) {
				const auto& j = jordan_h3o();
				if (sgn(j.det.eval(v)) != 0) return IndexLabel{3};
				return IndexLabel{is_zero(j.sharp(v)) ? 1 : 2};
			}
			const auto& cubic = s.invariant(InvariantSlot{InvariantKind::Cubic, true, -1}).components[0];
			if (sgn(cubic.eval(v)) != 0) return IndexLabel{3};
			return IndexLabel{is_zero(cubic.gradient(v)) ? 1 : 2};
		}
		case Family::A5:
		case Family::A6:
		case Family::A7: {
			const auto& q = s.invariant(InvariantSlot{InvariantKind::Quadric, dual, -1});
			return IndexLabel{q.vanishes_at(v) ? 1 : 2};
		}
		case Family::A8:
		case Family::A9: {
			const auto& pure = s.invariant(InvariantSlot{InvariantKind::Pairing, dual, -1});
			if (pure.vanishes_at(v)) return IndexLabel{1};
			if (id.family == Family::A8) return IndexLabel{2};
			const auto& q = s.invariant(InvariantSlot{InvariantKind::Quadric, dual, -1});
			return IndexLabel{q.vanishes_at(v) ? 2 : 3};
		}
		case Family::A10: {
			if (dual) return from_dual_rank_pair(s, dual_rank_pair(s, v));
			auto c = symplectic_component(hom_view(v, 0, 2 * static_cast<std::size_t>(P(id, "n")), static_cast<std::size_t>(P(id, "m"))));
			return RankPairLabel{c.r, c.s};
		}
		default:
			throw InvalidArgument("unhandled case");
	}
}

}  // namespace

OrbitLabel classify(const CaseSpec& spec, const Vector& v) { return classify_impl(spec, v, false); }

OrbitLabel classify_dual(const CaseSpec& spec, const Vector& y) { return classify_impl(spec, y, true); }

DualRankPairLabel dual_rank_pair(const CaseSpec& spec, const Vector& y) {
	if (spec.id.family != Family::A10) throw InvalidArgument("dual rank pair needs the symplectic case");
	const auto n = static_cast<std::size_t>(P(spec.id, "n")), m = static_cast<std::size_t>(P(spec.id, "m"));
	if (y.size() != spec.dim) throw InvalidArgument("covector has the wrong length");
	// y~ : C^2n -> C^m is the transpose of the coordinate matrix
	const Matrix yt = hom_view(y, 0, 2 * n, m).transpose();
	const auto ker = kernel(yt);
	const int k = static_cast<int>(ker.dim());
	int t = 0;
	if (k > 0) {
		const Matrix b = ker.basis();
		const Matrix gram = b * symplectic_form(n) * b.transpose();
		t = k - static_cast<int>(rank(gram));
	}
	return DualRankPairLabel{k, t};
}

RankPairLabel from_dual_rank_pair(const CaseSpec& spec, const DualRankPairLabel& q) {
	const int n = P(spec.id, "n");
	return RankPairLabel{2 * n - q.k, 2 * n - q.k - q.t};
}

Vector Curve::at(const Scalar& t) const {
	Vector out(coeffs.at(0).size());
	Scalar power = 1;
	for (const auto& c : coeffs) {
		out = add(out, scale(c, power));
		power *= t;
	}
	return out;
}

Vector representative(const CaseSpec& spec, const OrbitLabel& l) {
	const auto& id = spec.id;
	if (!is_label_of(id, l)) throw InvalidArgument("label " + label_name(l) + " is not an orbit of " + case_name(id));
	if (is_reducible(id.family)) return reducible_rep(spec, l);
	if (auto rp = std::get_if<RankPairLabel>(&l))
		return flatten(symplectic_rep(P(id, "n"), static_cast<std::size_t>(P(id, "m")), rp->r, rp->s));
	const int i = std::get<IndexLabel>(l).i;
	if (i == 0) return Vector(spec.dim);
	switch (id.family) {
		case Family::A1:
			return flatten(rank_rep(static_cast<std::size_t>(P(id, "q")), static_cast<std::size_t>(P(id, "p")), i));
		case Family::A2: {
			const auto n = static_cast<std::size_t>(P(id, "n"));
			Vector v(spec.dim);
			std::size_t k = 0;
			for (std::size_t a = 0; a < n; ++a)
				for (std::size_t b = a; b < n; ++b, ++k)
					if (a == b && static_cast<int>(a) < i) v[k] = 1;
			return v;
		}
		case Family::A3:
			return skew_rep(static_cast<std::size_t>(P(id, "n")), i);
		case Family::A4: {
			Vector v(27);
			for (int k = 0; k < i; ++k) v[static_cast<std::size_t>(k)] = 1;
			return v;
		}
		case Family::A9:
			if (i == 2) {
				// a + t b is null for the invariant form when b is pure and <a, b> != 0
				const auto& q = spec.invariant(InvariantSlot{InvariantKind::Quadric, false, -1}).components[0];
				auto form = [&](const Vector& x, const Vector& y) -> Scalar { return (q.eval(add(x, y)) - q.eval(x) - q.eval(y)) / 2; };
				std::vector<Vector> pure;
				for (std::size_t c = 0; c < spec.dim; ++c)
					for (const auto& nil : spec.nilpotents) pure.push_back(exp_nilpotent(nil, 1) * unit(spec.dim, c));
				for (std::size_t a = 0; a < spec.dim; ++a)
					for (std::size_t d = a + 1; d < spec.dim; ++d) {
						const auto x = add(unit(spec.dim, a), unit(spec.dim, d));
						const Scalar qx = q.eval(x);
						if (sgn(qx) == 0) continue;
						for (const auto& b : pure) {
							const Scalar ab = form(x, b);
							if (sgn(ab) == 0) continue;
							auto cand = add(x, scale(b, -qx / (2 * ab)));
							if (classify(spec, cand) == l) return cand;
						}
					}
				throw Inconsistent("no representative for A9 O2");
			}
			[[fallthrough]];
		default:
			return search(spec.dim, [&](const Vector& v) { return classify(spec, v) == l; });
	}
}

Curve degeneration_witness(const CaseSpec& spec, const OrbitLabel& from, const OrbitLabel& to) {
	if (spec.id.family != Family::A10) throw InvalidArgument("degeneration witnesses are built for the symplectic case");
	if (!is_label_of(spec.id, from) || !is_label_of(spec.id, to)) throw InvalidArgument("unknown orbit label");
	const auto f = std::get<RankPairLabel>(from);
	const auto t = std::get<RankPairLabel>(to);
	const int n = P(spec.id, "n");
	const auto m = static_cast<std::size_t>(P(spec.id, "m"));
	const auto rows = 2 * static_cast<std::size_t>(n);
	const Matrix x = symplectic_rep(n, m, f.r, f.s);
	Matrix c1(rows, m), c2(rows, m);
	const auto a = [&](int k) { return static_cast<std::size_t>(k - 1); };   // a_k
	const auto b = [&](int k) { return rows - static_cast<std::size_t>(k); };  // b_k
	if (t.r == f.r + 1 && t.s == f.s) {
		// send a kernel vector to a free isotropic direction
		c1(a(f.s / 2 + f.r - f.s + 1), static_cast<std::size_t>(f.r)) = 1;
	} else if (t.r == f.r && t.s == f.s + 2) {
		// u1 -> l1 + t l2 + t^2 l2' + t l1',  u2 -> l2 + t l2' + t^2 l1'
		const int h = f.s / 2;
		const auto u1 = static_cast<std::size_t>(f.s), u2 = u1 + 1;
		c1(a(h + 2), u1) = 1;
		c1(b(h + 1), u1) = 1;
		c2(b(h + 2), u1) = 1;
		c1(b(h + 2), u2) = 1;
		c2(b(h + 1), u2) = 1;
	} else {
		throw InvalidArgument(label_name(to) + " is not an immediate cover of " + label_name(from));
	}
	return Curve{{flatten(x), flatten(c1), flatten(c2)}};
}

}  // namespace orbdual
