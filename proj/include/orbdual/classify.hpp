#pragma once

#include <vector>

#include "orbdual/labels.hpp"
#include "orbdual/repcat.hpp"

namespace orbdual {

std::vector<OrbitLabel> enumerate_labels(const CaseId& id);
bool is_label_of(const CaseId& id, const OrbitLabel& l);
// text form as produced by label_name
OrbitLabel label_from_text(const CaseId& id, const std::string& text);

// Z orbit of the cell (a, b); `which` separates the two Z orbits of the B5 family (1 or 2)
ZLabel z_label_for(Family f, const Component& a, const Component& b, int which = 1);

// component orbits of summand k (0 or 1) of a reducible case, zero first
std::vector<Component> component_chain(const CaseId& id, std::size_t k);

OrbitLabel classify(const CaseSpec& spec, const Vector& v);
// label of a covector, named by the orbit of V it corresponds to under a Weyl involution
OrbitLabel classify_dual(const CaseSpec& spec, const Vector& y);

// symplectic case: covector invariants k = dim ker y~, t = dim of the radical of Omega on it
DualRankPairLabel dual_rank_pair(const CaseSpec& spec, const Vector& y);
RankPairLabel from_dual_rank_pair(const CaseSpec& spec, const DualRankPairLabel& q);

Vector representative(const CaseSpec& spec, const OrbitLabel& l);

// x(t) = sum_k coeffs[k] t^k
struct Curve {
	std::vector<Vector> coeffs;
	[[nodiscard]] Vector at(const Scalar& t) const;
};

// symplectic case: a curve through representative(from) at t = 0 lying in the orbit `to`
// for t != 0; `to` must be (r+1, s) or (r, s+2)
Curve degeneration_witness(const CaseSpec& spec, const OrbitLabel& from, const OrbitLabel& to);

// matrix views of coordinate vectors
Matrix hom_view(const Vector& v, std::size_t offset, std::size_t rows, std::size_t cols);
Matrix skew_view(const Vector& v, std::size_t offset, std::size_t n);
Matrix sym_view(const Vector& v, std::size_t offset, std::size_t n, bool halve_off_diagonal);

}  // namespace orbdual
