#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "orbdual/exactlin.hpp"
#include "orbdual/json_io.hpp"
#include "orbdual/poly.hpp"

namespace orbdual {

enum class Family { A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, B1, B2, B3, B4, B5, B6, B7, B8, B9, B10 };

std::string family_name(Family f);
Family parse_family(const std::string& s);
bool is_reducible(Family f);
// parameter names in canonical order
std::vector<std::string> family_params(Family f);

struct CaseId {
	Family family = Family::A1;
	std::map<std::string, int> params;

	[[nodiscard]] int param(const std::string& name) const;
	bool operator==(const CaseId& o) const = default;
};

// "A10 n=2 m=3"
std::string case_name(const CaseId& id);
Json case_to_json(const CaseId& id);
CaseId case_from_json(const Json& j);
// accepts JSON text or the compact "A10 n=2 m=3" form; validates parameters
CaseId parse_case(const std::string& text);
void validate_case(const CaseId& id);

enum class TensorShape { SymmetricBilinear, SymmetricCubic, EquivariantPairing };

// polynomial map U -> W, one component per target coordinate (a single one for invariants)
struct InvariantTensor {
	TensorShape shape = TensorShape::SymmetricBilinear;
	std::vector<Poly> components;

	[[nodiscard]] Vector eval(const Vector& u) const;
	[[nodiscard]] bool vanishes_at(const Vector& u) const;
};

// Invariant (or equivariant, when target generators are given) polynomial maps of the
// given shape, as a canonical basis of the solution space. For a pairing with two blocks
// the monomials are bilinear in the blocks, otherwise symmetric of degree 2.
std::vector<InvariantTensor> solve_invariants(const std::vector<Matrix>& gens, TensorShape shape,
                                              const std::vector<Matrix>& target_gens = {},
                                              const std::vector<std::size_t>& blocks = {});

enum class InvariantKind { Quadric, Cubic, Pairing };

struct InvariantSlot {
	InvariantKind kind = InvariantKind::Quadric;
	bool dual = false;
	int block = -1;  // summand index, -1 for all of V
	auto operator<=>(const InvariantSlot&) const = default;
};

namespace detail {
struct InvariantCache;
}

struct CaseSpec {
	CaseId id;
	std::size_t dim = 0;
	std::vector<std::size_t> summands;  // dimensions of the irreducible summands, in order
	std::vector<Matrix> generators;     // spanning set of the Lie algebra image in gl(V)
	std::vector<bool> central;          // identity scalings of a summand
	std::vector<Matrix> nilpotents;      // root vectors, used for random group elements
	Matrix pairing;

	// auxiliary equivariant pairing: generators on V (or the listed blocks) and on the target
	std::vector<Matrix> pairing_gens;
	std::vector<Matrix> pairing_target;
	std::vector<std::size_t> pairing_blocks;

	std::shared_ptr<detail::InvariantCache> cache;

	[[nodiscard]] std::vector<Matrix> dual_generators() const;
	[[nodiscard]] std::size_t summand_offset(std::size_t k) const;
	// solved once per slot and kept for the lifetime of the spec and its copies
	[[nodiscard]] const std::vector<InvariantTensor>& invariants(const InvariantSlot& slot) const;
	// the unique tensor of a slot; throws if the solution space is not one-dimensional
	[[nodiscard]] const InvariantTensor& invariant(const InvariantSlot& slot) const;
};

CaseSpec build_case(const CaseId& id);
// process-wide shared instance
const CaseSpec& shared_case(const CaseId& id);

Matrix exp_nilpotent(const Matrix& xi, const Scalar& c);

struct GroupWord {
	std::vector<std::pair<std::size_t, Scalar>> factors;  // product of exp(c * nilpotents[k])
};

GroupWord random_group_word(const CaseSpec& spec, Rng& rng, std::size_t steps);
Matrix word_matrix(const CaseSpec& spec, const GroupWord& w);
Vector apply_word(const CaseSpec& spec, const GroupWord& w, Vector x);
Matrix random_group_element(const CaseSpec& spec, Rng& rng, std::size_t steps = 6);

}  // namespace orbdual
