#pragma once

#include <cstdint>
#include <vector>

#include "orbdual/classify.hpp"
#include "orbdual/poset.hpp"
#include "orbdual/repcat.hpp"

namespace orbdual {

// span of xi x over the generators
Subspace tangent(const std::vector<Matrix>& gens, const Vector& x);
Subspace tangent(const CaseSpec& spec, const Vector& x);
// covectors killing the tangent space at x
Subspace conormal(const CaseSpec& spec, const Vector& x);

std::size_t point_orbit_dim(const CaseSpec& spec, const Vector& x);
std::size_t covector_orbit_dim(const CaseSpec& spec, const Vector& y);
std::size_t orbit_dim(const CaseSpec& spec, const OrbitLabel& l);

struct EmpiricalOptions {
	std::size_t trials = 8;
	std::size_t steps = 6;
	std::int64_t height = 100;
};

struct EmpiricalDual {
	OrbitLabel label;
	std::vector<OrbitLabel> observed;  // one per trial
};

// generic covector of the conormal space at randomized points of the orbit; the maximum of
// the observed labels under the closure order, or Inconsistent if there is none
EmpiricalDual empirical_dual(const CaseSpec& spec, const OrbitPoset& poset, const OrbitLabel& l,
                             const EmpiricalOptions& opt, Rng& rng);
OrbitLabel empirical_dual(const CaseSpec& spec, const OrbitLabel& l, const EmpiricalOptions& opt, Rng& rng);

// per-label report of empirical against recorded duals and dimensions; "ok" is the overall verdict
Json verify_case(const CaseId& id, const EmpiricalOptions& opt, std::uint64_t seed);

std::vector<CaseId> verify_grid();
Json verify_all(const std::vector<CaseId>& cases, const EmpiricalOptions& opt, std::uint64_t seed);

}  // namespace orbdual
