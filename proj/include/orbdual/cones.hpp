#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbdual/exactlin.hpp"
#include "orbdual/json_io.hpp"
#include "orbdual/poset.hpp"

namespace orbdual {

// simplicial cone on v_1..v_r with spherical roots in the dual coordinates
struct ConeSystem {
	std::size_t r = 0;
	std::vector<Vector> roots;
	std::vector<std::string> names;
};

void validate_system(const ConeSystem& s);
ConeSystem system_from_json(const Json& j);
Json system_to_json(const ConeSystem& s);

// a_0 x_0 + ... + a_{k-1} x_{k-1} < b (strict) or <= b
struct LinearConstraint {
	Vector a;
	Scalar b;
	bool strict = false;
};

// exact feasibility by Fourier-Motzkin elimination; a feasible point on success
std::optional<Vector> solve_system(std::size_t vars, const std::vector<LinearConstraint>& cs);

using Face = std::vector<std::size_t>;  // sorted indices into 0..r-1

// c_i > 0 on the face with sum c_i sigma_i <= 0 for every root; witness c on success
std::optional<Vector> valuation_witness(const ConeSystem& s, const Face& face);
bool face_meets_valuation(const ConeSystem& s, const Face& face);

// rational grid search over {c : c_i = k_i / steps, k_i >= 1, sum k_i = steps}
bool grid_meets_valuation(const ConeSystem& s, const Face& face, int steps);

struct FaceDiagram {
	std::vector<Face> faces;  // admitted faces, largest first
	std::vector<Edge> covers;  // (larger face, smaller face): orbit order
};

FaceDiagram abstract_diagram(const ConeSystem& s);
std::string face_name(const Face& f);
std::string export_dot(const FaceDiagram& d);
Json export_json(const FaceDiagram& d);

ConeSystem bundled_sp2n_gl3();
// orbit of the symplectic case with three columns attached to each admitted face of the bundled system
std::vector<std::pair<Face, RankPairLabel>> bundled_face_orbits();

// true iff f maps the diagram order onto the poset order bijectively
bool is_isomorphism(const FaceDiagram& d, const OrbitPoset& p, const std::vector<std::size_t>& f);

// basic semi-invariants f_1..f_6 on 2n x 3 matrices
Scalar semiinvariant_eval(int i, int n, const Matrix& x);
// weight of f_i on the diagonal torus, coordinates (e_1..e_n, e'_1..e'_3)
Vector semiinvariant_weight(int i, int n);
// sign relating the derivative of f along xi to the weight
inline constexpr int kWeightSign = -1;

// infinitesimal action of the Borel pair (xi, eta) on x: -xi^T x - x eta
Matrix borel_action(const Matrix& xi, const Matrix& eta, const Matrix& x);
// derivative of f_i at x along v, exact for polynomials of degree <= 4
Scalar directional_derivative(int i, int n, const Matrix& x, const Matrix& v);

bool semiinvariance_check(int i, int n, const Vector& weight, std::size_t trials, Rng& rng);

}  // namespace orbdual
