#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>

#include "ppdim/commuting_square.hpp"
#include "ppdim/pimsner_popa.hpp"
#include "ppdim/projection_sums.hpp"

namespace ppdim::io {

using json = nlohmann::ordered_json;

// Matrix file format: {"dim": n, "entries": [[re, im], ...]} row-major.
json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

// Subalgebra format: {"ambient_dim": n, "basis": [matrix, ...]} or one of
// the shortcuts "scalars" | "diagonal" | "full" (ambient dimension supplied
// by context).
json to_json(const StarSubalgebra& a);
StarSubalgebra subalgebra_from_json(const json& j, std::size_t ambient_dim, double tol);

// Quadruple: {"ambient_dim": n, "N": ..., "P": ..., "Q": ..., "M": ...}.
QuadrupleOfAlgebras quadruple_from_json(const json& j, double tol);

// Basis candidate: {"ambient_dim": n, "sub": ..., "ambient": ...,
//                   "elements": [matrix, ...]}.
BasisCandidate basis_from_json(const json& j, double tol);

// Projection tuple: {"dim": N, "beta": "p/q", "projections": [...]}.
json to_json(const ProjectionTuple& t);
ProjectionTuple tuple_from_json(const json& j);

json to_json(const LambdaCertificate& cert, const std::string& model);
LambdaCertificate certificate_from_json(const json& j);

json load_file(const std::string& path);

}  // namespace ppdim::io
