#include "ppdim/json_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <stdexcept>

namespace ppdim::io {

json to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      entries.push_back({m(i, j).real(), m(i, j).imag()});
  return json{{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const auto dim = j.at("dim").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != dim * dim)
    throw std::invalid_argument("matrix json: entry count does not match dim^2");
  ComplexMatrix m(dim);
  std::size_t idx = 0;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("matrix json: entries must be [re, im] pairs");
    m.data()[idx++] = cplx(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

json to_json(const StarSubalgebra& a) {
  json basis = json::array();
  for (const ComplexMatrix& b : a.basis()) basis.push_back(to_json(b));
  return json{{"ambient_dim", a.ambient_dim()}, {"basis", std::move(basis)}};
}

StarSubalgebra subalgebra_from_json(const json& j, std::size_t ambient_dim, double tol) {
  if (j.is_string()) {
    const std::string tag = j.get<std::string>();
    if (tag == "scalars") return StarSubalgebra::scalars(ambient_dim);
    if (tag == "diagonal") return StarSubalgebra::diagonal(ambient_dim);
    if (tag == "full") return StarSubalgebra::full(ambient_dim);
    throw std::invalid_argument("unknown subalgebra shortcut: " + tag);
  }
  const auto dim = j.at("ambient_dim").get<std::size_t>();
  if (ambient_dim != 0 && dim != ambient_dim)
    throw std::invalid_argument("subalgebra json: ambient_dim mismatch");
  std::vector<ComplexMatrix> span;
  for (const auto& b : j.at("basis")) span.push_back(matrix_from_json(b));
  return StarSubalgebra::from_spanning(dim, span, tol);
}

QuadrupleOfAlgebras quadruple_from_json(const json& j, double tol) {
  const auto dim = j.at("ambient_dim").get<std::size_t>();
  QuadrupleOfAlgebras q;
  q.N = subalgebra_from_json(j.at("N"), dim, tol);
  q.P = subalgebra_from_json(j.at("P"), dim, tol);
  q.Q = subalgebra_from_json(j.at("Q"), dim, tol);
  q.M = subalgebra_from_json(j.at("M"), dim, tol);
  q.validate(tol);
  return q;
}

BasisCandidate basis_from_json(const json& j, double tol) {
  const auto dim = j.at("ambient_dim").get<std::size_t>();
  BasisCandidate b;
  b.sub = subalgebra_from_json(j.at("sub"), dim, tol);
  b.ambient = subalgebra_from_json(j.at("ambient"), dim, tol);
  for (const auto& e : j.at("elements")) b.elements.push_back(matrix_from_json(e));
  if (j.contains("density")) b.density = matrix_from_json(j.at("density"));
  return b;
}

json to_json(const ProjectionTuple& t) {
  json ps = json::array();
  for (const ComplexMatrix& p : t.projections) ps.push_back(to_json(p));
  return json{{"dim", t.dim()},
              {"beta", t.beta.str()},
              {"projections", std::move(ps)},
              {"residuals",
               {{"idempotency", t.residuals.idempotency},
                {"hermiticity", t.residuals.hermiticity},
                {"sum", t.residuals.sum}}}};
}

ProjectionTuple tuple_from_json(const json& j) {
  ProjectionTuple t;
  t.beta = Rational::parse(j.at("beta").get<std::string>());
  for (const auto& p : j.at("projections")) t.projections.push_back(matrix_from_json(p));
  t.compute_residuals();
  return t;
}

json to_json(const LambdaCertificate& cert, const std::string& model) {
  return json{{"model", model},
              {"stage", cert.stage_k},
              {"i", cert.i},
              {"alpha", cert.alpha_prime.str()},
              {"alpha_base", cert.alpha.str()},
              {"in_band", cert.in_band_spin},
              {"in_band_squared_index", cert.in_band_vertex},
              {"residuals",
               {{"idempotency", cert.base.residuals.idempotency},
                {"hermiticity", cert.base.residuals.hermiticity},
                {"sum", cert.base.residuals.sum},
                {"expectation", cert.expectation_residual}}},
              {"projections", to_json(cert.base).at("projections")},
              {"beta_base", cert.base.beta.str()},
              {"n", cert.n},
              {"tolerance", cert.tolerance},
              {"provenance", cert.provenance}};
}

LambdaCertificate certificate_from_json(const json& j) {
  LambdaCertificate cert;
  cert.n = j.at("n").get<long long>();
  cert.stage_k = j.at("stage").get<long long>();
  cert.i = j.at("i").get<long long>();
  cert.alpha = Rational::parse(j.at("alpha_base").get<std::string>());
  cert.alpha_prime = Rational::parse(j.at("alpha").get<std::string>());
  cert.in_band_spin = j.at("in_band").get<bool>();
  cert.in_band_vertex = j.at("in_band_squared_index").get<bool>();
  cert.expectation_residual = j.at("residuals").at("expectation").get<double>();
  cert.tolerance = j.at("tolerance").get<double>();
  cert.provenance = j.at("provenance").get<std::string>();
  cert.base.beta = Rational::parse(j.at("beta_base").get<std::string>());
  for (const auto& p : j.at("projections")) cert.base.projections.push_back(matrix_from_json(p));
  cert.base.compute_residuals();
  return cert;
}

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace ppdim::io
