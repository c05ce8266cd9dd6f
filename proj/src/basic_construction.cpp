#include "ppdim/basic_construction.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

#include "ppdim/eig.hpp"

namespace ppdim {

ComplexMatrix BasicConstruction::represent(const ComplexMatrix& x) const {
  const std::size_t v = big_basis.size();
  ComplexMatrix out(v);
  for (std::size_t j = 0; j < v; ++j) {
    ComplexMatrix xb = x * big_basis[j];
    for (std::size_t i = 0; i < v; ++i) out(i, j) = ambient_trace.inner(big_basis[i], xb);
  }
  return out;
}

BasicConstruction basic_construction(const StarSubalgebra& small, const StarSubalgebra& big,
                                     double tol) {
  if (small.ambient_dim() != big.ambient_dim())
    throw std::invalid_argument("basic_construction: ambient dimensions differ");
  if (!big.contains_algebra(small, std::max(tol, 1e-8)))
    throw std::invalid_argument("basic_construction: small is not contained in big");
  if (!big.contains_unit() || !small.contains_unit())
    throw std::invalid_argument("basic_construction: inclusions must be unital");

  BasicConstruction bc;
  bc.big_basis = big.basis();
  bc.ambient_trace = big.trace();
  const std::size_t v = bc.big_basis.size();

  std::vector<ComplexMatrix> rep_big;
  rep_big.reserve(v);
  for (const ComplexMatrix& b : bc.big_basis) rep_big.push_back(bc.represent(b));
  bc.represented_big = StarSubalgebra::from_spanning(v, rep_big, tol);

  // e1 = sum over an orthonormal basis of small of the rank-one projections
  // onto its coordinate vectors in L²(big).
  bc.jones_projection = ComplexMatrix(v);
  for (const ComplexMatrix& s : small.basis()) {
    std::vector<cplx> coord(v);
    for (std::size_t i = 0; i < v; ++i) coord[i] = bc.ambient_trace.inner(bc.big_basis[i], s);
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < v; ++j)
        bc.jones_projection(i, j) += coord[i] * std::conj(coord[j]);
  }

  std::vector<ComplexMatrix> rep_small;
  for (const ComplexMatrix& s : small.basis()) rep_small.push_back(bc.represent(s));
  bc.represented_small = StarSubalgebra::from_spanning(v, rep_small, tol);

  std::vector<ComplexMatrix> gens = rep_big;
  gens.push_back(bc.jones_projection);
  bc.tower = generate_subalgebra(gens, v, tol);

  // e1 x e1 = E_small(x) e1 on big's basis; a failure here means the input
  // was not a genuine inclusion of *-algebras.
  for (std::size_t j = 0; j < v; ++j) {
    ComplexMatrix lhs = bc.jones_projection * rep_big[j] * bc.jones_projection;
    ComplexMatrix rhs = bc.represent(small.expect(bc.big_basis[j])) * bc.jones_projection;
    if (max_abs_diff(lhs, rhs) > std::max(tol, 1e-8) * static_cast<double>(v))
      throw std::runtime_error("basic_construction: e1 x e1 != E(x) e1");
  }
  return bc;
}

MarkovTraceResult markov_trace(const InclusionData& inclusion, double tol) {
  const auto& lam = inclusion.inclusion_matrix;
  if (lam.empty() || lam[0].empty()) throw std::invalid_argument("empty inclusion matrix");
  const std::size_t rows = lam.size(), cols = lam[0].size();
  for (const auto& r : lam) {
    if (r.size() != cols) throw std::invalid_argument("ragged inclusion matrix");
    for (long long x : r)
      if (x < 0) throw std::invalid_argument("inclusion matrix entries must be nonnegative");
  }

  // Connectivity of the Bratteli diagram (bipartite graph on summands).
  std::vector<char> seen_row(rows, 0), seen_col(cols, 0);
  std::queue<std::pair<char, std::size_t>> q;
  q.push({'r', 0});
  seen_row[0] = 1;
  while (!q.empty()) {
    auto [side, idx] = q.front();
    q.pop();
    if (side == 'r') {
      for (std::size_t c = 0; c < cols; ++c)
        if (lam[idx][c] > 0 && !seen_col[c]) {
          seen_col[c] = 1;
          q.push({'c', c});
        }
    } else {
      for (std::size_t r = 0; r < rows; ++r)
        if (lam[r][idx] > 0 && !seen_row[r]) {
          seen_row[r] = 1;
          q.push({'r', r});
        }
    }
  }
  for (char s : seen_row)
    if (!s) throw std::invalid_argument("disconnected inclusion: no unique Markov trace");
  for (char s : seen_col)
    if (!s) throw std::invalid_argument("disconnected inclusion: no unique Markov trace");

  // ΛᵗΛ acts on the small-algebra side.
  ComplexMatrix ltl(cols);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < rows; ++r)
        acc += static_cast<double>(lam[r][i]) * static_cast<double>(lam[r][j]);
      ltl(i, j) = acc;
    }

  EigResult eig = hermitian_eig(ltl);
  const double modulus = eig.values.back();
  std::vector<double> t(cols);
  for (std::size_t i = 0; i < cols; ++i) t[i] = eig.vectors(i, cols - 1).real();
  double sign = 0.0;
  for (double x : t) sign += x;
  if (sign < 0)
    for (double& x : t) x = -x;
  for (double x : t)
    if (x <= 0) throw std::runtime_error("Perron vector not strictly positive");

  // Unital normalization: sum_j dim(B_j) * t_j = 1.
  std::vector<long long> dims = inclusion.small_dims;
  if (dims.empty()) dims.assign(cols, 1);
  if (dims.size() != cols) throw std::invalid_argument("small_dims length mismatch");
  double total = 0.0;
  for (std::size_t i = 0; i < cols; ++i) total += static_cast<double>(dims[i]) * t[i];
  for (double& x : t) x /= total;

  double resid = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < cols; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols; ++j) acc += ltl(i, j).real() * t[j];
    resid = std::max(resid, std::abs(acc - modulus * t[i]));
    scale = std::max(scale, std::abs(modulus * t[i]));
  }

  MarkovTraceResult out;
  out.trace_vector = std::move(t);
  out.modulus = modulus;
  out.residual = resid / std::max(scale, 1e-300);
  if (out.residual > std::max(tol, 1e-12) * 100.0)
    throw std::runtime_error("Markov eigen-equation residual too large");
  return out;
}

}  // namespace ppdim
