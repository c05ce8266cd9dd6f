// ppdim: verification and construction CLI for finite-dimensional inclusion
// grids and relative-dimension certificates. Every subcommand prints a JSON
// report; exit code 0 = pass, 1 = verification failure, 2 = usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "ppdim/basic_construction.hpp"
#include "ppdim/commuting_square.hpp"
#include "ppdim/config.hpp"
#include "ppdim/hadamard.hpp"
#include "ppdim/json_io.hpp"
#include "ppdim/lambda_sets.hpp"
#include "ppdim/pimsner_popa.hpp"
#include "ppdim/projection_sums.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ppdim;

struct GlobalOpts {
  std::string out_path;
};

void emit(const GlobalOpts& g, const json& report) {
  if (g.out_path.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(g.out_path);
    if (!out) throw std::invalid_argument("cannot write: " + g.out_path);
    out << report.dump(2) << "\n";
  }
}

// "spin:6" / "vertex:3" / "unitary-onb:5"
struct Model {
  std::string kind;
  long long n = 0;
};

Model parse_model(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("model must look like spin:6");
  Model m;
  m.kind = s.substr(0, colon);
  m.n = std::stoll(s.substr(colon + 1));
  if (m.kind != "spin" && m.kind != "vertex" && m.kind != "unitary-onb")
    throw std::invalid_argument("unknown model kind: " + m.kind);
  return m;
}

Rational model_index(const Model& m) {
  return m.kind == "vertex" ? Rational(m.n) * Rational(m.n) : Rational(m.n);
}

// "1..10" or "7"
std::pair<long long, long long> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    long long v = std::stoll(s);
    return {v, v};
  }
  return {std::stoll(s.substr(0, dots)), std::stoll(s.substr(dots + 2))};
}

json family_to_json(const LambdaFamilyElement& e) {
  json j{{"value", e.value.str()},
         {"family", e.family},
         {"provenance", e.provenance},
         {"in_band", e.in_band}};
  json notes = json::array();
  for (const auto& n : e.notes) notes.push_back(n);
  if (!e.covered) notes.push_back("parameter outside the construction's proven range");
  j["notes"] = std::move(notes);
  return j;
}

std::vector<LambdaFamilyElement> families_for(const Model& m) {
  if (m.kind == "spin") return known_families(SpinModel{m.n});
  if (m.kind == "vertex") return known_families(VertexModel{m.n});
  return known_families(UnitaryOnbModel{m.n});
}

int run(int argc, char** argv) {
  CLI::App app{"finite-dimensional inclusion grids, Pimsner-Popa bases and "
               "relative-dimension certificates"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--tol", config().tolerance, "verification tolerance")->capture_default_str();
  app.add_option("--cap", config().dimension_cap, "dimension cap")->capture_default_str();
  app.add_option("--seed", config().seed, "random seed")->capture_default_str();
  app.add_option("--out", g.out_path, "write the JSON report to this file");

  // verify-hadamard <file>
  std::string vh_file;
  auto* vh = app.add_subcommand("verify-hadamard", "check |u_ij| = 1 and u u* = n 1");
  vh->add_option("file", vh_file)->required();

  // verify-biunitary <file> --n --k
  std::string vb_file;
  std::size_t vb_n = 0, vb_k = 0;
  auto* vb = app.add_subcommand("verify-biunitary",
                                "check unitarity of a matrix and its block transpose");
  vb->add_option("file", vb_file)->required();
  vb->add_option("--n", vb_n)->required();
  vb->add_option("--k", vb_k)->required();

  // spin-square <file>
  std::string ss_file;
  auto* ss = app.add_subcommand("spin-square",
                                "build (C in Delta_n, u Delta_n u* in M_n) and check it");
  ss->add_option("file", ss_file)->required();

  // spin-tower <file> --stages K
  std::string st_file;
  std::size_t st_stages = 0;
  auto* st = app.add_subcommand("spin-tower", "build the stage unitaries and verify unitarity");
  st->add_option("file", st_file)->required();
  st->add_option("--stages", st_stages)->required();

  // check-square <quadruple.json>
  std::string cs_file;
  auto* cs = app.add_subcommand("check-square", "commuting-square and non-degeneracy tests");
  cs->add_option("file", cs_file)->required();

  // verify-basis <basis.json>
  std::string vbs_file;
  auto* vbs = app.add_subcommand("verify-basis", "Pimsner-Popa basis flags with residuals");
  vbs->add_option("file", vbs_file)->required();

  // mu-construct <basis.json>
  std::string mu_file;
  auto* mu = app.add_subcommand("mu-construct",
                                "unitary basis of the tower from a two-sided basis");
  mu->add_option("file", mu_file)->required();

  // dob <basis.json>
  std::string dob_file;
  auto* dob = app.add_subcommand("dob", "operator norm of sum m_j* m_j for a verified basis");
  dob->add_option("file", dob_file)->required();

  // lambda-enumerate --model spin:6 [--families all] [--json out]
  std::string le_model, le_families = "all", le_json;
  auto* le = app.add_subcommand("lambda-enumerate", "exact relative-dimension families");
  le->add_option("--model", le_model)->required();
  le->add_option("--families", le_families, "all or comma-separated family tags");
  le->add_option("--json", le_json, "alias for --out");

  // band --index 6 --alpha 1/4
  std::string bd_index, bd_alpha;
  auto* bd = app.add_subcommand("band", "exact band test alpha(1-alpha) > 1/index");
  bd->add_option("--index", bd_index)->required();
  bd->add_option("--alpha", bd_alpha)->required();

  // zeta --n 3 --i 0 --m 1..10 --k 0..10
  long long zt_n = 0, zt_i = 0;
  std::string zt_m = "1..10", zt_k = "0..10";
  auto* zt = app.add_subcommand("zeta", "recursive orbit matrix with distinctness check");
  zt->add_option("--n", zt_n)->required();
  zt->add_option("--i", zt_i)->required();
  zt->add_option("--m", zt_m);
  zt->add_option("--k", zt_k);

  // solve-projections --r 4 --beta 7/4 --dim 16 [--seed]
  long long sp_r = 0, sp_dim = 0;
  std::string sp_beta;
  std::optional<int> sp_restarts;
  auto* sp = app.add_subcommand("solve-projections", "find r projections summing to beta 1");
  sp->add_option("--r", sp_r)->required();
  sp->add_option("--beta", sp_beta)->required();
  sp->add_option("--dim", sp_dim)->required();
  sp->add_option("--restarts", sp_restarts);

  // certify --model spin:6 --stage 1 --i 0 --base tuple.json
  std::string cf_model, cf_base;
  long long cf_stage = 0, cf_i = 0;
  auto* cf = app.add_subcommand("certify", "lift a base tuple to a lambda certificate");
  cf->add_option("--model", cf_model)->required();
  cf->add_option("--stage", cf_stage)->required();
  cf->add_option("--i", cf_i)->required();
  cf->add_option("--base", cf_base)->required();

  // recheck-certificate <file>
  std::string rc_file;
  auto* rc = app.add_subcommand("recheck-certificate", "revalidate a stored certificate");
  rc->add_option("file", rc_file)->required();

  // plot-data --model spin:6 [--gamma-m 8] [--zeta-k 6]
  std::string pd_model;
  long long pd_gamma_m = 8, pd_zeta_k = 6;
  auto* pd = app.add_subcommand("plot-data", "family values plus band edges for plotting");
  pd->add_option("--model", pd_model)->required();
  pd->add_option("--gamma-m", pd_gamma_m, "gamma depth for even-index models");
  pd->add_option("--zeta-k", pd_zeta_k, "orbit depth per gamma seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version are not errors
  }
  const double tol = config().tolerance;

  if (*vh) {
    auto m = io::matrix_from_json(io::load_file(vh_file));
    auto rep = verify_hadamard(m, tol);
    emit(g, json{{"check", "verify-hadamard"},
                 {"residuals",
                  {{"unimodularity", rep.unimodularity_residual},
                   {"gram", rep.gram_residual}}},
                 {"pass", rep.pass}});
    return rep.pass ? 0 : 1;
  }

  if (*vb) {
    auto m = io::matrix_from_json(io::load_file(vb_file));
    auto rep = verify_biunitary(m, vb_n, vb_k, tol);
    emit(g, json{{"check", "verify-biunitary"},
                 {"residuals",
                  {{"unitarity", rep.unitarity_residual},
                   {"block_transpose_unitarity", rep.block_transpose_residual}}},
                 {"pass", rep.pass}});
    return rep.pass ? 0 : 1;
  }

  if (*ss) {
    auto m = io::matrix_from_json(io::load_file(ss_file));
    auto had = HadamardMatrix{m.dim(), m};
    auto q = spin_square(had, tol);
    auto square = is_commuting_square(q, tol);
    auto nondeg = is_nondegenerate(q, tol);
    const bool pass = square.commuting && nondeg.nondegenerate;
    emit(g, json{{"check", "spin-square"},
                 {"residuals",
                  {{"e_p_e_q_vs_e_n", square.residual_pq},
                   {"e_q_e_p_vs_e_n", square.residual_qp}}},
                 {"commuting", square.commuting},
                 {"nondegenerate", nondeg.nondegenerate},
                 {"span_dim", nondeg.span_dim},
                 {"pass", pass}});
    return pass ? 0 : 1;
  }

  if (*st) {
    auto m = io::matrix_from_json(io::load_file(st_file));
    auto had = HadamardMatrix{m.dim(), m};
    auto tower = spin_tower(had, st_stages, tol, config().dimension_cap);
    const double worst = tower.worst_unitarity_residual();
    json dims = json::array();
    for (const auto& s : tower.stages) dims.push_back(s.dim());
    const bool pass = worst < tol;
    emit(g, json{{"check", "spin-tower"},
                 {"stages", st_stages},
                 {"stage_dims", std::move(dims)},
                 {"residuals", {{"worst_unitarity", worst}}},
                 {"pass", pass}});
    return pass ? 0 : 1;
  }

  if (*cs) {
    auto q = io::quadruple_from_json(io::load_file(cs_file), tol);
    auto square = is_commuting_square(q, tol);
    auto nondeg = is_nondegenerate(q, tol);
    emit(g, json{{"check", "check-square"},
                 {"commuting", square.commuting},
                 {"nondegenerate", nondeg.nondegenerate},
                 {"residuals",
                  {{"e_p_e_q_vs_e_n", square.residual_pq},
                   {"e_q_e_p_vs_e_n", square.residual_qp}}},
                 {"span_dim", nondeg.span_dim},
                 {"required_dim", nondeg.required_dim},
                 {"pass", square.commuting && nondeg.nondegenerate}});
    return (square.commuting && nondeg.nondegenerate) ? 0 : 1;
  }

  if (*vbs) {
    auto b = io::basis_from_json(io::load_file(vbs_file), tol);
    auto rep = verify_basis(b, tol);
    auto flag = [](const FlagReport& f) {
      return json{{"residual", f.residual}, {"pass", f.pass}};
    };
    emit(g, json{{"check", "verify-basis"},
                 {"right_complete", flag(rep.right_complete)},
                 {"left_complete", flag(rep.left_complete)},
                 {"right_orthonormal", flag(rep.right_orthonormal)},
                 {"left_orthonormal", flag(rep.left_orthonormal)},
                 {"unitary", flag(rep.unitary)},
                 {"two_sided", rep.two_sided},
                 {"pass", rep.right_complete.pass && rep.right_orthonormal.pass}});
    return (rep.right_complete.pass && rep.right_orthonormal.pass) ? 0 : 1;
  }

  if (*mu) {
    auto b = io::basis_from_json(io::load_file(mu_file), tol);
    auto bc = basic_construction(b.sub, b.ambient, tol);
    MuReport rep;
    auto mus = mu_unitaries(b, bc, tol, &rep);
    json mus_json = json::array();
    for (const auto& u : mus) mus_json.push_back(io::to_json(u));
    const bool pass = rep.unitarity_residual < tol && rep.orthonormality_residual < tol;
    emit(g, json{{"check", "mu-construct"},
                 {"count", mus.size()},
                 {"residuals",
                  {{"sum_identity", rep.sum_identity_residual},
                   {"unitarity", rep.unitarity_residual},
                   {"orthonormality", rep.orthonormality_residual},
                   {"pair_identity", rep.pair_identity_residual}}},
                 {"mu", std::move(mus_json)},
                 {"pass", pass}});
    return pass ? 0 : 1;
  }

  if (*dob) {
    auto b = io::basis_from_json(io::load_file(dob_file), tol);
    const double value = d_ob_value(b, tol);
    emit(g, json{{"check", "dob"}, {"value", value}, {"pass", true}});
    return 0;
  }

  if (*le) {
    auto model = parse_model(le_model);
    auto fams = families_for(model);
    json elems = json::array();
    for (const auto& e : fams) {
      if (le_families != "all" && le_families.find(e.family) == std::string::npos) continue;
      elems.push_back(family_to_json(e));
    }
    if (!le_json.empty()) g.out_path = le_json;
    emit(g, json{{"check", "lambda-enumerate"},
                 {"model", le_model},
                 {"index", model_index(model).str()},
                 {"elements", std::move(elems)},
                 {"pass", true}});
    return 0;
  }

  if (*bd) {
    const Rational index = Rational::parse(bd_index);
    const Rational alpha = Rational::parse(bd_alpha);
    const bool in = band_contains(index, alpha);
    emit(g, json{{"check", "band"},
                 {"index", index.str()},
                 {"alpha", alpha.str()},
                 {"in_band", in}});
    return 0;
  }

  if (*zt) {
    auto [mlo, mhi] = parse_range(zt_m);
    auto [klo, khi] = parse_range(zt_k);
    auto zm = zeta_matrix(zt_n, zt_i, mlo, mhi, khi);
    json rows = json::array();
    for (const auto& row : zm.rows) {
      json r = json::array();
      for (long long k = klo; k <= khi; ++k) r.push_back(row[static_cast<std::size_t>(k)].str());
      rows.push_back(std::move(r));
    }
    emit(g, json{{"check", "zeta"},
                 {"n", zt_n},
                 {"i", zt_i},
                 {"m", zt_m},
                 {"k", zt_k},
                 {"rows", std::move(rows)},
                 {"pairwise_distinct", zm.pairwise_distinct},
                 {"pass", zm.pairwise_distinct}});
    return zm.pairwise_distinct ? 0 : 1;
  }

  if (*sp) {
    SolveOptions opts;
    opts.seed = config().seed;
    if (sp_restarts) opts.restarts = *sp_restarts;
    const Rational beta = Rational::parse(sp_beta);
    auto exact = exact_construct(sp_r, beta, sp_dim);
    ProjectionTuple t = exact ? *exact : solve_sum(sp_r, beta, sp_dim, opts);
    json j = io::to_json(t);
    j["check"] = "solve-projections";
    j["method"] = exact ? "exact" : "solver";
    j["pass"] = t.valid(std::max(tol, opts.solver_tolerance));
    emit(g, j);
    return j["pass"].get<bool>() ? 0 : 1;
  }

  if (*cf) {
    auto model = parse_model(cf_model);
    if (model.n % 2 != 0)
      throw std::invalid_argument("certify: model index must be even (2n)");
    auto base = io::tuple_from_json(io::load_file(cf_base));
    auto cert = certify_lambda_element(model.n / 2, cf_stage, base, cf_i, tol);
    emit(g, io::to_json(cert, cf_model));
    return 0;
  }

  if (*rc) {
    auto cert = io::certificate_from_json(io::load_file(rc_file));
    const bool ok = revalidate(cert, tol);
    emit(g, json{{"check", "recheck-certificate"}, {"pass", ok}});
    return ok ? 0 : 1;
  }

  if (*pd) {
    auto model = parse_model(pd_model);
    const Rational index = model_index(model);
    json points = json::array();
    for (const auto& e : families_for(model)) {
      points.push_back(json{{"alpha", e.value.decimal(30)},
                            {"alpha_exact", e.value.str()},
                            {"family", e.family}});
    }
    const long long two_n = model.kind == "vertex" ? 2 * ((model.n + 1) / 2) : model.n;
    if (model.kind != "unitary-onb" && two_n % 2 == 0 && two_n >= 6 && model.n % 2 == 0) {
      const long long half = model.n / 2;
      for (long long i = 0; i <= 2 * half - 4; ++i) {
        auto zm = zeta_matrix(half, i, 1, pd_gamma_m, pd_zeta_k);
        for (std::size_t row = 0; row < zm.rows.size(); ++row)
          for (std::size_t k = 0; k < zm.rows[row].size(); ++k)
            points.push_back(json{{"alpha", zm.rows[row][k].decimal(30)},
                                  {"alpha_exact", zm.rows[row][k].str()},
                                  {"family", k == 0 ? "gamma" : "zeta"}});
      }
    }
    json band = json::object();
    if (index > Rational(4)) {
      // t = (1 - sqrt(1 - 4/index)) / 2, computed through a 45-digit integer
      // square root and printed to 40 digits.
      const Rational inner = Rational(1) - Rational(4) / index;
      BigInt scale = 1;
      for (int d = 0; d < 45; ++d) scale *= 10;
      const BigInt s = isqrt(inner.num() * inner.den() * scale * scale) / inner.den();
      const Rational t(scale - s, 2 * scale);
      const Rational one_minus_t(scale + s, 2 * scale);
      band = json{{"t_equation", "t(1-t) = 1/" + index.str() + ", t < 1/2"},
                  {"t", t.decimal(40)},
                  {"one_minus_t", one_minus_t.decimal(40)},
                  {"band_nonempty", true}};
    } else {
      band = json{{"band_nonempty", false}};
    }
    emit(g, json{{"check", "plot-data"},
                 {"model", pd_model},
                 {"index", index.str()},
                 {"band", std::move(band)},
                 {"points", std::move(points)},
                 {"pass", true}});
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
}
