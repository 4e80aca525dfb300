#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "torica/coxring.hpp"
#include "torica/divisor.hpp"
#include "torica/error.hpp"
#include "torica/fan.hpp"
#include "torica/forms.hpp"
#include "torica/hodge.hpp"
#include "torica/io.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace torica;

constexpr const char* kSchema = "torica-report/1";

struct Config {
  std::string format = "table";
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 0x5eed;
  bool skip_checks = false;
  std::string fan_path;
  std::string poly_path;
  std::string b_text;
};

struct Report {
  Json result = Json::object();
  std::string table;
  int exit = 0;
};

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::BudgetExceeded:
      return 3;
    case ErrorCode::InvalidInput:
    case ErrorCode::NonPrimitiveRay:
    case ErrorCode::InvalidFan:
    case ErrorCode::RankDeficient:
    case ErrorCode::ClassGroupMismatch:
    case ErrorCode::InvalidWeights:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::DivisionByVariable:
      return 2;
    default:
      return 1;
  }
}

std::uint64_t resolve_budget(const Config& cfg) {
  if (cfg.budget) {
    require(*cfg.budget > 0, ErrorCode::InvalidInput, "--budget must be positive");
    return *cfg.budget;
  }
  if (const char* env = std::getenv("TORICA_BUDGET")) {
    std::uint64_t v = 0;
    std::istringstream is(env);
    require(static_cast<bool>(is >> v) && is.eof() && v > 0, ErrorCode::InvalidInput,
            std::string("TORICA_BUDGET must be a positive integer, got '") + env + "'");
    return v;
  }
  return kDefaultGroebnerBudget;
}

Json int_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json ints_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

Json rats_json(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json class_json(const DivisorClass& c) {
  return Json{{"free", ints_json(c.free_part())}, {"torsion", ints_json(c.torsion_part())}};
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class V>
std::string tuple_text(const V& v) {
  std::vector<std::string> s;
  for (const auto& x : v) {
    std::ostringstream os;
    os << x;
    s.push_back(os.str());
  }
  return "(" + join(s, ",") + ")";
}

std::string class_text(const DivisorClass& c) {
  std::string out = tuple_text(c.free_part());
  if (!c.torsion_part().empty()) out += " torsion " + tuple_text(c.torsion_part());
  return out;
}

// 1-based, for tables.
std::string cone_text(const Cone& c) {
  std::vector<std::string> s;
  for (auto i : c) s.push_back(std::to_string(i + 1));
  return "{" + join(s, ",") + "}";
}

std::string vars_text(const Cone& c, const char* sep = "") {
  std::vector<std::string> s;
  for (auto i : c) s.push_back("z" + std::to_string(i + 1));
  return join(s, sep);
}

std::string monomial_text(const Exponent& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    out += "z" + std::to_string(i + 1);
    if (a[i] > 1) out += "^" + std::to_string(a[i]);
  }
  return out.empty() ? "1" : out;
}

Json cone_json(const Cone& c) {
  Json a = Json::array();
  for (auto i : c) a.push_back(i);
  return a;
}

std::string markdown(const std::vector<std::string>& head,
                     const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  os << "| " << join(head, " | ") << " |\n|";
  for (std::size_t i = 0; i < head.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& r : rows) os << "| " << join(r, " | ") << " |\n";
  return os.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Fan load_fan(const Config& cfg) { return fan_from_json(read_file(cfg.fan_path)); }

GradedPolynomial load_poly(const ToricVariety& X, const Config& cfg) {
  return polynomial_from_json(X, read_file(cfg.poly_path));
}

std::optional<IntVector> divisor_option(const Config& cfg) {
  if (cfg.b_text.empty()) return std::nullopt;
  return parse_divisor(cfg.b_text);
}

Report fan_check(const Config& cfg) {
  const Fan fan = load_fan(cfg);
  const FanReport r = validate_fan(fan, cfg.seed);
  Report out;
  out.result["dim"] = fan.dim();
  out.result["rays"] = fan.n();
  out.result["max_cones"] = fan.max_cones().size();
  out.result["valid"] = r.valid();
  Json issues = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& is : r.issues) {
    issues.push_back({{"kind", to_string(is.kind)},
                      {"where", is.where},
                      {"direction", is.direction},
                      {"detail", is.detail}});
    const bool by_cone =
        is.kind == FanIssueKind::DegenerateCone || is.kind == FanIssueKind::BadIntersection;
    std::vector<std::string> where;
    for (auto i : is.where) where.push_back((by_cone ? "#" : "e") + std::to_string(i + 1));
    rows.push_back({to_string(is.kind), where.empty() ? "" : (by_cone ? "max cones " : "rays ") + join(where),
                    is.direction.empty() ? "" : tuple_text(is.direction), is.detail});
  }
  out.result["issues"] = issues;
  std::ostringstream os;
  os << "Fan of dimension " << fan.dim() << " with " << fan.n() << " rays and "
     << fan.max_cones().size() << " maximal cones: " << (r.valid() ? "valid" : "INVALID") << "\n";
  if (!rows.empty()) os << "\n" << markdown({"issue", "where", "direction", "detail"}, rows);
  out.table = os.str();
  out.exit = r.valid() ? 0 : 1;
  return out;
}

Report fan_classgroup(const Config& cfg) {
  const ToricVariety X(load_fan(cfg));
  const auto& G = X.class_group();
  Report out;
  out.result["free_rank"] = G.free_rank();
  out.result["torsion"] = ints_json(G.torsion());
  Json degs = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < X.n(); ++i) {
    degs.push_back(class_json(X.ray_degree(i)));
    rows.push_back({"z" + std::to_string(i + 1), tuple_text(X.fan().ray(i)),
                    class_text(X.ray_degree(i))});
  }
  out.result["ray_degrees"] = degs;
  out.result["anticanonical"] = class_json(X.anticanonical());
  const auto w = weighted_projective_classification(X.fan());
  const char* kind = w.kind == WeightedKind::IsWeightedProjective ? "weighted_projective"
                     : w.kind == WeightedKind::FiniteCoverOfFan  ? "finite_cover"
                                                                 : "not_applicable";
  out.result["weighted"] = {{"kind", kind}, {"weights", w.weights}, {"index", int_json(w.index)}};

  std::ostringstream os;
  os << "Class group: Z^" << G.free_rank();
  for (const auto& t : G.torsion()) os << " + Z/" << t;
  os << "\n\n" << markdown({"variable", "ray", "degree"}, rows);
  os << "\nAnticanonical class: " << class_text(X.anticanonical()) << "\n";
  if (w.kind != WeightedKind::NotApplicable)
    os << "Weighted projective type: " << kind << ", weights " << tuple_text(w.weights)
       << ", index " << w.index << "\n";
  out.table = os.str();
  return out;
}

Report fan_collections(const Config& cfg) {
  const Fan fan = load_fan(cfg);
  require_valid_fan(fan);
  Report out;
  Json pcs = Json::array(), comps = Json::array(), sr = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : primitive_collections(fan)) {
    pcs.push_back(cone_json(c));
    rows.push_back({cone_text(c), "V(" + vars_text(c, ", ") + ")"});
  }
  for (const auto& z : z_sigma_components(fan)) comps.push_back(cone_json(z.zero_indices));
  std::vector<std::string> sr_text;
  for (const auto& g : stanley_reisner_generators(fan)) {
    sr.push_back(g);
    sr_text.push_back(monomial_text(g));
  }
  const auto v = codim_Z(fan);
  out.result["primitive_collections"] = pcs;
  out.result["z_components"] = comps;
  out.result["stanley_reisner"] = sr;
  out.result["codimension"] = {{"codim", v.codim},
                               {"origin_case", v.origin_case},
                               {"upper_bound", v.upper_bound},
                               {"bound_holds", v.bound_holds}};
  std::ostringstream os;
  os << markdown({"primitive collection", "component of Z"}, rows);
  os << "\nStanley-Reisner generators: " << join(sr_text) << "\n";
  os << "codim Z = " << v.codim << (v.origin_case ? " (Z is the origin)" : "")
     << ", bound " << v.upper_bound << ": " << (v.bound_holds ? "holds" : "VIOLATED") << "\n";
  out.table = os.str();
  return out;
}

Report divisor_info(const Config& cfg) {
  const ToricVariety X(load_fan(cfg));
  const auto b = divisor_option(cfg);
  require(b.has_value(), ErrorCode::InvalidInput, "divisor info needs --b");
  require(b->size() == X.n(), ErrorCode::InvalidInput, "--b needs one entry per ray");
  const Fan& fan = X.fan();
  const bool cartier = is_cartier(fan, *b);
  const bool ample = is_ample(fan, *b);
  const auto P = support_polytope(fan, *b);
  Report out;
  out.result["divisor"] = ints_json(*b);
  out.result["class"] = class_json(X.class_of(*b));
  out.result["cartier"] = cartier;
  out.result["ample"] = ample;
  Json verts = Json::array(), pts = Json::array();
  std::vector<std::string> vt;
  for (const auto& v : P.vertices) {
    verts.push_back(rats_json(v));
    vt.push_back(tuple_text(v));
  }
  for (const auto& p : P.lattice_points) pts.push_back(p);
  out.result["vertices"] = verts;
  out.result["lattice_points"] = pts;
  out.result["dim_S"] = X.graded_dim(X.class_of(*b));

  std::ostringstream os;
  os << "Divisor " << tuple_text(*b) << " of class " << class_text(X.class_of(*b)) << "\n"
     << "Cartier: " << yes_no(cartier) << ", ample: " << yes_no(ample) << "\n"
     << "Vertices: " << join(vt) << "\n"
     << "Lattice points: " << P.lattice_points.size() << "\n";
  Json faces = Json::array();
  if (ample) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& f : polytope_faces(fan, *b)) {
      faces.push_back({{"cone", cone_json(f.cone)},
                       {"dim", f.dim},
                       {"vertices", f.vertices.size()},
                       {"lattice_points", f.lattice_points.size()}});
      rows.push_back({f.cone.empty() ? "{}" : cone_text(f.cone), std::to_string(f.dim),
                      std::to_string(f.vertices.size()), std::to_string(f.lattice_points.size())});
    }
    os << "\n" << markdown({"cone", "face dim", "vertices", "lattice points"}, rows);
  }
  out.result["faces"] = faces;
  out.table = os.str();
  return out;
}

HodgeOptions hodge_options(const Config& cfg) {
  HodgeOptions o;
  o.budget = resolve_budget(cfg);
  o.skip_checks = cfg.skip_checks;
  o.divisor = divisor_option(cfg);
  return o;
}

Report hodge(const Config& cfg) {
  ToricVariety X(load_fan(cfg));
  GradedPolynomial f = load_poly(X, cfg);
  HodgeEngine H(X, f, hodge_options(cfg));
  const int d = H.dim();

  Json flags;
  flags["ample"] = H.ample();
  flags["cartier"] = H.cartier();
  std::optional<bool> qs, nd;
  if (!cfg.skip_checks) {
    qs = H.quasi_smooth().quasi_smooth;
    if (H.ample()) nd = H.nondegenerate().nondegenerate;
  }
  flags["quasi_smooth"] = qs ? Json(*qs) : Json(nullptr);
  flags["nondegenerate"] = nd ? Json(*nd) : Json(nullptr);
  flags["f_in_jacobian"] = H.f_in_jacobian();

  Json gr = Json::array(), ph = Json::array(), r1 = Json::array(), aff = Json::array();
  for (int p = 0; p <= d; ++p) gr.push_back(H.gr_hodge_complement(p));
  for (int p = 0; p < d; ++p) ph.push_back(H.primitive_hodge(p));
  const bool with_r1 = cfg.skip_checks || nd.value_or(false);
  if (with_r1) {
    for (int p = 0; p < d; ++p) r1.push_back(H.primitive_hodge_via_R1(p));
    for (int p = 0; p <= d; ++p) aff.push_back(H.affine_hodge_gr(p));
  }
  flags["unchecked"] = H.unchecked();

  Report out;
  out.result["dim"] = d;
  out.result["divisor"] = ints_json(H.divisor());
  out.result["degree"] = class_json(f.degree());
  out.result["flags"] = flags;
  out.result["betti"] = H.betti();
  out.result["gr_hodge_complement"] = gr;
  out.result["primitive_hodge"] = ph;
  out.result["primitive_hodge_via_R1"] = with_r1 ? r1 : Json(nullptr);
  out.result["affine_hodge_gr"] = with_r1 ? aff : Json(nullptr);
  out.result["middle_correction"] =
      d % 2 == 0 ? Json(H.betti()[d] - (d >= 2 ? H.betti()[d - 2] : 0)) : Json(nullptr);
  out.result["budget_used"] = H.budget_used();

  auto flag_text = [](const std::optional<bool>& v) {
    return v ? std::string(yes_no(*v)) : std::string("not checked");
  };
  std::ostringstream os;
  os << "Hypersurface of degree " << class_text(f.degree()) << " in a toric variety of dimension "
     << d << " (divisor " << tuple_text(H.divisor()) << ")\n"
     << "ample: " << yes_no(H.ample()) << ", Cartier: " << yes_no(H.cartier())
     << ", quasi-smooth: " << flag_text(qs) << ", nondegenerate: " << flag_text(nd) << "\n";
  if (H.unchecked()) os << "WARNING: certificates skipped; values are unchecked\n";
  std::vector<std::string> betti;
  for (auto x : H.betti()) betti.push_back(std::to_string(x));
  os << "Betti numbers of P: " << join(betti, " ") << "\n\n";
  std::vector<std::vector<std::string>> rows;
  for (int p = d; p >= 0; --p) {
    std::vector<std::string> r{std::to_string(p), gr[p].dump()};
    r.push_back(p < d ? ph[p].dump() : "");
    r.push_back(with_r1 && p < d ? r1[p].dump() : "");
    r.push_back(with_r1 ? aff[p].dump() : "");
    rows.push_back(r);
  }
  os << markdown({"p", "Gr_F^p H^d(P-X)", "PH^{p,d-1-p}(X)", "via R1", "Gr_F^p PH(Y)"}, rows);
  out.table = os.str();
  return out;
}

Report moduli(const Config& cfg) {
  ToricVariety X(load_fan(cfg));
  GradedPolynomial f = load_poly(X, cfg);
  HodgeEngine H(X, f, hodge_options(cfg));
  Report out;
  const auto m = H.moduli_tangent_dim();
  const auto aut = aut_dimension(X);
  out.result["moduli_tangent_dim"] = m;
  out.result["aut_dimension"] = aut;
  out.result["dim_S_beta"] = H.dim_S(f.degree());
  out.result["f_in_jacobian"] = H.f_in_jacobian();
  out.result["unchecked"] = H.unchecked();
  std::ostringstream os;
  os << "dim R(f)_beta (first-order deformations): " << m << "\n"
     << "dim Aut(P): " << aut << "\n"
     << "dim S_beta: " << H.dim_S(f.degree()) << "\n";
  if (H.unchecked()) os << "WARNING: certificates skipped; values are unchecked\n";
  out.table = os.str();
  return out;
}

Report certify_qs(const Config& cfg) {
  ToricVariety X(load_fan(cfg));
  GradedPolynomial f = load_poly(X, cfg);
  Budget budget(resolve_budget(cfg));
  const auto cert = certify_quasi_smooth(X, f, budget);
  Report out;
  Json cones = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : cert.cones) {
    cones.push_back({{"cone", cone_json(c.cone)}, {"ok", c.ok}});
    rows.push_back({cone_text(c.cone), yes_no(c.ok)});
  }
  out.result["quasi_smooth"] = cert.quasi_smooth;
  out.result["cones"] = cones;
  out.result["steps"] = cert.steps;
  out.table = "quasi-smooth: " + std::string(yes_no(cert.quasi_smooth)) + " (" +
              std::to_string(cert.steps) + " reduction steps)\n\n" +
              markdown({"max cone", "z^sigma-hat in rad J(f)"}, rows);
  out.exit = cert.quasi_smooth ? 0 : 1;
  return out;
}

Report certify_nd(const Config& cfg) {
  ToricVariety X(load_fan(cfg));
  GradedPolynomial f = load_poly(X, cfg);
  Budget budget(resolve_budget(cfg));
  const IntVector b = divisor_option(cfg).value_or(X.representative(f.degree()));
  const auto cert = certify_nondegenerate(X, f, b, budget);
  Report out;
  Json faces = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : cert.faces) {
    faces.push_back({{"cone", cone_json(c.cone)}, {"dim", c.dim}, {"terms", c.terms}, {"ok", c.ok}});
    rows.push_back({c.cone.empty() ? "{}" : cone_text(c.cone), std::to_string(c.dim),
                    std::to_string(c.terms), yes_no(c.ok)});
  }
  out.result["divisor"] = ints_json(b);
  out.result["nondegenerate"] = cert.nondegenerate;
  out.result["faces"] = faces;
  out.result["steps"] = cert.steps;
  out.table = "nondegenerate: " + std::string(yes_no(cert.nondegenerate)) + " (" +
              std::to_string(cert.steps) + " reduction steps)\n\n" +
              markdown({"cone", "face dim", "terms on face", "regular"}, rows);
  out.exit = cert.nondegenerate ? 0 : 1;
  return out;
}

Report forms_verify(const Config& cfg) {
  ToricVariety X(load_fan(cfg));
  std::optional<GradedPolynomial> f;
  if (!cfg.poly_path.empty()) f = load_poly(X, cfg);
  const auto checks = run_forms_suite(X, f, cfg.seed);
  Report out;
  Json arr = Json::array();
  std::vector<std::vector<std::string>> rows;
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"cases", c.cases}, {"passed", c.passed}, {"ok", c.ok()}});
    rows.push_back({c.name, std::to_string(c.passed) + "/" + std::to_string(c.cases),
                    c.ok() ? "pass" : "FAIL"});
    all = all && c.ok();
  }
  out.result["checks"] = arr;
  out.result["all_ok"] = all;
  std::ostringstream os;
  os << markdown({"check", "passed", "verdict"}, rows);
  os << "\nOmega_0 = " << omega0(X.fan()).to_string() << "\n";
  for (std::size_t i = 0; i < X.n(); ++i)
    os << "Omega_" << i + 1 << " = " << omega_i(X.fan(), i).to_string() << "\n";
  out.table = os.str();
  out.exit = all ? 0 : 1;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"torica: class groups, Jacobian rings and Hodge numbers of toric hypersurfaces"};
  app.footer(
      "Indices are 0-based in JSON output and 1-based (z1, z2, ...) in tables.\n"
      "Exit codes: 0 success, 1 mathematical precondition failed, 2 input error,\n"
      "3 Groebner budget exhausted. TORICA_BUDGET sets the default budget.");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "Groebner reduction-step budget");
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();
  app.add_flag("--unsafe-skip-checks", cfg.skip_checks,
               "Evaluate theorems without quasi-smoothness/nondegeneracy certificates");

  std::string command;
  std::function<Report(const Config&)> run;
  auto bind = [&](CLI::App* sub, std::string name, Report (*fn)(const Config&)) {
    sub->callback([&, name, fn] {
      command = name;
      run = fn;
    });
  };

  auto* fan = app.add_subcommand("fan", "Fan utilities");
  fan->require_subcommand(1);
  auto* fan_check_cmd = fan->add_subcommand("check", "Validate a fan");
  fan_check_cmd->add_option("fan", cfg.fan_path, "Fan JSON file")->required();
  bind(fan_check_cmd, "fan check", fan_check);
  auto* fan_cg = fan->add_subcommand("classgroup", "Class group and ray degrees");
  fan_cg->add_option("fan", cfg.fan_path, "Fan JSON file")->required();
  bind(fan_cg, "fan classgroup", fan_classgroup);
  auto* fan_pc = fan->add_subcommand("collections", "Primitive collections and Z(Sigma)");
  fan_pc->add_option("fan", cfg.fan_path, "Fan JSON file")->required();
  bind(fan_pc, "fan collections", fan_collections);

  auto* div = app.add_subcommand("divisor", "Torus-invariant divisors");
  div->require_subcommand(1);
  auto* div_info = div->add_subcommand("info", "Cartier/ample flags and support polytope");
  div_info->add_option("fan", cfg.fan_path, "Fan JSON file")->required();
  div_info->add_option("--b", cfg.b_text, "Divisor coefficients, e.g. 3,0,0")->required();
  bind(div_info, "divisor info", divisor_info);

  auto* hod = app.add_subcommand("hodge", "Hodge numbers of a hypersurface");
  hod->add_option("fan", cfg.fan_path, "Fan JSON file")->required();
  hod->add_option("poly", cfg.poly_path, "Polynomial JSON file")->required();
  hod->add_option("--b", cfg.b_text, "Divisor in the class of f");
  bind(hod, "hodge", hodge);

  auto* mod = app.add_subcommand("moduli", "Moduli tangent space and Aut dimension");
  mod->add_option("fan", cfg.fan_path, "Fan JSON file")->required();
  mod->add_option("poly", cfg.poly_path, "Polynomial JSON file")->required();
  bind(mod, "moduli", moduli);

  auto* cert = app.add_subcommand("certify", "Certificates for f");
  cert->require_subcommand(1);
  auto* cert_qs = cert->add_subcommand("quasismooth", "Per-cone quasi-smoothness certificate");
  cert_qs->add_option("fan", cfg.fan_path, "Fan JSON file")->required();
  cert_qs->add_option("poly", cfg.poly_path, "Polynomial JSON file")->required();
  bind(cert_qs, "certify quasismooth", certify_qs);
  auto* cert_nd = cert->add_subcommand("nondegenerate", "Per-face nondegeneracy certificate");
  cert_nd->add_option("fan", cfg.fan_path, "Fan JSON file")->required();
  cert_nd->add_option("poly", cfg.poly_path, "Polynomial JSON file")->required();
  cert_nd->add_option("--b", cfg.b_text, "Ample divisor in the class of f");
  bind(cert_nd, "certify nondegenerate", certify_nd);

  auto* forms = app.add_subcommand("forms", "Differential form identities");
  forms->require_subcommand(1);
  auto* forms_verify_cmd = forms->add_subcommand("verify", "Run the form identity suite");
  forms_verify_cmd->add_option("fan", cfg.fan_path, "Fan JSON file")->required();
  forms_verify_cmd->add_option("poly", cfg.poly_path, "Polynomial JSON file");
  bind(forms_verify_cmd, "forms verify", forms_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const bool json = cfg.format == "json";
  try {
    Report r = run(cfg);
    if (json) {
      Json doc{{"schema", kSchema}, {"command", command}, {"ok", r.exit == 0}, {"result", r.result}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << r.table;
    }
    return r.exit;
  } catch (const Error& e) {
    if (json) {
      Json doc{{"schema", kSchema},
               {"command", command},
               {"ok", false},
               {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    }
    return exit_code(e.code());
  }
}
