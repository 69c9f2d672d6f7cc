// adeq: command-line front end for the ADE quiver toolkit.

#include <CLI11.hpp>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ade/adhm.hpp"
#include "ade/deformation.hpp"
#include "ade/errors.hpp"
#include "ade/gamma_group.hpp"
#include "ade/io.hpp"
#include "ade/linalg.hpp"
#include "ade/monad.hpp"
#include "ade/quiver.hpp"
#include "ade/root_system.hpp"
#include "ade/sheaf_corr.hpp"

using namespace ade;
using io::json;

namespace {

struct Verdict {
  std::string check;
  bool pass;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // file, digest
  std::vector<Verdict> verdicts;
  std::string text;  // human-readable body
  json data = json::object();
  int exit_code = 0;

  void check(std::string name, bool pass, std::string detail = {}) {
    verdicts.push_back({std::move(name), pass, std::move(detail)});
  }
  void add_input(const std::string& file) { inputs.emplace_back(file, io::digest(file)); }
  void finish() {
    if (exit_code == 2) return;
    exit_code = 0;
    for (const auto& v : verdicts) {
      if (!v.pass) exit_code = 1;
    }
  }
  json to_json() const {
    json in = json::array(), ver = json::array();
    for (const auto& [f, d] : inputs) in.push_back({{"file", f}, {"digest", d}});
    for (const auto& v : verdicts) ver.push_back({{"check", v.check}, {"pass", v.pass}, {"detail", v.detail}});
    return {{"command", command}, {"inputs", in}, {"verdicts", ver}, {"data", data}, {"exit_code", exit_code}};
  }
};

struct Globals {
  bool json_out = false;
  std::uint64_t seed = 0;
  double tol = 0.0;
  Tolerances tolerances() const { return tol > 0 ? Tolerances::uniform(tol) : Tolerances{}; }
};

std::string fmt(Complex z) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(10);
  const double re = std::abs(z.real()) < 5e-11 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 5e-11 ? 0.0 : z.imag();
  os << re;
  if (im != 0.0) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return os.str();
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return "(" + s + ")";
}

int closed_form_root_count(const DynkinType& t) {
  const int n = t.rank();
  switch (t.family()) {
    case Family::A: return n * (n + 1) / 2;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
  }
  return -1;
}

// Residual matrices: "0" when zero, else the exact entries.
std::string residual_text(const QMatrix& m) {
  if (m.is_zero()) return "0";
  std::ostringstream os;
  os << m;
  return os.str();
}

void cmd_roots(RunReport& r, const std::string& type_str) {
  const DynkinType t = DynkinType::parse(type_str);
  const auto delta = marks(t).delta;
  const auto roots = positive_roots(t);
  const Root top = highest_root(t);
  std::ostringstream os;
  os << "type " << t.name() << "\nmarks " << join(delta) << "\npositive roots " << roots.size() << "\n";
  json jr = json::array();
  for (const auto& root : roots) {
    os << "  " << to_string(root) << "  height " << root.height() << "\n";
    jr.push_back(root.coefficients);
  }
  os << "highest root " << to_string(top) << "\n";
  r.text = os.str();
  r.data = {{"type", t.name()}, {"marks", delta}, {"positive_roots", jr},
            {"count", roots.size()}, {"highest_root", top.coefficients}};
  r.check("root count", static_cast<int>(roots.size()) == closed_form_root_count(t),
          std::to_string(roots.size()) + " roots, closed form " + std::to_string(closed_form_root_count(t)));
  const std::vector<int> finite_marks(delta.begin() + 1, delta.end());
  r.check("highest root equals finite marks", top.coefficients == finite_marks, to_string(top));
}

void cmd_mckay_verify(RunReport& r, const std::string& type_str, const Globals& g) {
  const DynkinType t = DynkinType::parse(type_str);
  const Tolerances tol = g.tolerances();
  const GammaGroup group = enumerate(t, tol);
  const auto delta = marks(t).delta;
  long sum_sq = 0;
  for (int d : delta) sum_sq += static_cast<long>(d) * d;
  const CharacterTable table = character_table(group, g.seed, tol);
  const IMatrix adj = mckay_adjacency(group, table, tol);
  std::vector<int> degrees;
  for (double d : table.dims) degrees.push_back(static_cast<int>(std::lround(d)));
  const auto iso = mckay_isomorphism(adj, degrees, t);
  std::ostringstream os;
  os << "type " << t.name() << "\norder " << group.order() << "\nsum of squared marks " << sum_sq
     << "\nconjugacy classes " << group.classes.size() << "\nirrep degrees " << join(degrees) << "\n";
  r.text = os.str();
  r.data = {{"type", t.name()}, {"order", group.order()}, {"sum_delta_squared", sum_sq},
            {"classes", group.classes.size()}, {"degrees", degrees}};
  if (iso) r.data["irrep_to_node"] = *iso;
  r.check("order equals sum of squared marks", static_cast<long>(group.order()) == sum_sq,
          std::to_string(group.order()) + " vs " + std::to_string(sum_sq));
  r.check("class count equals node count", static_cast<int>(group.classes.size()) == t.node_count(true));
  r.check("McKay graph matches affine diagram", iso.has_value());
}

void cmd_quiver_dot(RunReport& r, const std::string& type_str, const std::string& flavor) {
  const DynkinType t = DynkinType::parse(type_str);
  QuiverSpec q = flavor == "mckay"      ? build_mckay_quiver(t)
                 : flavor == "extended" ? build_extended_quiver(t)
                 : flavor == "n1"       ? build_n1_quiver(t)
                                        : throw InputError("unknown flavor '" + flavor + "'");
  r.text = to_dot(q);
  r.data = {{"dot", r.text}};
}

void cmd_theta_validate(RunReport& r, const std::string& file) {
  r.add_input(file);
  const DeformationParam d = io::deformation_from_json(io::read_file(file));
  std::ostringstream os;
  for (std::size_t a = 0; a < d.theta().size(); ++a) os << "Theta_" << a << " = " << d.theta(a).to_string() << "\n";
  os << "weighted sum " << d.weighted_sum().to_string() << "\n";
  r.text = os.str();
  r.data = io::to_json(d);
  r.check("sum of delta_a Theta_a vanishes", d.is_constrained(), d.weighted_sum().to_string());
}

void cmd_exc_locus(RunReport& r, const std::string& file, const Globals& g) {
  r.add_input(file);
  const DeformationParam d = io::deformation_from_json(io::read_file(file));
  const Tolerances tol = g.tolerances();
  const ExceptionalLocus locus = exceptional_locus(d, tol);
  std::ostringstream os;
  os << "point | root | multiplicity\n";
  json rows = json::array();
  for (const auto& e : locus.entries) {
    os << fmt(e.point) << " | " << to_string(e.root) << " | " << e.multiplicity << "\n";
    rows.push_back({{"point", io::to_json(e.point)}, {"root", e.root.coefficients}, {"multiplicity", e.multiplicity}});
  }
  const bool generic = is_generic(locus, tol);
  r.text = os.str();
  r.data = {{"locus", rows}, {"generic", generic}};
  r.check("generic", generic, generic ? "distinct simple zeros" : "repeated or coincident zeros");
}

// Verdicts for one representation file.
RunReport check_one(const std::string& file, const DeformationParam* d, const Globals& g) {
  RunReport r;
  r.command = "check-rep";
  try {
    r.add_input(file);
    const N1Representation rep = io::representation_from_json(io::read_file(file));
    std::ostringstream os;
    os << "file " << file << " (" << rep.type.name() << (rep.affine ? ", affine" : ", finite")
       << ", dims " << join(rep.dims) << ")\n";
    if (d) {
      if (!(d->type() == rep.type)) throw InputError("deformation type " + d->type().name() + " vs " + rep.type.name());
      const RelationResidual res = check_relations(rep, *d);
      json nodes = json::object(), edges = json::object();
      for (const auto& [a, m] : res.node_residuals) {
        os << "  node " << a << " residual " << residual_text(m) << "\n";
        nodes[std::to_string(a)] = io::to_json(m);
        r.check("node relation " + std::to_string(a), m.is_zero(), residual_text(m));
      }
      for (const auto& [k, m] : res.edge_residuals) {
        if (!m.is_zero()) os << "  edge " << to_string(k) << " residual " << residual_text(m) << "\n";
        edges[to_string(k)] = io::to_json(m);
        r.check("edge relation " + to_string(k), m.is_zero(), residual_text(m));
      }
      r.data["node_residuals"] = nodes;
      r.data["edge_residuals"] = edges;
      if (!rep.affine) {
        const SupportReport sup = check_support_property(rep, *d, g.tolerances());
        json js = json::array();
        for (const auto& e : sup.entries) {
          os << "  node " << e.node << " eigenvalue " << fmt(e.eigenvalue) << " nearest root "
             << to_string(e.best_root) << " |Theta| " << e.min_value << "\n";
          js.push_back({{"node", e.node}, {"eigenvalue", io::to_json(e.eigenvalue)},
                        {"root", e.best_root.coefficients}, {"value", e.min_value}, {"pass", e.pass}});
        }
        r.data["support"] = js;
        r.check("support on exceptional locus", sup.verdict);
      }
    }
    const bool nondeg = is_nondegenerate(rep);
    r.data["nondegenerate"] = nondeg;
    r.check("non-degenerate", nondeg);
    r.text = os.str();
    r.finish();
  } catch (const InputError& e) {
    r.verdicts.push_back({"input", false, e.what()});
    r.exit_code = 2;
  } catch (const Error& e) {
    r.verdicts.push_back({"check", false, e.what()});
    r.exit_code = 1;
  }
  return r;
}

void cmd_check_rep(RunReport& r, std::vector<std::string> files, std::string theta_file, const Globals& g) {
  if (theta_file.empty() && files.size() >= 2) {
    theta_file = files.back();
    files.pop_back();
  }
  std::unique_ptr<DeformationParam> d;
  if (!theta_file.empty()) {
    r.add_input(theta_file);
    d = std::make_unique<DeformationParam>(io::deformation_from_json(io::read_file(theta_file)));
  }
  std::vector<RunReport> parts(files.size());
  const long n = static_cast<long>(files.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) parts[i] = check_one(files[i], d.get(), g);

  json per_file = json::array();
  int worst = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    r.text += p.text;
    r.inputs.insert(r.inputs.end(), p.inputs.begin(), p.inputs.end());
    for (const auto& v : p.verdicts) r.verdicts.push_back({files[i] + ": " + v.check, v.pass, v.detail});
    per_file.push_back({{"file", files[i]}, {"data", p.data}, {"exit_code", p.exit_code}});
    worst = std::max(worst, p.exit_code);
  }
  r.data = {{"files", per_file}};
  if (worst == 2) r.exit_code = 2;
}

void cmd_nondeg(RunReport& r, const std::string& file) {
  r.add_input(file);
  const N1Representation rep = io::representation_from_json(io::read_file(file));
  const auto closure = invariant_closure(rep);
  std::ostringstream os;
  std::vector<int> dims;
  for (std::size_t a = 0; a < closure.size(); ++a) dims.push_back(static_cast<int>(closure[a].cols()));
  os << "closure dims " << join(dims) << " of " << join(rep.dims) << "\n";
  r.text = os.str();
  r.data = {{"closure_dims", dims}, {"dims", rep.dims}};
  r.check("non-degenerate", is_nondegenerate(rep));
}

json base_changes_json(const std::vector<QMatrix>& g) {
  json out = json::object();
  for (std::size_t a = 0; a < g.size(); ++a) out[std::to_string(a)] = io::to_json(g[a]);
  return out;
}

void cmd_sheafify(RunReport& r, const std::string& file) {
  r.add_input(file);
  const N1Representation rep = io::representation_from_json(io::read_file(file));
  const Sheafification s = quadruple_to_quintuple(rep);
  r.data = {{"sheaf_data", io::to_json(s.data)}, {"base_change", base_changes_json(s.base_change)}};
  r.text = io::to_json(s.data).dump(2) + "\n";
  r.check("edge relations", true);
}

void cmd_matrixify(RunReport& r, const std::string& file) {
  r.add_input(file);
  const QuiverSheafData q = io::quiver_sheaf_from_json(io::read_file(file));
  const N1Representation rep = quintuple_to_quadruple(q);
  r.data = {{"representation", io::to_json(rep)}};
  r.text = io::to_json(rep).dump(2) + "\n";
  r.check("arrow maps intertwine", true);
}

void cmd_roundtrip(RunReport& r, const std::string& file) {
  r.add_input(file);
  const N1Representation rep = io::representation_from_json(io::read_file(file));
  const Sheafification s = quadruple_to_quintuple(rep);
  const N1Representation back = quintuple_to_quadruple(s.data);
  const N1Representation expected = conjugate(rep, s.base_change);
  const bool same = back.dims == expected.dims && back.B == expected.B && back.psi == expected.psi &&
                    back.framing == expected.framing;
  std::ostringstream os;
  for (std::size_t a = 0; a < s.base_change.size(); ++a) os << "g_" << a << " = " << s.base_change[a] << "\n";
  r.text = os.str();
  r.data = {{"base_change", base_changes_json(s.base_change)}, {"sheaf_data", io::to_json(s.data)}};
  r.check("round trip conjugate to input", same);
}

std::vector<Rational> parse_lambda(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

void cmd_monad_check(RunReport& r, const std::string& file, const std::string& lambda_text) {
  r.add_input(file);
  const N1Representation rep = io::representation_from_json(io::read_file(file));
  const std::vector<Rational> lambda = parse_lambda(lambda_text);
  const MonadData m = build_monad(rep, lambda);
  const MonadCheck c = compose_and_check(m);

  std::vector<Polynomial> constant;
  for (const auto& l : lambda) constant.push_back(Polynomial::constant(l));
  const DeformationParam d = DeformationParam::unconstrained(rep.type, constant);
  const QMatrix zz = c.composite.coefficient(Monomial::zz);
  bool agree = true, residuals_vanish = true;
  std::ostringstream os;
  json blocks = json::object();
  for (int a = 0; a < rep.type.node_count(true); ++a) {
    const QMatrix blk = node_block(zz, rep.dims, a);
    const QMatrix res = node_residual(rep, d, a);
    agree = agree && blk == res;
    residuals_vanish = residuals_vanish && res.is_zero();
    os << "z^2 block " << a << ": " << residual_text(blk) << "\n";
    blocks[std::to_string(a)] = io::to_json(blk);
  }
  bool structural = true;
  for (Monomial mono : {Monomial::x1x1, Monomial::x2x2, Monomial::zx1, Monomial::zx2, Monomial::x1x2}) {
    structural = structural && c.composite.coefficient(mono).is_zero();
  }
  r.text = os.str();
  r.data = {{"z2_blocks", blocks}, {"vanishes", c.vanishes}};
  r.check("structural cancellation", structural);
  r.check("monad verdict agrees with node relations", agree && c.vanishes == residuals_vanish);
  r.check("b o a = 0", c.vanishes);
}

void emit(const RunReport& r, const Globals& g) {
  if (g.json_out) {
    std::cout << r.to_json().dump(2) << "\n";
    return;
  }
  std::cout << r.text;
  for (const auto& v : r.verdicts) {
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << v.check;
    if (!v.detail.empty()) std::cout << ": " << v.detail;
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ADE quiver, root system and sheaf-correspondence checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json_out, "Emit a JSON report");
  app.add_option("--seed", g.seed, "Seed for randomized numerics")->default_val(0);
  app.add_option("--tol", g.tol, "Override every numeric tolerance");

  std::string type_str, file, flavor = "n1", theta_file, lambda_text;
  std::vector<std::string> files;

  auto* roots = app.add_subcommand("roots", "Marks and positive roots");
  roots->add_option("type", type_str)->required();
  auto* mckay = app.add_subcommand("mckay-verify", "Enumerate the group and check the McKay graph");
  mckay->add_option("type", type_str)->required();
  auto* dot = app.add_subcommand("quiver-dot", "Graphviz rendering of a quiver");
  dot->add_option("type", type_str)->required();
  dot->add_option("--flavor", flavor, "mckay, extended or n1")->check(CLI::IsMember({"mckay", "extended", "n1"}));
  auto* theta = app.add_subcommand("theta-validate", "Check sum delta_a Theta_a = 0");
  theta->add_option("file", file)->required();
  auto* exc = app.add_subcommand("exc-locus", "Exceptional locus and genericity");
  exc->add_option("file", file)->required();
  auto* check = app.add_subcommand("check-rep", "Relations, non-degeneracy and support");
  check->add_option("files", files, "Representation files; the last is the deformation unless --theta")->required();
  check->add_option("--theta", theta_file, "Deformation file");
  auto* nondeg = app.add_subcommand("nondeg", "Non-degeneracy via invariant closure");
  nondeg->add_option("file", file)->required();
  auto* sheafify = app.add_subcommand("sheafify", "Representation to torsion-sheaf data");
  sheafify->add_option("file", file)->required();
  auto* matrixify = app.add_subcommand("matrixify", "Torsion-sheaf data to representation");
  matrixify->add_option("file", file)->required();
  auto* roundtrip = app.add_subcommand("roundtrip", "Representation to sheaf data and back");
  roundtrip->add_option("file", file)->required();
  auto* monad = app.add_subcommand("monad-check", "Compose the monad maps (type A)");
  monad->add_option("file", file)->required();
  monad->add_option("--lambda", lambda_text, "Comma-separated per-node values")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  RunReport r;
  r.command = app.get_subcommands().front()->get_name();
  try {
    if (*roots) cmd_roots(r, type_str);
    else if (*mckay) cmd_mckay_verify(r, type_str, g);
    else if (*dot) cmd_quiver_dot(r, type_str, flavor);
    else if (*theta) cmd_theta_validate(r, file);
    else if (*exc) cmd_exc_locus(r, file, g);
    else if (*check) cmd_check_rep(r, files, theta_file, g);
    else if (*nondeg) cmd_nondeg(r, file);
    else if (*sheafify) cmd_sheafify(r, file);
    else if (*matrixify) cmd_matrixify(r, file);
    else if (*roundtrip) cmd_roundtrip(r, file);
    else if (*monad) cmd_monad_check(r, file, lambda_text);
    r.finish();
  } catch (const InputError& e) {
    r.verdicts.push_back({"input", false, e.what()});
    r.exit_code = 2;
  } catch (const Error& e) {
    r.verdicts.push_back({"check", false, e.what()});
    r.exit_code = 1;
  }
  emit(r, g);
  return r.exit_code;
}
