#include "ade/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ade/errors.hpp"

namespace ade::io {

namespace {

std::string slurp(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ParseError(file, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + "." + key, "missing field");
  return *it;
}

int int_from_json(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<int>();
}

int node_key(const std::string& key, int node_count, const std::string& path) {
  std::size_t used = 0;
  int a = -1;
  try {
    a = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || a < 0 || a >= node_count) {
    throw ParseError(path, "node label '" + key + "' out of range 0.." + std::to_string(node_count - 1));
  }
  return a;
}

DynkinType type_from_json(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a type string like \"A2\"");
  try {
    return DynkinType::parse(j.get<std::string>());
  } catch (const InputError& e) {
    throw ParseError(path, e.what());
  }
}

Polynomial polynomial_from_json(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an ascending coefficient array");
  std::vector<Rational> c;
  for (std::size_t k = 0; k < j.size(); ++k) {
    c.push_back(rational_from_json(j[k], path + "[" + std::to_string(k) + "]"));
  }
  return Polynomial(std::move(c));
}

std::vector<QMatrix> framing_from_json(const json& j, const std::vector<int>& dims,
                                       const std::string& path) {
  std::vector<QMatrix> framing;
  for (int d : dims) framing.emplace_back(d, 0);
  if (j.is_null()) return framing;
  if (!j.is_object()) throw ParseError(path, "expected an object keyed by node");
  const int nn = static_cast<int>(dims.size());
  for (const auto& [key, val] : j.items()) {
    const std::string p = path + "." + key;
    const int a = node_key(key, nn, p);
    const int r = int_from_json(field(val, "rank", p), p + ".rank");
    if (r < 0) throw ParseError(p + ".rank", "negative framing rank");
    const json& vecs = val.contains("vectors") ? val["vectors"] : json::array();
    if (!vecs.is_array() || static_cast<int>(vecs.size()) != r) {
      throw ParseError(p + ".vectors", "expected " + std::to_string(r) + " vectors");
    }
    QMatrix m(dims[a], r);
    for (int k = 0; k < r; ++k) {
      const std::string vp = p + ".vectors[" + std::to_string(k) + "]";
      if (!vecs[k].is_array() || static_cast<int>(vecs[k].size()) != dims[a]) {
        throw ParseError(vp, "expected a vector of length " + std::to_string(dims[a]));
      }
      for (int i = 0; i < dims[a]; ++i) {
        m(i, k) = rational_from_json(vecs[k][i], vp + "[" + std::to_string(i) + "]");
      }
    }
    framing[a] = std::move(m);
  }
  return framing;
}

json framing_to_json(const std::vector<QMatrix>& framing) {
  json out = json::object();
  for (std::size_t a = 0; a < framing.size(); ++a) {
    const QMatrix& m = framing[a];
    if (m.cols() == 0) continue;
    json vecs = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) {
      json v = json::array();
      for (std::size_t i = 0; i < m.rows(); ++i) v.push_back(to_json(m(i, k)));
      vecs.push_back(std::move(v));
    }
    out[std::to_string(a)] = {{"rank", m.cols()}, {"vectors", std::move(vecs)}};
  }
  return out;
}

// Arrow maps for the expected McKay arrows; absent ones are zero.
std::map<ArrowKey, QMatrix> arrows_from_json(const json& j, const DynkinType& type, bool affine,
                                             const std::vector<int>& dims) {
  std::map<ArrowKey, QMatrix> maps;
  for (const auto& arrow : mckay_arrows(type, affine)) {
    const ArrowKey key{arrow.source.label, arrow.target.label, arrow.pair_index};
    maps.emplace(key, QMatrix(dims[key.to], dims[key.from]));
  }
  if (!j.contains("arrows")) return maps;
  const json& arr = j["arrows"];
  if (!arr.is_array()) throw ParseError("$.arrows", "expected an array");
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string p = "$.arrows[" + std::to_string(k) + "]";
    const ArrowKey key{int_from_json(field(arr[k], "from", p), p + ".from"),
                       int_from_json(field(arr[k], "to", p), p + ".to"),
                       arr[k].contains("pair_index")
                           ? int_from_json(arr[k]["pair_index"], p + ".pair_index")
                           : 0};
    auto it = maps.find(key);
    if (it == maps.end()) throw ParseError(p, "no McKay arrow " + to_string(key) + " in " + type.name());
    it->second = matrix_from_json(field(arr[k], "matrix", p), dims[key.to], dims[key.from], p + ".matrix");
  }
  return maps;
}

json arrows_to_json(const std::map<ArrowKey, QMatrix>& maps) {
  json arr = json::array();
  for (const auto& [key, m] : maps) {
    arr.push_back({{"from", key.from}, {"to", key.to}, {"pair_index", key.pair}, {"matrix", to_json(m)}});
  }
  return arr;
}

}  // namespace

json read_file(const std::string& file) {
  const std::string text = slurp(file);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(file, std::string("invalid JSON: ") + e.what());
  }
}

std::string digest(const std::string& file) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : slurp(file)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    throw ParseError(path, e.what());
  }
}

QMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError(path, "expected " + std::to_string(rows) + " rows");
  }
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != cols) {
      throw ParseError(rp, "expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t k = 0; k < cols; ++k) {
      m(i, k) = rational_from_json(j[i][k], rp + "[" + std::to_string(k) + "]");
    }
  }
  return m;
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(to_string(m(i, k)));
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const Polynomial& p) {
  json c = json::array();
  for (const auto& q : p.coefficients()) c.push_back(to_string(q));
  return c;
}

DeformationParam deformation_from_json(const json& j) {
  const DynkinType type = type_from_json(field(j, "type", "$"), "$.type");
  const json& th = field(j, "theta", "$");
  if (!th.is_object()) throw ParseError("$.theta", "expected an object keyed by node");
  const int nn = type.node_count(true);
  std::map<int, Polynomial> given;
  for (const auto& [key, val] : th.items()) {
    const std::string p = "$.theta." + key;
    given[node_key(key, nn, p)] = polynomial_from_json(val, p);
  }
  const bool enforce = j.contains("constrained") && j["constrained"].is_boolean() && j["constrained"].get<bool>();
  try {
    if (!given.count(0)) {
      for (int a = 1; a < nn; ++a) {
        if (!given.count(a)) throw ParseError("$.theta." + std::to_string(a), "missing finite node");
      }
      return complete_affine_theta(type, given);
    }
    std::vector<Polynomial> theta(nn);
    for (int a = 0; a < nn; ++a) {
      if (!given.count(a)) throw ParseError("$.theta." + std::to_string(a), "missing node");
      theta[a] = given[a];
    }
    return enforce ? DeformationParam::constrained(type, std::move(theta))
                   : DeformationParam::unconstrained(type, std::move(theta));
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError("$.theta", e.what());
  }
}

json to_json(const DeformationParam& d) {
  json th = json::object();
  for (std::size_t a = 0; a < d.theta().size(); ++a) th[std::to_string(a)] = to_json(d.theta(a));
  return {{"type", d.type().name()}, {"theta", th}, {"constrained", d.is_constrained()}};
}

N1Representation representation_from_json(const json& j) {
  const DynkinType type = type_from_json(field(j, "type", "$"), "$.type");
  const bool affine = j.contains("affine") ? j["affine"].get<bool>() : true;
  const int nn = type.node_count(true);
  std::vector<int> dims(nn, 0);
  if (j.contains("dims")) {
    const json& dj = j["dims"];
    if (!dj.is_object()) throw ParseError("$.dims", "expected an object keyed by node");
    for (const auto& [key, val] : dj.items()) {
      const std::string p = "$.dims." + key;
      const int a = node_key(key, nn, p);
      dims[a] = int_from_json(val, p);
      if (dims[a] < 0) throw ParseError(p, "negative dimension");
    }
  }
  if (!affine && dims[0] != 0) throw ParseError("$.dims.0", "finite-quiver representation needs dim 0 at node 0");

  N1Representation rep = N1Representation::zero(type, dims, affine);
  rep.B = arrows_from_json(j, type, affine, dims);
  if (j.contains("psi")) {
    const json& pj = j["psi"];
    if (!pj.is_object()) throw ParseError("$.psi", "expected an object keyed by node");
    for (const auto& [key, val] : pj.items()) {
      const std::string p = "$.psi." + key;
      const int a = node_key(key, nn, p);
      rep.psi[a] = matrix_from_json(val, dims[a], dims[a], p);
    }
  }
  rep.framing = framing_from_json(j.contains("framing") ? j["framing"] : json(), dims, "$.framing");
  rep.validate();
  return rep;
}

json to_json(const N1Representation& rep) {
  json dims = json::object(), psi = json::object();
  for (std::size_t a = 0; a < rep.dims.size(); ++a) {
    dims[std::to_string(a)] = rep.dims[a];
    psi[std::to_string(a)] = to_json(rep.psi[a]);
  }
  return {{"type", rep.type.name()}, {"affine", rep.affine}, {"dims", dims},
          {"arrows", arrows_to_json(rep.B)}, {"psi", psi}, {"framing", framing_to_json(rep.framing)}};
}

TorsionSheafData sheaf_from_json(const json& j, const std::string& path) {
  const json& pts = field(j, "points", path);
  if (!pts.is_array()) throw ParseError(path + ".points", "expected an array");
  TorsionSheafData s;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const std::string p = path + ".points[" + std::to_string(k) + "]";
    const json& sup = field(pts[k], "support", p);
    SheafPoint pt;
    if (sup.is_object()) {
      const json& re = field(sup, "re", p + ".support");
      const json& im = field(sup, "im", p + ".support");
      if (!re.is_number() || !im.is_number()) throw ParseError(p + ".support", "re and im must be numbers");
      pt.support = Complex(re.get<double>(), im.get<double>());
    } else {
      pt.support = rational_from_json(sup, p + ".support");
    }
    const json& part = field(pts[k], "partition", p);
    if (!part.is_array()) throw ParseError(p + ".partition", "expected an array");
    for (std::size_t i = 0; i < part.size(); ++i) {
      pt.partition.push_back(int_from_json(part[i], p + ".partition[" + std::to_string(i) + "]"));
    }
    s.points.push_back(std::move(pt));
  }
  try {
    s.validate();
  } catch (const InputError& e) {
    throw ParseError(path, e.what());
  }
  return s;
}

json to_json(const TorsionSheafData& s) {
  json pts = json::array();
  for (const auto& p : s.points) {
    json sup = std::holds_alternative<Rational>(p.support) ? to_json(std::get<Rational>(p.support))
                                                           : to_json(std::get<Complex>(p.support));
    pts.push_back({{"support", sup}, {"partition", p.partition}});
  }
  return {{"points", pts}};
}

QuiverSheafData quiver_sheaf_from_json(const json& j) {
  QuiverSheafData q;
  q.type = type_from_json(field(j, "type", "$"), "$.type");
  q.affine = j.contains("affine") ? j["affine"].get<bool>() : true;
  const int nn = q.type.node_count(true);
  q.node_sheaves.assign(nn, TorsionSheafData{});
  if (j.contains("nodes")) {
    const json& nj = j["nodes"];
    if (!nj.is_object()) throw ParseError("$.nodes", "expected an object keyed by node");
    for (const auto& [key, val] : nj.items()) {
      const std::string p = "$.nodes." + key;
      q.node_sheaves[node_key(key, nn, p)] = sheaf_from_json(val, p);
    }
  }
  std::vector<int> dims(nn);
  for (int a = 0; a < nn; ++a) dims[a] = q.node_sheaves[a].length();
  if (!q.affine && dims[0] != 0) throw ParseError("$.nodes.0", "finite-quiver data needs an empty sheaf at node 0");
  q.arrow_maps = arrows_from_json(j, q.type, q.affine, dims);
  q.framing = framing_from_json(j.contains("framing") ? j["framing"] : json(), dims, "$.framing");
  return q;
}

json to_json(const QuiverSheafData& q) {
  json nodes = json::object();
  for (std::size_t a = 0; a < q.node_sheaves.size(); ++a) nodes[std::to_string(a)] = to_json(q.node_sheaves[a]);
  return {{"type", q.type.name()}, {"affine", q.affine}, {"nodes", nodes},
          {"arrows", arrows_to_json(q.arrow_maps)}, {"framing", framing_to_json(q.framing)}};
}

}  // namespace ade::io
