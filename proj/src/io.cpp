#include "flasque/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "flasque/error.hpp"
#include "flasque/klein.hpp"

namespace flasque {

using nlohmann::json;

json report_to_json(const CheckReport& report) {
  json checks = json::array();
  for (const auto& r : report.records()) {
    json c = {{"id", r.id}, {"status", r.passed ? "pass" : "fail"}, {"statement", r.statement}};
    if (r.witness) c["witness"] = *r.witness;
    checks.push_back(std::move(c));
  }
  return {{"overall", report.passed() ? "pass" : "fail"}, {"checks", std::move(checks)}};
}

CheckReport report_from_json(const json& j) {
  try {
    CheckReport report;
    for (const auto& c : j.at("checks")) {
      const std::string status = c.at("status").get<std::string>();
      if (status != "pass" && status != "fail") throw Error(Errc::ParseError, "status must be pass or fail");
      std::optional<std::string> witness;
      if (c.contains("witness")) witness = c.at("witness").get<std::string>();
      report.add(c.at("id").get<std::string>(), status == "pass", c.at("statement").get<std::string>(), witness);
    }
    const std::string overall = j.at("overall").get<std::string>();
    if (overall != (report.passed() ? "pass" : "fail")) throw Error(Errc::ParseError, "overall status disagrees with checks");
    return report;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string report_to_text(const CheckReport& report) {
  std::ostringstream os;
  for (const auto& r : report.records()) {
    os << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.statement;
    if (r.witness) os << " [" << *r.witness << "]";
    os << '\n';
  }
  os << report.records().size() << " checks, " << report.failures() << " failed\n";
  return os.str();
}

const GLattice& LatticeFile::lattice(const std::string& name) const {
  auto it = lattices.find(name);
  if (it == lattices.end()) throw Error(Errc::UnknownName, "no lattice named " + name);
  return it->second;
}

const LatticeMap& LatticeFile::map(const std::string& name) const {
  auto it = maps.find(name);
  if (it == maps.end()) throw Error(Errc::UnknownName, "no map named " + name);
  return it->second.map;
}

namespace {

Integer to_integer(const json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<unsigned long long>()));
  if (v.is_string()) {
    Integer x;
    if (x.set_str(v.get<std::string>(), 10) != 0) throw Error(Errc::ParseError, "not an integer: " + v.dump());
    return x;
  }
  throw Error(Errc::ParseError, "not an integer: " + v.dump());
}

json from_integer(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

IntMatrix to_matrix(const json& rows, std::size_t n_rows, std::size_t n_cols, const std::string& what) {
  if (!rows.is_array() || rows.size() != n_rows) throw Error(Errc::ParseError, what + ": expected " + std::to_string(n_rows) + " rows");
  IntMatrix m(n_rows, n_cols);
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n_cols)
      throw Error(Errc::ParseError, what + ": expected rows of length " + std::to_string(n_cols));
    for (std::size_t j = 0; j < n_cols; ++j) m(i, j) = to_integer(rows[i][j]);
  }
  return m;
}

json from_matrix(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(from_integer(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw Error(Errc::ParseError, where + ": missing \"" + key + "\"");
  return obj.at(key);
}

GroupPtr parse_group(const json& g) {
  const json& elements = field(g, "elements", "group");
  const json& table = field(g, "table", "group");
  if (!elements.is_array() || !table.is_array()) throw Error(Errc::ParseError, "group: elements and table must be arrays");
  std::vector<std::string> labels;
  for (const auto& e : elements) {
    if (!e.is_string()) throw Error(Errc::ParseError, "group: element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::vector<int>> rows;
  for (const auto& row : table) {
    if (!row.is_array()) throw Error(Errc::ParseError, "group: table rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw Error(Errc::ParseError, "group: table entries must be integers");
      r.push_back(x.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return make_group(std::move(labels), std::move(rows));
}

}  // namespace

LatticeFile parse_lattice_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::ParseError, "top level must be an object");
  LatticeFile file{parse_group(field(doc, "group", "file")), {}, {}};
  const auto& g = *file.group;

  const json& lattices = field(doc, "lattices", "file");
  if (!lattices.is_object()) throw Error(Errc::ParseError, "lattices must be an object");
  for (const auto& [name, spec] : lattices.items()) {
    const json& rank_field = field(spec, "rank", name);
    if (!rank_field.is_number_unsigned()) throw Error(Errc::ParseError, name + ": rank must be a nonnegative integer");
    const auto rank = rank_field.get<std::size_t>();
    const json& action = field(spec, "action", name);
    if (!action.is_object()) throw Error(Errc::ParseError, name + ": action must be an object");
    for (const auto& item : action.items())
      if (std::find(g.labels().begin(), g.labels().end(), item.key()) == g.labels().end())
        throw Error(Errc::UnknownName, name + ": no element labelled " + item.key());
    std::vector<IntMatrix> matrices;
    for (const auto& label : g.labels()) {
      if (!action.contains(label)) throw Error(Errc::ParseError, name + ": no action given for element " + label);
      matrices.push_back(to_matrix(action.at(label), rank, rank, name + "[" + label + "]"));
    }
    file.lattices.emplace(name, GLattice(file.group, std::move(matrices)));
  }

  if (doc.contains("maps")) {
    const json& maps = doc.at("maps");
    if (!maps.is_object()) throw Error(Errc::ParseError, "maps must be an object");
    for (const auto& [name, spec] : maps.items()) {
      const json& dom = field(spec, "dom", name);
      const json& cod = field(spec, "cod", name);
      if (!dom.is_string() || !cod.is_string()) throw Error(Errc::ParseError, name + ": dom and cod must be names");
      const GLattice& d = file.lattice(dom.get<std::string>());
      const GLattice& c = file.lattice(cod.get<std::string>());
      IntMatrix m = to_matrix(field(spec, "matrix", name), c.rank(), d.rank(), name);
      file.maps.emplace(name, NamedMap{dom.get<std::string>(), cod.get<std::string>(), LatticeMap(d, c, std::move(m))});
    }
  }
  return file;
}

LatticeFile read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_lattice_file(ss.str());
}

json lattice_file_to_json(const LatticeFile& file) {
  const auto& g = *file.group;
  json doc;
  doc["group"] = {{"elements", g.labels()}, {"table", g.table()}};
  doc["lattices"] = json::object();
  for (const auto& [name, m] : file.lattices) {
    json action = json::object();
    for (int x = 0; x < static_cast<int>(g.order()); ++x) action[g.label(x)] = from_matrix(m.action(x));
    doc["lattices"][name] = {{"rank", m.rank()}, {"action", std::move(action)}};
  }
  doc["maps"] = json::object();
  for (const auto& [name, f] : file.maps) {
    if (!(file.lattice(f.dom) == f.map.domain()) || !(file.lattice(f.cod) == f.map.codomain()))
      throw Error(Errc::UnknownName, name + ": domain or codomain does not match the named lattice");
    doc["maps"][name] = {{"dom", f.dom}, {"cod", f.cod}, {"matrix", from_matrix(f.map.matrix())}};
  }
  return doc;
}

LatticeFile klein_preset() {
  const KleinData k = build_T_star();
  const CoflasqueResolution res = build_paper_resolution(k);
  LatticeFile file{k.G, {}, {}};
  const GLattice z = trivial_lattice(k.G, 1);
  file.lattices.emplace("Z", z);
  file.lattices.emplace("ZG", k.ZG);
  file.lattices.emplace("IG", k.IG);
  file.lattices.emplace("Tstar", k.Tstar);
  file.lattices.emplace("P", res.P);
  file.lattices.emplace("F", res.F);
  file.maps.emplace("epsilon", NamedMap{"ZG", "Z", augmentation(k.G)});
  file.maps.emplace("iota", NamedMap{"IG", "ZG", k.ig_inclusion});
  file.maps.emplace("norm", NamedMap{"Z", "Tstar", k.z_to_tstar});
  file.maps.emplace("proj", NamedMap{"Tstar", "IG", k.tstar_to_ig});
  file.maps.emplace("inj", NamedMap{"F", "P", res.inj});
  file.maps.emplace("surj", NamedMap{"P", "Tstar", res.surj});
  return file;
}

Subgroup parse_subgroup(const GroupPtr& g, const std::string& spec) {
  if (spec == "G") return Subgroup::whole(g);
  std::vector<int> generators;
  std::stringstream ss(spec);
  std::string label;
  while (std::getline(ss, label, ',')) {
    if (label.empty()) throw Error(Errc::ParseError, "empty label in subgroup " + spec);
    try {
      generators.push_back(g->index_of(label));
    } catch (const Error&) {
      throw Error(Errc::UnknownName, "no element labelled " + label);
    }
  }
  if (generators.empty()) throw Error(Errc::ParseError, "empty subgroup specification");
  return Subgroup::generated_by(g, generators);
}

}  // namespace flasque
