#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "flasque/lattices.hpp"
#include "flasque/report.hpp"

namespace flasque {

/// {"overall": "pass"|"fail", "checks": [{"id", "status", "statement", "witness"?}]}
nlohmann::json report_to_json(const CheckReport& report);
/// Throws ParseError.
CheckReport report_from_json(const nlohmann::json& j);
/// One "PASS id: statement [witness]" line per record, then a summary line.
std::string report_to_text(const CheckReport& report);

struct NamedMap {
  std::string dom;
  std::string cod;
  LatticeMap map;
};

/// Lattices and maps over one group, as stored in a lattice file.
struct LatticeFile {
  GroupPtr group;
  std::map<std::string, GLattice> lattices;
  std::map<std::string, NamedMap> maps;

  const GLattice& lattice(const std::string& name) const;  // UnknownName
  const LatticeMap& map(const std::string& name) const;    // UnknownName
};

/// Throws ParseError for malformed documents and UnknownName for dangling
/// labels or lattice names; lattice validation errors propagate.
LatticeFile parse_lattice_file(const std::string& text);
LatticeFile read_lattice_file(const std::string& path);
nlohmann::json lattice_file_to_json(const LatticeFile& file);

/// Z, ZG, IG, Tstar, P, F over klein_four() with the maps epsilon (ZG -> Z),
/// iota (IG -> ZG), norm (Z -> Tstar), proj (Tstar -> IG), inj (F -> P) and
/// surj (P -> Tstar).
LatticeFile klein_preset();

/// "G" for the whole group, otherwise comma-separated element labels whose
/// generated subgroup is taken ("1" gives the trivial subgroup).
Subgroup parse_subgroup(const GroupPtr& g, const std::string& spec);

}  // namespace flasque
