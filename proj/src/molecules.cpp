#include "mrbound/molecules.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mrbound/errors.hpp"

namespace mrbound {

double energy_to_eV(double dimensionless_E, const Molecule& mol, double b_pm,
                    const UnitContext& ctx) {
  if (!(b_pm > 0.0)) {
    throw DomainError("range parameter b must be positive");
  }
  const double mu_c2 = mol.reduced_mass_amu * ctx.amu_eV;
  return dimensionless_E * ctx.hbar_c_eV_pm * ctx.hbar_c_eV_pm / (2.0 * mu_c2 * b_pm * b_pm);
}

MoleculeRegistry MoleculeRegistry::builtin() {
  MoleculeRegistry reg;
  for (const auto& [name, mu] : {std::pair{"HCl", 0.9801045}, {"CH", 0.929931},
                                 {"LiH", 0.8801221}, {"CO", 6.8606719}, {"NO", 7.468441},
                                 {"O2", 7.997457504}, {"I2", 63.45223502}, {"N2", 7.00335},
                                 {"H2", 0.50407}, {"Ar2", 19.9812}}) {
    reg.insert({name, mu});
  }
  return reg;
}

MoleculeRegistry MoleculeRegistry::from_json_text(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LookupError(std::string("molecule file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) {
    throw LookupError("molecule file must hold a JSON array");
  }
  MoleculeRegistry reg;
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("name") || !item.contains("reduced_mass_amu") ||
        !item["name"].is_string() || !item["reduced_mass_amu"].is_number()) {
      throw LookupError("molecule entries need a string \"name\" and a numeric \"reduced_mass_amu\"");
    }
    Molecule m{item["name"].get<std::string>(), item["reduced_mass_amu"].get<double>()};
    if (m.name.empty() || !(m.reduced_mass_amu > 0.0) || !std::isfinite(m.reduced_mass_amu)) {
      throw LookupError("molecule '" + m.name + "' needs a non-empty name and a positive mass");
    }
    if (reg.contains(m.name)) {
      throw LookupError("molecule '" + m.name + "' is listed twice");
    }
    reg.insert(std::move(m));
  }
  return reg;
}

MoleculeRegistry MoleculeRegistry::from_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw LookupError("cannot read molecule file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

void MoleculeRegistry::merge(const MoleculeRegistry& other) {
  for (const auto& [name, m] : other.entries_) {
    entries_.insert_or_assign(name, m);
  }
}

const Molecule& MoleculeRegistry::lookup(std::string_view name) const {
  if (auto it = entries_.find(name); it != entries_.end()) {
    return it->second;
  }
  std::string known;
  for (const auto& [key, m] : entries_) {
    known += known.empty() ? key : ", " + key;
  }
  throw LookupError("unknown molecule '" + std::string(name) + "' (known: " + known + ")");
}

bool MoleculeRegistry::contains(std::string_view name) const {
  return entries_.find(name) != entries_.end();
}

std::vector<Molecule> MoleculeRegistry::all() const {
  std::vector<Molecule> out;
  out.reserve(entries_.size());
  for (const auto& [name, m] : entries_) {
    out.push_back(m);
  }
  return out;
}

void MoleculeRegistry::insert(Molecule m) {
  std::string key = m.name;
  entries_.insert_or_assign(std::move(key), std::move(m));
}

const Molecule& lookup_molecule(std::string_view name) {
  static const MoleculeRegistry reg = MoleculeRegistry::builtin();
  return reg.lookup(name);
}

}  // namespace mrbound
