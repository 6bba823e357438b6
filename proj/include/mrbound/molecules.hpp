#pragma once

// Diatomic molecule registry and conversion of dimensionless energies to eV.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mrbound {

struct Molecule {
  std::string name;
  double reduced_mass_amu = 0.0;
};

struct UnitContext {
  double hbar_c_eV_pm = 197329.0;     ///< 1973.29 eV Angstrom
  double amu_eV = 931.4940954e6;      ///< 1 amu in eV
};

/// E (hbar c)^2 / (2 mu c^2 b^2) with b in pm. Throws DomainError unless b > 0.
double energy_to_eV(double dimensionless_E, const Molecule& mol, double b_pm,
                    const UnitContext& ctx = {});

/// Name -> reduced mass. Immutable once built, so concurrent reads are safe.
class MoleculeRegistry {
 public:
  /// The ten molecules of the ro-vibrational tables.
  static MoleculeRegistry builtin();

  /// Reads a JSON array of {"name", "reduced_mass_amu"} objects.
  /// Throws LookupError for unreadable files, malformed entries or duplicate names.
  static MoleculeRegistry from_json_file(const std::filesystem::path& path);
  static MoleculeRegistry from_json_text(std::string_view text);

  /// Entries of `other` replace same-named entries here; new names are added.
  void merge(const MoleculeRegistry& other);

  /// Throws LookupError listing the known names.
  [[nodiscard]] const Molecule& lookup(std::string_view name) const;
  [[nodiscard]] bool contains(std::string_view name) const;
  [[nodiscard]] std::vector<Molecule> all() const;  ///< sorted by name

 private:
  void insert(Molecule m);

  std::map<std::string, Molecule, std::less<>> entries_;
};

/// lookup in the built-in registry.
const Molecule& lookup_molecule(std::string_view name);

}  // namespace mrbound
