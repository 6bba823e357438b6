#pragma once

// Row layouts of the ro-vibrational tables, parallel evaluation and CSV output.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mrbound/centrifugal.hpp"
#include "mrbound/core_model.hpp"
#include "mrbound/molecules.hpp"

namespace mrbound {

enum class TableId { T1, T2, T3, T4, T5, T6, Custom };

/// "t1".."t6", "custom" (case-insensitive). Throws DomainError otherwise.
TableId parse_table_id(std::string_view name);

/// Scheme selection that is resolved per parameter set (Wei-Dong depends on p).
struct SchemeChoice {
  SchemeVariant variant = SchemeVariant::Improved;
  double d0 = kTabulatedImprovedD0;  ///< used by Improved only

  [[nodiscard]] ApproxScheme resolve(const PotentialParams& p) const;
};

struct TableRow {
  QuantumState state;
  double inv_b = 0.0;
};

/// State / 1/b rows as printed: 2p, 3p at 1/b = 0.025..0.100, 3d to 0.075
/// (Table 1) or 0.100 (molecule tables), 4p-4f to 0.075 and 5p-6g at 0.025.
std::vector<TableRow> table_rows(TableId id);

/// Molecule pair of tables T2..T6. Throws DomainError for T1 and Custom.
std::pair<std::string, std::string> table_molecules(TableId id);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> warnings;  ///< advisory notes, not part of the data
};

/// Comma-separated, header first, LF endings.
std::string to_csv(const Table& t);
/// Space-aligned columns for terminals.
std::string to_pretty(const Table& t);

std::string format_fixed(double v, int decimals);
/// Significant-digit formatting that keeps trailing zeros ("0.0827750").
std::string format_significant(double v, int digits);
/// Shortest of up to 6 significant digits ("0.2", "1.5").
std::string format_compact(double v);

/// Runs fn(0..n-1) on a small thread pool. Rethrows the first exception.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// -E in Hartree (A = 2b, b = 1/inv_b) or nullopt when unbound.
std::optional<double> table1_cell(double alpha, const ApproxScheme& s, const TableRow& row);

/// -E in eV with A = 2b (b in pm); alpha = 0 uses the Hulthen reduction.
std::optional<double> molecule_cell(double alpha, const SchemeChoice& scheme,
                                    const Molecule& mol, const TableRow& row,
                                    const UnitContext& ctx = {});

/// Alpha columns of the molecule tables; 0 stands for the shared alpha = 0, 1 column.
inline constexpr double kMoleculeTableAlphas[] = {0.0, 0.75, 1.5};
inline constexpr double kTable1Alphas[] = {0.75, 1.5};

/// Table 1 layout: per alpha a scheme column and, optionally, the usual-scheme
/// and numerical columns. Values at 7 decimals.
Table build_table1(const SchemeChoice& scheme, bool with_usual, bool with_numerical);

/// Molecule table for the given molecules; values at 6 significant digits.
Table build_molecule_table(TableId id, const std::vector<Molecule>& molecules,
                           const SchemeChoice& scheme, const UnitContext& ctx = {});

struct CustomRequest {
  std::vector<QuantumState> states;
  std::vector<double> inv_b;
  std::vector<double> alphas;
  std::optional<double> A;  ///< defaults to 2b
  std::optional<Molecule> molecule;
  SchemeChoice scheme;
};

/// Arbitrary states x 1/b grid. Adds warnings for 1/b outside the tabulated
/// range and for |alpha(alpha-1)/A| >= 0.1.
Table build_custom_table(const CustomRequest& req, const UnitContext& ctx = {});

struct CompareRow {
  QuantumState state;
  double inv_b = 0.0;
  double alpha = 0.0;
  std::optional<double> analytic;   ///< -E in Hartree
  std::optional<double> numerical;  ///< -E in Hartree
  std::string status = "ok";
};

struct CompareRequest {
  std::vector<QuantumState> states;
  std::vector<double> inv_b;
  std::vector<double> alphas;
  std::optional<double> A;
  SchemeChoice scheme;
  int steps = 20000;
  double tol = 1e-9;
};

/// Closed form vs numerical eigenvalue per (alpha, state, 1/b). Solver
/// failures are reported in the row status.
std::vector<CompareRow> compare_rows(const CompareRequest& req);
Table compare_table(const std::vector<CompareRow>& rows);

/// r = 0 followed by points-1 log-spaced radii from 1e-4 b to 45 b/epsilon.
std::vector<double> wavefunction_grid(double b, double epsilon, int points);

}  // namespace mrbound
