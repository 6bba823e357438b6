// mrbound: bound states of the Manning-Rosen potential from the command line.
//
// Exit codes: 0 ok, 2 usage, 3 unbound level or no eigenvalue, 4 I/O.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mrbound/centrifugal.hpp"
#include "mrbound/core_model.hpp"
#include "mrbound/errors.hpp"
#include "mrbound/molecules.hpp"
#include "mrbound/numerov.hpp"
#include "mrbound/spectrum.hpp"
#include "mrbound/tables.hpp"
#include "mrbound/wavefunction.hpp"

namespace {

using namespace mrbound;

constexpr int kExitUsage = 2;
constexpr int kExitUnbound = 3;
constexpr int kExitIo = 4;

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string scheme = "improved";
  std::optional<double> d0;
  std::string format = "csv";
  std::string molecule_file;
  std::string out;
};

// Potential given as --alpha with --A or --A2b, and --b or --invb.
struct PotentialFlags {
  double alpha = 0.0;
  std::optional<double> A;
  bool A2b = false;
  std::optional<double> b;
  std::optional<double> inv_b;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "dimensionless shape parameter")->required();
    cmd->add_option("--A", A, "potential strength (overrides --A2b)");
    cmd->add_flag("--A2b", A2b, "use A = 2b");
    auto* ob = cmd->add_option("--b", b, "range parameter");
    auto* oi = cmd->add_option("--invb", inv_b, "screening parameter 1/b");
    ob->excludes(oi);
  }

  [[nodiscard]] PotentialParams resolve() const {
    if (!b && !inv_b) {
      throw DomainError("one of --b or --invb is required");
    }
    if (inv_b && !(*inv_b > 0.0)) {
      throw DomainError("--invb must be positive");
    }
    const double range = b ? *b : 1.0 / *inv_b;
    if (!A && !A2b) {
      throw DomainError("one of --A or --A2b is required");
    }
    PotentialParams p{alpha, A ? *A : 2.0 * range, range};
    p.validate();
    return p;
  }
};

SchemeChoice scheme_choice(const Globals& g) {
  SchemeChoice c;
  c.variant = parse_scheme_variant(g.scheme);
  if (g.d0) {
    c.d0 = *g.d0;
  }
  return c;
}

MoleculeRegistry registry(const Globals& g) {
  MoleculeRegistry reg = MoleculeRegistry::builtin();
  if (!g.molecule_file.empty()) {
    try {
      reg.merge(MoleculeRegistry::from_json_file(g.molecule_file));
    } catch (const LookupError& e) {
      throw IoFailure(e.what());
    }
  }
  return reg;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) {
        out.push_back(part);
      }
    }
  }
  return out;
}

std::vector<double> parse_doubles(const std::vector<std::string>& items) {
  std::vector<double> out;
  for (const auto& s : split_list(items)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) {
      throw DomainError("not a number: '" + s + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<QuantumState> parse_states(const std::vector<std::string>& items) {
  std::vector<QuantumState> out;
  for (const auto& s : split_list(items)) {
    out.push_back(parse_state_label(s));
  }
  return out;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) {
      throw IoFailure("cannot write to standard output");
    }
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) {
    throw IoFailure("cannot open " + g.out + " for writing");
  }
  f << text;
  if (!f.flush()) {
    throw IoFailure("cannot write " + g.out);
  }
}

std::string render(const Globals& g, const Table& t) {
  return g.format == "pretty" ? to_pretty(t) : to_csv(t);
}

void warn(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) {
    std::cerr << "warning: " << w << '\n';
  }
}

int run_energy(const Globals& g, const PotentialFlags& pf, const std::string& label,
               const std::string& molecule_name) {
  const PotentialParams p = pf.resolve();
  const QuantumState q = parse_state_label(label);
  const SchemeChoice choice = scheme_choice(g);
  const ApproxScheme s = choice.resolve(p);
  const SpectrumResult r = energy(p, s, q);
  const double a_c = critical_coupling(p.alpha, s, q);

  Table t;
  t.header = {"state", "alpha", "A", "b", "scheme", "D0", "D1", "D2", "epsilon", "bound",
              "minus_E", "minus_E_hartree", "A_c"};
  t.rows.push_back({q.label(), num(p.alpha), num(p.A), num(p.b), std::string(to_string(choice.variant)),
                    num(s.d0), num(s.d1), num(s.d2), num(r.epsilon), r.bound() ? "true" : "false",
                    r.bound() ? num(-*r.energy) : "", r.bound() ? num(binding_energy_atomic(r, p.b)) : "",
                    num(a_c)});
  if (!molecule_name.empty()) {
    const Molecule& mol = registry(g).lookup(molecule_name);
    t.header.push_back("molecule");
    t.header.push_back("minus_E_eV");
    t.rows[0].push_back(mol.name);
    t.rows[0].push_back(r.bound() ? num(-energy_to_eV(*r.energy, mol, p.b)) : "");
  }
  if (!validity_flags(p).alpha_term_small) {
    t.warnings.push_back("|alpha(alpha-1)/A| >= 0.1; the approximate spectrum is outside its usual range");
  }
  warn(t.warnings);
  emit(g, render(g, t));
  if (!r.bound()) {
    std::cerr << "error: " << q.label() << " is not bound (A = " << num(p.A)
              << ", A_c = " << num(a_c) << ")\n";
    return kExitUnbound;
  }
  return 0;
}

struct TableFlags {
  std::string id;
  std::string molecule;
  bool numerical = false;
  bool no_usual = false;
  std::vector<std::string> states;
  std::vector<std::string> inv_b;
  std::vector<std::string> alphas;
  std::optional<double> A;
};

int run_table(const Globals& g, const TableFlags& tf) {
  const TableId id = parse_table_id(tf.id);
  const SchemeChoice choice = scheme_choice(g);
  Table t;
  if (id == TableId::T1) {
    t = build_table1(choice, !tf.no_usual, tf.numerical);
  } else if (id == TableId::Custom) {
    CustomRequest req;
    req.states = parse_states(tf.states);
    req.inv_b = parse_doubles(tf.inv_b);
    req.alphas = tf.alphas.empty() ? std::vector<double>{0.75, 1.5} : parse_doubles(tf.alphas);
    req.A = tf.A;
    req.scheme = choice;
    if (!tf.molecule.empty()) {
      req.molecule = registry(g).lookup(tf.molecule);
    }
    t = build_custom_table(req);
  } else {
    const MoleculeRegistry reg = registry(g);
    std::vector<Molecule> mols;
    if (tf.molecule.empty()) {
      const auto [first, second] = table_molecules(id);
      mols = {reg.lookup(first), reg.lookup(second)};
    } else {
      mols = {reg.lookup(tf.molecule)};
    }
    t = build_molecule_table(id, mols, choice);
  }
  warn(t.warnings);
  emit(g, render(g, t));
  return 0;
}

struct CompareFlags {
  std::vector<std::string> states{"2p,3p,4p,5p,6p"};
  std::vector<std::string> inv_b{"0.025"};
  std::vector<std::string> alphas{"0.75"};
  std::optional<double> A;
  int steps = 20000;
  double tol = 1e-9;
};

int run_compare(const Globals& g, const CompareFlags& cf) {
  CompareRequest req;
  req.states = parse_states(cf.states);
  req.inv_b = parse_doubles(cf.inv_b);
  req.alphas = parse_doubles(cf.alphas);
  req.A = cf.A;
  req.scheme = scheme_choice(g);
  req.steps = cf.steps;
  req.tol = cf.tol;
  emit(g, render(g, compare_table(compare_rows(req))));
  return 0;
}

int run_wavefunction(const Globals& g, const PotentialFlags& pf, const std::string& label,
                     int points) {
  const PotentialParams p = pf.resolve();
  const QuantumState q = parse_state_label(label);
  const ApproxScheme s = scheme_choice(g).resolve(p);
  const WavefunctionSpec spec = make_wavefunction(p, s, q);
  const std::vector<double> r = wavefunction_grid(p.b, spec.epsilon, points);
  const std::vector<double> u = sample_wavefunction(spec, r);

  std::string text = "r,u\n";
  for (std::size_t i = 0; i < r.size(); ++i) {
    text += num(r[i]) + "," + num(u[i]) + "\n";
  }
  char tail[128];
  std::snprintf(tail, sizeof tail, "# norm=%.9f\n# nodes=%d\n", norm_integral(spec).value,
                count_sign_changes(u));
  text += tail;
  emit(g, text);
  return 0;
}

int run_molecules(const Globals& g) {
  Table t;
  t.header = {"name", "reduced_mass_amu"};
  for (const Molecule& m : registry(g).all()) {
    t.rows.push_back({m.name, num(m.reduced_mass_amu)});
  }
  emit(g, render(g, t));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of the Manning-Rosen potential"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Globals g;
  app.add_option("--scheme", g.scheme, "centrifugal approximation")
      ->check(CLI::IsMember({"usual", "improved", "wei-dong"}));
  app.add_option("--d0", g.d0, "D0 for the improved scheme (default 0.082305)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "pretty"}));
  app.add_option("--molecule-file", g.molecule_file, "JSON array of {name, reduced_mass_amu}");
  app.add_option("--out", g.out, "write output to this file");
  app.fallthrough();

  PotentialFlags pf;
  std::string state;
  std::string molecule;

  auto* energy_cmd = app.add_subcommand("energy", "closed-form level of one state");
  pf.add_to(energy_cmd);
  energy_cmd->add_option("--state", state, "spectroscopic label, e.g. 2p")->required();
  energy_cmd->add_option("--molecule", molecule, "also report -E in eV (b in pm)");
  bool ev = false;
  energy_cmd->add_flag("--eV", ev, "require the eV column (needs --molecule)");

  TableFlags tf;
  auto* table_cmd = app.add_subcommand("table", "ro-vibrational tables t1..t6 or custom");
  table_cmd->add_option("id", tf.id, "t1..t6 or custom")->required();
  table_cmd->add_option("--molecule", tf.molecule, "molecule for t2..t6 or custom (eV)");
  table_cmd->add_flag("--numerical", tf.numerical, "t1: add numerical eigenvalue columns");
  table_cmd->add_flag("--no-usual", tf.no_usual, "t1: drop the usual-scheme columns");
  table_cmd->add_option("--states", tf.states, "custom: comma-separated labels");
  table_cmd->add_option("--invb", tf.inv_b, "custom: comma-separated 1/b values");
  table_cmd->add_option("--alpha", tf.alphas, "custom: comma-separated alphas (default 0.75,1.5)");
  table_cmd->add_option("--A", tf.A, "custom: fixed A instead of 2b");

  CompareFlags cf;
  auto* compare_cmd = app.add_subcommand("compare", "closed form against the numerical solver");
  compare_cmd->add_option("--states", cf.states, "comma-separated labels (default 2p..6p)");
  compare_cmd->add_option("--invb", cf.inv_b, "comma-separated 1/b values (default 0.025)");
  compare_cmd->add_option("--alpha", cf.alphas, "comma-separated alphas (default 0.75)");
  compare_cmd->add_option("--A", cf.A, "fixed A instead of 2b");
  compare_cmd->add_option("--steps", cf.steps, "grid points")->check(CLI::Range(1000, 10000000));
  compare_cmd->add_option("--tol", cf.tol, "energy tolerance")->check(CLI::PositiveNumber);

  PotentialFlags wf;
  std::string wf_state;
  int points = 512;
  auto* wave_cmd = app.add_subcommand("wavefunction", "sample u(r) on a log grid");
  wf.add_to(wave_cmd);
  wave_cmd->add_option("--state", wf_state, "spectroscopic label")->required();
  wave_cmd->add_option("--points", points, "number of samples")->check(CLI::Range(2, 10000000));

  auto* mol_cmd = app.add_subcommand("molecules", "list the molecule registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*energy_cmd) {
      if (ev && molecule.empty()) {
        throw DomainError("--eV needs --molecule");
      }
      return run_energy(g, pf, state, molecule);
    }
    if (*table_cmd) {
      return run_table(g, tf);
    }
    if (*compare_cmd) {
      return run_compare(g, cf);
    }
    if (*wave_cmd) {
      return run_wavefunction(g, wf, wf_state, points);
    }
    if (*mol_cmd) {
      return run_molecules(g);
    }
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UnboundStateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnbound;
  } catch (const NoEigenvalueError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnbound;
  } catch (const BracketError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnbound;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
