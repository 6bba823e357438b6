#include "mrbound/tables.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "mrbound/errors.hpp"
#include "mrbound/numerov.hpp"
#include "mrbound/spectrum.hpp"

namespace mrbound {

namespace {

constexpr double kTabulatedInvB[] = {0.025, 0.050, 0.075, 0.100};

PotentialParams table_params(double alpha, double inv_b) {
  const double b = 1.0 / inv_b;
  return {alpha, 2.0 * b, b};
}

std::string alpha_tag(double alpha) { return "a" + format_compact(alpha); }

std::string inv_b_text(double inv_b) { return format_fixed(inv_b, 3); }

std::string cell(const std::optional<double>& v, bool fixed7) {
  if (!v) {
    return {};
  }
  return fixed7 ? format_fixed(*v, 7) : format_significant(*v, 6);
}

}  // namespace

TableId parse_table_id(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  constexpr std::pair<std::string_view, TableId> kNames[] = {
      {"t1", TableId::T1}, {"t2", TableId::T2}, {"t3", TableId::T3},        {"t4", TableId::T4},
      {"t5", TableId::T5}, {"t6", TableId::T6}, {"custom", TableId::Custom}};
  for (const auto& [key, id] : kNames) {
    if (lower == key) {
      return id;
    }
  }
  throw DomainError("unknown table '" + std::string(name) + "' (expected t1..t6 or custom)");
}

ApproxScheme SchemeChoice::resolve(const PotentialParams& p) const {
  switch (variant) {
    case SchemeVariant::Usual:
      return ApproxScheme::usual();
    case SchemeVariant::Improved:
      return ApproxScheme::improved(d0);
    case SchemeVariant::WeiDong:
      return make_scheme(SchemeVariant::WeiDong, p);
  }
  throw DomainError("unknown scheme variant");
}

std::vector<TableRow> table_rows(TableId id) {
  if (id == TableId::Custom) {
    throw DomainError("custom tables have no fixed rows");
  }
  const int last_3d = id == TableId::T1 ? 3 : 4;
  std::vector<TableRow> rows;
  auto add = [&](std::string_view label, int count) {
    const QuantumState q = parse_state_label(label);
    for (int i = 0; i < count; ++i) {
      rows.push_back({q, kTabulatedInvB[i]});
    }
  };
  add("2p", 4);
  add("3p", 4);
  add("3d", last_3d);
  for (auto label : {"4p", "4d", "4f"}) {
    add(label, 3);
  }
  for (auto label : {"5p", "5d", "5f", "5g", "6p", "6d", "6f", "6g"}) {
    add(label, 1);
  }
  return rows;
}

std::pair<std::string, std::string> table_molecules(TableId id) {
  switch (id) {
    case TableId::T2:
      return {"HCl", "CH"};
    case TableId::T3:
      return {"LiH", "CO"};
    case TableId::T4:
      return {"NO", "O2"};
    case TableId::T5:
      return {"I2", "N2"};
    case TableId::T6:
      return {"H2", "Ar2"};
    default:
      throw DomainError("only tables t2..t6 have molecules");
  }
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string format_significant(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.*g", digits, v);
  std::string s = buf;
  if (!s.empty() && s.back() == '.') {
    s.pop_back();
  }
  return s;
}

std::string format_compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) {
        out += ',';
      }
      out += cells[i];
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) {
    line(r);
  }
  return out;
}

std::string to_pretty(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) {
      width[i] = std::max(width[i], cells[i].size());
    }
  };
  measure(t.header);
  for (const auto& r : t.rows) {
    measure(r);
  }
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string& c = cells[i].empty() ? std::string("-") : cells[i];
      if (i) {
        out += "  ";
      }
      out += std::string(width[i] > c.size() ? width[i] - c.size() : 0, ' ') + c;
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) {
    line(r);
  }
  return out;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

std::optional<double> table1_cell(double alpha, const ApproxScheme& s, const TableRow& row) {
  const PotentialParams p = table_params(alpha, row.inv_b);
  const SpectrumResult r = energy(p, s, row.state);
  if (!r.bound()) {
    return std::nullopt;
  }
  return binding_energy_atomic(r, p.b);
}

std::optional<double> molecule_cell(double alpha, const SchemeChoice& scheme,
                                    const Molecule& mol, const TableRow& row,
                                    const UnitContext& ctx) {
  const PotentialParams p = table_params(alpha, row.inv_b);
  SpectrumResult r;
  if (alpha == 0.0) {
    // Hulthen form with hbar = 1, mu = 1/2, so energies come out in 1/b^2 units.
    const HulthenParams h{p.A * row.inv_b, row.inv_b, 0.5};
    r = hulthen_energy(h, scheme.resolve(p), row.state);
    if (r.energy) {
      *r.energy /= row.inv_b * row.inv_b;
    }
  } else {
    r = energy(p, scheme.resolve(p), row.state);
  }
  if (!r.bound()) {
    return std::nullopt;
  }
  return -energy_to_eV(*r.energy, mol, p.b, ctx);
}

Table build_table1(const SchemeChoice& scheme, bool with_usual, bool with_numerical) {
  const std::vector<TableRow> rows = table_rows(TableId::T1);
  Table t;
  t.header = {"state", "inv_b"};
  for (double alpha : kTable1Alphas) {
    const std::string tag = alpha_tag(alpha);
    t.header.push_back(tag + "_" + std::string(to_string(scheme.variant)));
    if (with_usual) {
      t.header.push_back(tag + "_usual");
    }
    if (with_numerical) {
      t.header.push_back(tag + "_numerical");
    }
  }
  t.rows.resize(rows.size());
  std::vector<std::string> notes(rows.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const TableRow& row = rows[i];
    std::vector<std::string>& out = t.rows[i];
    out = {row.state.label(), inv_b_text(row.inv_b)};
    for (double alpha : kTable1Alphas) {
      const PotentialParams p = table_params(alpha, row.inv_b);
      try {
        out.push_back(cell(table1_cell(alpha, scheme.resolve(p), row), true));
      } catch (const Error& e) {
        out.emplace_back();
        notes[i] += e.what();
      }
      if (with_usual) {
        out.push_back(cell(table1_cell(alpha, ApproxScheme::usual(), row), true));
      }
      if (with_numerical) {
        try {
          const NumericalEigenvalue num = solve_state(p, ApproxScheme::usual(), row.state);
          out.push_back(num.converged ? format_fixed(-num.energy / (2.0 * p.b * p.b), 7) : "");
        } catch (const Error& e) {
          out.emplace_back();
          notes[i] += row.state.label() + " at 1/b = " + inv_b_text(row.inv_b) +
                      ": numerical solve failed (" + e.what() + ")";
        }
      }
    }
  });
  for (auto& n : notes) {
    if (!n.empty()) {
      t.warnings.push_back(std::move(n));
    }
  }
  return t;
}

Table build_molecule_table(TableId id, const std::vector<Molecule>& molecules,
                           const SchemeChoice& scheme, const UnitContext& ctx) {
  const std::vector<TableRow> rows = table_rows(id);
  Table t;
  t.header = {"state", "inv_b"};
  for (const Molecule& m : molecules) {
    t.header.push_back(m.name + "_a0_1");
    t.header.push_back(m.name + "_a0.75");
    t.header.push_back(m.name + "_a1.5");
  }
  t.rows.resize(rows.size());
  std::vector<std::string> notes(rows.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    std::vector<std::string>& out = t.rows[i];
    out = {rows[i].state.label(), inv_b_text(rows[i].inv_b)};
    for (const Molecule& m : molecules) {
      for (double alpha : kMoleculeTableAlphas) {
        try {
          out.push_back(cell(molecule_cell(alpha, scheme, m, rows[i], ctx), false));
        } catch (const Error& e) {
          out.emplace_back();
          notes[i] = e.what();
        }
      }
    }
  });
  for (auto& n : notes) {
    if (!n.empty()) {
      t.warnings.push_back(std::move(n));
    }
  }
  return t;
}

Table build_custom_table(const CustomRequest& req, const UnitContext& ctx) {
  if (req.states.empty() || req.inv_b.empty() || req.alphas.empty()) {
    throw DomainError("custom table needs at least one state, 1/b and alpha");
  }
  std::vector<TableRow> rows;
  for (const QuantumState& q : req.states) {
    for (double ib : req.inv_b) {
      if (!(ib > 0.0)) {
        throw DomainError("1/b values must be positive");
      }
      rows.push_back({q, ib});
    }
  }
  Table t;
  t.header = {"state", "inv_b"};
  for (double alpha : req.alphas) {
    t.header.push_back(alpha_tag(alpha));
  }
  for (double ib : req.inv_b) {
    if (ib > 0.1) {
      t.warnings.push_back("1/b = " + format_compact(ib) +
                           " is beyond the tabulated range; the exponential form of 1/r^2 "
                           "is only accurate for r/b << 1");
    }
    for (double alpha : req.alphas) {
      const double b = 1.0 / ib;
      const PotentialParams p{alpha, req.A.value_or(2.0 * b), b};
      if (!validity_flags(p).alpha_term_small) {
        t.warnings.push_back("alpha = " + format_compact(alpha) + ", 1/b = " +
                             format_compact(ib) + ": |alpha(alpha-1)/A| >= 0.1");
      }
    }
  }
  const bool in_ev = req.molecule.has_value();
  t.rows.resize(rows.size());
  std::vector<std::string> notes(rows.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const TableRow& row = rows[i];
    std::vector<std::string>& out = t.rows[i];
    out = {row.state.label(), format_compact(row.inv_b)};
    for (double alpha : req.alphas) {
      const double b = 1.0 / row.inv_b;
      const PotentialParams p{alpha, req.A.value_or(2.0 * b), b};
      try {
        const SpectrumResult r = energy(p, req.scheme.resolve(p), row.state);
        if (!r.bound()) {
          out.emplace_back();
        } else if (in_ev) {
          out.push_back(format_significant(-energy_to_eV(*r.energy, *req.molecule, b, ctx), 6));
        } else {
          out.push_back(format_fixed(binding_energy_atomic(r, b), 7));
        }
      } catch (const Error& e) {
        out.emplace_back();
        notes[i] = e.what();
      }
    }
  });
  for (auto& n : notes) {
    if (!n.empty()) {
      t.warnings.push_back(std::move(n));
    }
  }
  return t;
}

std::vector<CompareRow> compare_rows(const CompareRequest& req) {
  std::vector<CompareRow> rows;
  for (double alpha : req.alphas) {
    for (const QuantumState& q : req.states) {
      for (double ib : req.inv_b) {
        if (!(ib > 0.0)) {
          throw DomainError("1/b values must be positive");
        }
        rows.push_back({q, ib, alpha, std::nullopt, std::nullopt, "ok"});
      }
    }
  }
  parallel_for(rows.size(), [&](std::size_t i) {
    CompareRow& row = rows[i];
    const double b = 1.0 / row.inv_b;
    const PotentialParams p{row.alpha, req.A.value_or(2.0 * b), b};
    try {
      const ApproxScheme s = req.scheme.resolve(p);
      const SpectrumResult r = energy(p, s, row.state);
      if (!r.bound()) {
        row.status = "unbound in closed form";
        return;
      }
      row.analytic = binding_energy_atomic(r, b);
      const NumericalEigenvalue num = solve_state(p, s, row.state, req.steps, req.tol);
      row.numerical = -num.energy / (2.0 * b * b);
      if (!num.converged) {
        row.status = "not converged";
      }
    } catch (const Error& e) {
      row.status = e.what();
    }
  });
  return rows;
}

Table compare_table(const std::vector<CompareRow>& rows) {
  Table t;
  t.header = {"state", "inv_b", "alpha", "analytic", "numerical", "abs_gap", "gap_percent", "status"};
  for (const CompareRow& r : rows) {
    std::vector<std::string> out = {r.state.label(), format_compact(r.inv_b),
                                    format_compact(r.alpha)};
    out.push_back(r.analytic ? format_fixed(*r.analytic, 10) : "");
    out.push_back(r.numerical ? format_fixed(*r.numerical, 10) : "");
    if (r.analytic && r.numerical) {
      const double gap = std::abs(*r.analytic - *r.numerical);
      out.push_back(format_significant(gap, 4));
      out.push_back(format_significant(100.0 * gap / std::abs(*r.numerical), 4));
    } else {
      out.emplace_back();
      out.emplace_back();
    }
    std::string status = r.status;
    std::replace(status.begin(), status.end(), ',', ';');
    out.push_back(status);
    t.rows.push_back(std::move(out));
  }
  return t;
}

std::vector<double> wavefunction_grid(double b, double epsilon, int points) {
  if (points < 2) {
    throw DomainError("wave function grid needs at least 2 points");
  }
  if (!(epsilon > 0.0)) {
    throw UnboundStateError("wave function grid needs a bound level");
  }
  const double lo = std::log(1e-4 * b);
  const double hi = std::log(std::max(45.0 * b / epsilon, 1e-3 * b));
  std::vector<double> r(static_cast<std::size_t>(points));
  r[0] = 0.0;
  const int m = points - 1;
  for (int i = 0; i < m; ++i) {
    const double f = m == 1 ? 1.0 : static_cast<double>(i) / (m - 1);
    r[static_cast<std::size_t>(i) + 1] = std::exp(lo + f * (hi - lo));
  }
  return r;
}

}  // namespace mrbound
