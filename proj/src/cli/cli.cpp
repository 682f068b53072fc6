#include "ilwhodge/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ilwhodge/exactnum.hpp"
#include "ilwhodge/hodge.hpp"
#include "ilwhodge/ilw.hpp"

namespace ilwhodge::cli {

namespace {

using nlohmann::json;

const std::map<std::string, Format> kFormats{
    {"json", Format::json}, {"csv", Format::csv}, {"latex", Format::latex}, {"pretty", Format::pretty}};

std::string format_name(Format f) {
  for (const auto& [name, value] : kFormats) {
    if (value == f) return name;
  }
  return "json";
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  std::string text;
  int code = kOk;
};

json config_json(const RunConfig& cfg) {
  json j = {{"genus", cfg.genus_order},
            {"index", cfg.hierarchy_index},
            {"format", format_name(cfg.output_format)},
            {"seed", cfg.seed}};
  if (cfg.perturb_genus) j["perturb"] = {{"g", *cfg.perturb_genus}, {"delta", cfg.perturb_delta}};
  return j;
}

json envelope(const std::string& command, const RunConfig& cfg, bool ok, json details) {
  return {{"command", command},
          {"config", config_json(cfg)},
          {"status", ok ? "ok" : "mismatch"},
          {"details", std::move(details)}};
}

CgTable constants_for(const RunConfig& cfg) {
  CgTable cg;
  if (cfg.perturb_genus) cg.perturb(*cfg.perturb_genus, Rational::parse(cfg.perturb_delta));
  return cg;
}

std::string latex_rational(const Rational& r) {
  if (r.is_integer()) return r.str();
  return std::string(r.sign() < 0 ? "-" : "") + "\\frac{" + r.abs().numerator().get_str() + "}{" +
         r.denominator().get_str() + "}";
}

// ------------------------------------------------------------- commands

Outcome cmd_bernoulli(int max, const RunConfig& cfg) {
  if (max < 0) throw UsageError("--max must be >= 0");
  json rows = json::array();
  std::ostringstream csv, pretty_out, tex;
  csv << "name,index,value\n";
  tex << "\\begin{tabular}{cc}\n";
  for (int n = 0; n <= max; ++n) {
    const Rational b = bernoulli(static_cast<unsigned>(n));
    rows.push_back({{"name", "B"}, {"index", n}, {"value", b.str()}});
    csv << "B," << n << ',' << b.str() << '\n';
    pretty_out << "B_" << n << " = " << b.str() << '\n';
    tex << "$B_{" << n << "}$ & $" << latex_rational(b) << "$ \\\\\n";
  }
  for (int g = 1; 2 * g <= max; ++g) {
    const Rational c = c_g(g);
    rows.push_back({{"name", "C"}, {"index", g}, {"value", c.str()}});
    csv << "C," << g << ',' << c.str() << '\n';
    pretty_out << "C_" << g << " = " << c.str() << '\n';
    tex << "$C_{" << g << "}$ & $" << latex_rational(c) << "$ \\\\\n";
  }
  tex << "\\end{tabular}\n";
  switch (cfg.output_format) {
    case Format::csv: return {csv.str()};
    case Format::pretty: return {pretty_out.str()};
    case Format::latex: return {tex.str()};
    case Format::json: break;
  }
  return {envelope("bernoulli", cfg, true, rows).dump(2) + "\n"};
}

Outcome cmd_constants(int max_genus, const RunConfig& cfg) {
  if (max_genus < 1) throw UsageError("--max-genus must be >= 1");
  const CgTable cg = constants_for(cfg);
  json rows = json::array();
  std::ostringstream csv, pretty_out, tex;
  csv << "g,B_2g,C_g,dispersion\n";
  tex << "\\begin{tabular}{cccc}\n$g$ & $B_{2g}$ & $C_g$ & $|B_{2g}|/(2g)!$ \\\\\n\\hline\n";
  for (int g = 1; g <= max_genus; ++g) {
    const Rational b = bernoulli(static_cast<unsigned>(2 * g));
    const Rational c = cg(g);
    const Rational d = dispersion_coeff(g);
    rows.push_back({{"g", g}, {"B_2g", b.str()}, {"C_g", c.str()}, {"dispersion", d.str()}});
    csv << g << ',' << b.str() << ',' << c.str() << ',' << d.str() << '\n';
    pretty_out << "g=" << g << "  B_2g=" << b.str() << "  C_g=" << c.str() << "  |B_2g|/(2g)!=" << d.str() << '\n';
    tex << g << " & $" << latex_rational(b) << "$ & $" << latex_rational(c) << "$ & $" << latex_rational(d)
        << "$ \\\\\n";
  }
  tex << "\\end{tabular}\n";
  switch (cfg.output_format) {
    case Format::csv: return {csv.str()};
    case Format::pretty: return {pretty_out.str()};
    case Format::latex: return {tex.str()};
    case Format::json: break;
  }
  return {envelope("constants", cfg, true, rows).dump(2) + "\n"};
}

Outcome cmd_one_point(int max_genus, const RunConfig& cfg) {
  if (max_genus < 1) throw UsageError("--max-genus must be >= 1 (the table for genus 0 is empty)");
  const hodge::BracketTable table = hodge::one_point_table(max_genus);
  switch (cfg.output_format) {
    case Format::csv: return {hodge::to_csv(table)};
    case Format::latex: return {hodge::to_latex(table)};
    case Format::pretty: {
      std::ostringstream os;
      for (const auto& [k, v] : table.entries())
        os << "<lambda_" << k.j << " tau_" << k.d.at(0) << ">_" << k.g << " = " << v.str() << '\n';
      return {os.str()};
    }
    case Format::json: break;
  }
  return {envelope("one-point", cfg, true, hodge::to_json(table)).dump(2) + "\n"};
}

Outcome render_diffpoly(const std::string& command, const RunConfig& cfg, const DiffPoly& p) {
  switch (cfg.output_format) {
    case Format::pretty: return {pretty(p) + "\n"};
    case Format::latex: return {latex(p) + "\n"};
    case Format::csv: {
      std::ostringstream os;
      os << "hbar,eps,u,coef\n";
      for (const auto& [m, c] : p.terms()) {
        for (const auto& [e, v] : c.terms()) os << e[0] << ',' << e[1] << ',' << pretty(m) << ',' << v.str() << '\n';
      }
      return {os.str()};
    }
    case Format::json: break;
  }
  return {envelope(command, cfg, true, {{"pretty", pretty(p)}, {"terms", to_json(p)}}).dump(2) + "\n"};
}

Outcome cmd_hamiltonian(const RunConfig& cfg, bool as_flow) {
  if (cfg.hierarchy_index < 1) throw UsageError("--index must be >= 1");
  if (cfg.genus_order < 0) throw UsageError("--genus must be >= 0");
  const ilw::Hamiltonian h = ilw::hamiltonian(cfg.hierarchy_index, cfg.genus_order, constants_for(cfg));
  if (as_flow) return render_diffpoly("flow", cfg, ilw::flow(h));
  return render_diffpoly("hamiltonian", cfg, h.functional.density());
}

const std::vector<std::string> kSelectors{"cg", "ilw-t1", "ilw-t2", "commute", "linear-term", "s-tilde", "reverse",
                                          "all"};

std::vector<VerificationReport> run_verification(const std::string& which, const RunConfig& cfg) {
  const int g = cfg.genus_order;
  if (g < 1) throw UsageError("verify requires --genus >= 1");
  const CgTable cg = constants_for(cfg);
  std::vector<VerificationReport> out;
  const bool all = which == "all";
  if (all || which == "cg") out.push_back(hodge::verify_cg(g, cg));
  if (all || which == "ilw-t1") out.push_back(ilw::verify_flow_t1(g, cg));
  if (all || which == "ilw-t2") out.push_back(ilw::verify_flow_t2(g, cg, cfg.seed));
  if (all || which == "commute") {
    out.push_back(ilw::verify_commutation(1, 1, g, cg));
    out.push_back(ilw::verify_commutation(2, 1, g, cg));
    out.push_back(ilw::verify_commutation(3, 1, g, cg));
    out.push_back(ilw::verify_commutation(3, 2, g, cg));
  }
  if (all || which == "linear-term") out.push_back(hodge::verify_linear_term_identity(g, cg));
  if (all || which == "s-tilde") out.push_back(hodge::verify_s_tilde(g));
  if (all || which == "reverse") out.push_back(hodge::verify_reverse(g, cg));
  return out;
}

Outcome cmd_verify(const std::string& which, const RunConfig& cfg) {
  const auto reports = run_verification(which, cfg);
  bool ok = true;
  json details = json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    details.push_back(r.to_json());
  }
  const int code = ok ? kOk : kMismatch;
  const json report = envelope("verify " + which, cfg, ok, details);
  if (cfg.output_format != Format::pretty) return {report.dump(2) + "\n", code};
  std::ostringstream os;
  for (const auto& r : reports) {
    os << (r.ok() ? "[ok]       " : "[mismatch] ") << r.name << " (order " << r.order_checked << ")";
    if (r.first_mismatch)
      os << ": hbar^" << r.first_mismatch->hbar_order << " " << r.first_mismatch->term << " expected "
         << r.first_mismatch->expected.str() << " got " << r.first_mismatch->actual.str();
    os << '\n';
  }
  if (!ok) os << report.dump() << '\n';
  return {os.str(), code};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the ILW hierarchy and one-point linear Hodge integrals", "ilwhodge"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json";
  std::string output;
  int perturb = 0;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "latex", "pretty"}))
      ->envname("ILWHODGE_FORMAT");
  app.add_option("--output", output, "Write output to this file")->envname("ILWHODGE_OUTPUT");
  app.add_option("--seed", cfg.seed, "Seed for randomized probes")->envname("ILWHODGE_SEED");
  app.add_option("--perturb-cg", perturb, "Test mode: perturb C_g for this g")
      ->check(CLI::PositiveNumber)
      ->envname("ILWHODGE_PERTURB_CG");
  app.add_option("--perturb-delta", cfg.perturb_delta, "Perturbation added by --perturb-cg")
      ->check(
          [](const std::string& s) {
            try {
              Rational::parse(s);
            } catch (const std::exception& e) {
              return std::string(e.what());
            }
            return std::string();
          },
          "p/q")
      ->envname("ILWHODGE_PERTURB_DELTA");

  int max_n = 12;
  auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_0..B_N and C_1..C_{N/2}");
  bern->add_option("--max", max_n, "Largest index N")->envname("ILWHODGE_MAX");

  int max_genus = 5;
  auto* consts = app.add_subcommand("constants", "C_g and the dispersion coefficients");
  consts->add_option("--max-genus", max_genus, "Largest genus")->envname("ILWHODGE_MAX_GENUS");
  auto* onept = app.add_subcommand("one-point", "One-point linear Hodge integrals");
  onept->add_option("--max-genus", max_genus, "Largest genus")->envname("ILWHODGE_MAX_GENUS");

  auto* ham = app.add_subcommand("hamiltonian", "Density of the i-th Hamiltonian");
  auto* flw = app.add_subcommand("flow", "The i-th flow d/dx (delta h_i / delta u)");
  for (auto* sub : {ham, flw}) {
    sub->add_option("--index", cfg.hierarchy_index, "Hierarchy index i")->envname("ILWHODGE_INDEX");
    sub->add_option("--genus", cfg.genus_order, "hbar truncation order G")->envname("ILWHODGE_GENUS");
  }

  std::string which;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("which", which, "Suite to run")->required()->check(CLI::IsMember(kSelectors));
  ver->add_option("--genus", cfg.genus_order, "hbar truncation order G")->envname("ILWHODGE_GENUS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ilwhodge: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  cfg.output_format = kFormats.at(format);
  if (!output.empty()) cfg.output_path = output;
  if (perturb > 0) cfg.perturb_genus = perturb;

  Outcome result;
  try {
    if (*bern) {
      result = cmd_bernoulli(max_n, cfg);
    } else if (*consts) {
      result = cmd_constants(max_genus, cfg);
    } else if (*onept) {
      result = cmd_one_point(max_genus, cfg);
    } else if (*ham) {
      result = cmd_hamiltonian(cfg, false);
    } else if (*flw) {
      result = cmd_hamiltonian(cfg, true);
    } else if (*ver) {
      result = cmd_verify(which, cfg);
    }
  } catch (const UsageError& e) {
    err << "ilwhodge: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "ilwhodge: " << e.what() << "\n";
    return kUsage;
  }

  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path);
    if (!file) {
      err << "ilwhodge: cannot open " << *cfg.output_path << "\n";
      return kUsage;
    }
    file << result.text;
  } else {
    out << result.text;
  }
  return result.code;
}

}  // namespace ilwhodge::cli
