#include "app.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "freeclt/analytic.hpp"
#include "freeclt/clt.hpp"
#include "freeclt/cumulants.hpp"
#include "freeclt/errors.hpp"
#include "freeclt/partitions.hpp"
#include "freeclt/special_functions.hpp"
#include "manifest.hpp"
#include "selftest.hpp"
#include "serialization.hpp"

namespace freeclt::cli {

namespace {

/// Bad flag value discovered after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CLI::Option* add_flavor(CLI::App* sub, std::string& target) {
  return sub->add_option("--flavor", target, "free or classical")
      ->required()
      ->check(CLI::IsMember({"free", "classical"}));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json read_json_input(const std::string& path, RunManifest& manifest) {
  const std::string text = read_file(path);
  manifest.add_input(path, text);
  return parse_json(text);
}

int resolve_cap(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("FREECLT_MAX_GROUND_SIZE"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 64) {
      throw UsageError("FREECLT_MAX_GROUND_SIZE must be an integer in [1, 64], got '" +
                       std::string(env) + "'");
    }
    return static_cast<int>(v);
  }
  return kDefaultMaxGroundSize;
}

analytic::Complex parse_complex(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const std::string re = text.substr(0, comma);
    const double x = std::stod(re, &used);
    if (used != re.size()) throw std::invalid_argument(text);
    double y = 0.0;
    if (comma != std::string::npos) {
      const std::string im = text.substr(comma + 1);
      y = std::stod(im, &used);
      if (used != im.size()) throw std::invalid_argument(text);
    }
    return {x, y};
  } catch (const std::logic_error&) {
    throw UsageError(flag + " expects re,im, got '" + text + "'");
  }
}

analytic::AnalyticFunction parse_psi(const std::string& text) {
  const std::string prefix = "poly:";
  if (text.rfind(prefix, 0) != 0) {
    throw UsageError("--psi expects poly:c0,c1,..., got '" + text + "'");
  }
  std::vector<analytic::Complex> coeffs;
  std::stringstream rest(text.substr(prefix.size()));
  std::string item;
  while (std::getline(rest, item, ',')) {
    try {
      std::size_t used = 0;
      coeffs.emplace_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("--psi coefficient '" + item + "' is not a number");
    }
  }
  if (coeffs.empty()) throw UsageError("--psi needs at least one coefficient");
  return analytic::AnalyticFunction::polynomial(std::move(coeffs));
}

analytic::Grid parse_grid(const std::string& text) {
  try {
    return analytic::Grid::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--grid: ") + e.what());
  }
}

void check_input_matches(const Sequence& s, Flavor flavor) {
  if (s.flavor() != flavor) {
    throw SchemaError("flavor", "input is " + to_string(s.flavor()) + " but --flavor is " +
                                    to_string(flavor));
  }
}

void write_csv_density(std::ostream& out, const std::vector<double>& xs,
                       const std::function<std::string(double)>& value) {
  out << "x,density\n";
  for (double x : xs) out << format_double(x) << ',' << value(x) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunManifest manifest(args);
  std::string manifest_path;

  CLI::App app{"Exact and numeric tools for moment/cumulant transforms and central limit operators",
               "freeclt"};
  app.set_version_flag("--version", std::string(FREECLT_VERSION));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--manifest", manifest_path, "Write the run manifest to this file instead of stderr");

  // partitions
  auto* partitions = app.add_subcommand("partitions", "Count or list (noncrossing) partitions");
  partitions->require_subcommand(1);
  int p_n = 1;
  int p_k = 0;
  int p_cap = 0;
  std::string p_flavor_text;
  bool p_oracle = false;
  auto* p_count = partitions->add_subcommand("count", "Profile count: one block of size n, k pairs");
  p_count->add_option("--n", p_n, "Distinguished block size")->required()->check(CLI::PositiveNumber);
  p_count->add_option("--k", p_k, "Number of pair blocks")->required()->check(CLI::NonNegativeNumber);
  add_flavor(p_count, p_flavor_text);
  p_count->add_flag("--oracle", p_oracle, "Count by exhaustive enumeration");
  p_count->add_option("--max-ground-size", p_cap, "Enumeration cap (default 14)")
      ->check(CLI::PositiveNumber);
  auto* p_list = partitions->add_subcommand("list", "List partitions of {1..k}, one JSON array per line");
  p_list->add_option("--k", p_k, "Ground set size")->required()->check(CLI::PositiveNumber);
  add_flavor(p_list, p_flavor_text);
  p_list->add_option("--max-ground-size", p_cap, "Enumeration cap (default 14)")
      ->check(CLI::PositiveNumber);

  // transform
  auto* transform = app.add_subcommand("transform", "Moments <-> cumulants");
  std::string t_flavor_text;
  std::string t_direction;
  std::string t_input;
  add_flavor(transform, t_flavor_text);
  transform->add_option("--direction", t_direction)->required()->check(CLI::IsMember({"m2c", "c2m"}));
  transform->add_option("--input", t_input, "Sequence JSON")->required()->check(CLI::ExistingFile);

  // clt
  auto* clt = app.add_subcommand("clt", "Central limit operator");
  clt->require_subcommand(1);
  std::string c_flavor_text;
  std::string c_input;
  std::size_t c_steps = 1;
  std::size_t c_size = 1;
  bool c_csv = false;
  auto* c_iterate = clt->add_subcommand("iterate", "Apply T repeatedly to a moment sequence");
  add_flavor(c_iterate, c_flavor_text);
  c_iterate->add_option("--input", c_input)->required()->check(CLI::ExistingFile);
  c_iterate->add_option("--steps", c_steps)->required();
  auto* c_matrix = clt->add_subcommand("matrix", "Linearization matrix A");
  add_flavor(c_matrix, c_flavor_text);
  c_matrix->add_option("--size", c_size)->required()->check(CLI::PositiveNumber);
  c_matrix->add_flag("--csv", c_csv, "CSV rows a_{i,1..i}");
  auto* c_eigen = clt->add_subcommand("eigencheck", "Check D T(column j) = 2^{1-j/2} column j");
  add_flavor(c_eigen, c_flavor_text);
  c_eigen->add_option("--size", c_size)->required()->check(CLI::PositiveNumber);

  // eigenfn
  auto* eigenfn = app.add_subcommand("eigenfn", "Moments and density of the n-th eigenfunction");
  std::string e_flavor_text;
  unsigned e_n = 1;
  std::size_t e_orders = 1;
  std::size_t e_samples = 0;
  add_flavor(eigenfn, e_flavor_text);
  eigenfn->add_option("--n", e_n)->required()->check(CLI::PositiveNumber);
  eigenfn->add_option("--orders", e_orders, "Moments of orders 1..K")->required()->check(CLI::PositiveNumber);
  eigenfn->add_option("--density-samples", e_samples, "Sample the density at M points");

  // analytic
  auto* analytic_cmd = app.add_subcommand("analytic", "Cauchy-transform level computations");
  analytic_cmd->require_subcommand(1);
  std::string a_a;
  std::string a_b;
  std::string a_grid;
  std::string a_psi;
  std::string a_z;
  std::string a_nu;
  double a_t = 1e-4;
  double a_x = 1.0;
  double a_y = 0.0;
  double a_phi = 0.0;
  auto* a_freeconv = analytic_cmd->add_subcommand("freeconv", "Density of a free additive convolution");
  a_freeconv->add_option("--a", a_a, "Descriptor JSON")->required()->check(CLI::ExistingFile);
  a_freeconv->add_option("--b", a_b, "Descriptor JSON")->required()->check(CLI::ExistingFile);
  a_freeconv->add_option("--grid", a_grid, "lo:hi:n")->required();
  auto* a_pde = analytic_cmd->add_subcommand("pdecheck", "Residual of the first-order deformation identity");
  a_pde->add_option("--psi", a_psi, "poly:c0,c1,...")->required();
  a_pde->add_option("--z", a_z, "re,im")->required();
  a_pde->add_option("--nu", a_nu, "Descriptor JSON (default: standard semicircle)")
      ->check(CLI::ExistingFile);
  a_pde->add_option("--t", a_t, "Finite-difference step in t");
  auto* a_eigden = analytic_cmd->add_subcommand("eigden", "Boundary density of an eigenfunction");
  a_eigden->add_option("--x", a_x, "Re a")->required();
  a_eigden->add_option("--y", a_y, "Im a")->required();
  a_eigden->add_option("--phi", a_phi, "Phase")->required();
  a_eigden->add_option("--grid", a_grid, "lo:hi:n")->required();

  // selftest
  auto* selftest = app.add_subcommand("selftest", "Run the built-in identity checks");
  std::uint64_t s_seed = 20240601;
  selftest->add_option("--seed", s_seed, "Seed for the randomized checks");

  const auto emit_manifest = [&](int code) {
    manifest.set_exit_code(code);
    const std::string text = manifest.finish().dump() + "\n";
    if (manifest_path.empty()) {
      err << "manifest: " << text;
    } else {
      std::ofstream(manifest_path) << text;
    }
    return code;
  };

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << FREECLT_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return emit_manifest(kUsage);
  }

  try {
    const auto flavor_of = [](const std::string& text) {
      return text.empty() ? Flavor::free : parse_flavor(text);
    };
    const Flavor p_flavor = flavor_of(p_flavor_text);
    const Flavor t_flavor = flavor_of(t_flavor_text);
    const Flavor c_flavor = flavor_of(c_flavor_text);
    const Flavor e_flavor = flavor_of(e_flavor_text);
    if (p_count->parsed()) {
      const BlockProfile profile{p_n, p_k};
      if (p_oracle) {
        out << count_profile(profile, p_flavor, resolve_cap(p_cap)).get_str() << '\n';
      } else {
        const BigInt n = p_flavor == Flavor::free ? kreweras_count(p_n, p_k)
                                                  : classical_profile_count(p_n, p_k);
        out << n.get_str() << '\n';
      }
    } else if (p_list->parsed()) {
      PartitionStream stream(p_k, p_flavor == Flavor::free, resolve_cap(p_cap));
      while (auto p = stream.next()) out << Json(p->blocks()).dump() << '\n';
    } else if (transform->parsed()) {
      const Sequence input = sequence_from_json(read_json_input(t_input, manifest));
      check_input_matches(input, t_flavor);
      const bool m2c = t_direction == "m2c";
      const SequenceKind expected = m2c ? SequenceKind::moments : SequenceKind::cumulants;
      if (input.kind() != expected) {
        throw SchemaError("kind", "--direction " + t_direction + " needs " + to_string(expected));
      }
      const Sequence result = m2c ? moments_to_cumulants(input) : cumulants_to_moments(input);
      out << to_json(result).dump(2) << '\n';
    } else if (c_iterate->parsed()) {
      Sequence input = sequence_from_json(read_json_input(c_input, manifest));
      check_input_matches(input, c_flavor);
      if (input.kind() == SequenceKind::cumulants) input = cumulants_to_moments(input);
      out << to_json(iterate_T(input, c_steps)).dump(2) << '\n';
    } else if (c_matrix->parsed()) {
      const LinMatrix a = build_lin_matrix(c_flavor, c_size);
      if (c_csv) {
        for (std::size_t i = 1; i <= a.size(); ++i) {
          for (std::size_t j = 1; j <= i; ++j) {
            out << (j > 1 ? "," : "") << a.at(i, j).rat().to_string();
          }
          out << '\n';
        }
      } else {
        Json rows = Json::array();
        for (std::size_t i = 1; i <= a.size(); ++i) {
          Json row = Json::array();
          for (std::size_t j = 1; j <= i; ++j) row.push_back(a.at(i, j).rat().to_string());
          rows.push_back(std::move(row));
        }
        out << Json{{"flavor", to_string(c_flavor)}, {"size", a.size()}, {"rows", rows}}.dump(2)
            << '\n';
      }
    } else if (c_eigen->parsed()) {
      const auto checks = eigencheck(c_flavor, c_size);
      bool all = true;
      out << "column  eigenvalue            verdict\n";
      for (const auto& c : checks) {
        std::string ev = c.eigenvalue.to_string();
        ev.resize(std::max<std::size_t>(ev.size(), 20), ' ');
        out << std::string(6 - std::min<std::size_t>(6, std::to_string(c.column).size()), ' ')
            << c.column << "  " << ev << "  " << (c.exact ? "exact" : "MISMATCH") << '\n';
        all = all && c.exact;
      }
      if (!all) return emit_manifest(kFailure);
    } else if (eigenfn->parsed()) {
      const Sequence moments = e_flavor == Flavor::free ? chebyshev_density_moments(e_n, e_orders)
                                                        : hermite_density_moments(e_n, e_orders);
      Json m = Json::array();
      for (const auto& x : moments.entries()) m.push_back(to_json(x.rat()));
      Json payload{{"flavor", to_string(e_flavor)}, {"n", e_n}, {"moments", m}};
      if (e_samples > 0) {
        Json density = Json::array();
        for (std::size_t i = 0; i < e_samples; ++i) {
          const double u = (static_cast<double>(i) + 1.0) / (static_cast<double>(e_samples) + 1.0);
          const double x = e_flavor == Flavor::free ? -2.0 + 4.0 * u : -6.0 + 12.0 * u;
          const double v = e_flavor == Flavor::free ? chebyshev_eigen_density(e_n, x)
                                                    : hermite_eigen_density(e_n, x);
          density.push_back(Json::array({x, v}));
        }
        payload["density"] = std::move(density);
      }
      out << payload.dump(2) << '\n';
    } else if (a_freeconv->parsed()) {
      const auto grid = parse_grid(a_grid);
      const auto mu = measure_from_json(read_json_input(a_a, manifest));
      const auto nu = measure_from_json(read_json_input(a_b, manifest));
      const auto result = analytic::free_convolve(mu, nu, grid);
      const auto& table = std::get<analytic::DensityTable>(result.descriptor());
      out << "x,density\n";
      for (std::size_t i = 0; i < table.grid.size(); ++i) {
        out << format_double(table.grid[i]) << ',' << format_double(table.values[i]) << '\n';
      }
    } else if (a_pde->parsed()) {
      const auto psi = parse_psi(a_psi);
      const auto z = parse_complex(a_z, "--z");
      if (!(z.imag() > 0.0)) throw UsageError("--z must have positive imaginary part");
      if (!(a_t > 0.0)) throw UsageError("--t must be positive");
      const auto nu = a_nu.empty() ? analytic::AnalyticMeasure::semicircle()
                                   : measure_from_json(read_json_input(a_nu, manifest));
      out << format_double(analytic::pde_theorem_check(nu, psi, z, a_t)) << '\n';
    } else if (a_eigden->parsed()) {
      const auto grid = parse_grid(a_grid);
      const analytic::EigenParameter params{{a_x, a_y}, a_phi};
      write_csv_density(out, grid.points(), [&](double t) {
        return std::abs(t) == 2.0 ? std::string("nan")
                                  : format_double(analytic::eigen_density(params, t));
      });
    } else if (selftest->parsed()) {
      manifest.set_seed(s_seed);
      bool all = true;
      for (const auto& r : run_selftest(s_seed)) {
        out << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.passed) out << ": " << r.detail;
        out << '\n';
        all = all && r.passed;
      }
      if (!all) return emit_manifest(kFailure);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return emit_manifest(kUsage);
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return emit_manifest(kSchema);
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << " (requested " << e.requested() << ", cap " << e.cap()
        << ")\n";
    return emit_manifest(kCapExceeded);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return emit_manifest(kFailure);
  }
  return emit_manifest(kOk);
}

}  // namespace freeclt::cli
