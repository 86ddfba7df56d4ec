#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <numbers>
#include <sstream>
#include <variant>

#include "rieffel/algebra.hpp"
#include "rieffel/deformation.hpp"
#include "rieffel/errors.hpp"
#include "rieffel/norms.hpp"
#include "rieffel/oscillatory_oracle.hpp"
#include "rieffel/random.hpp"
#include "rieffel/serialization.hpp"
#include "rieffel/smoothing.hpp"
#include "rieffel/states.hpp"
#include "rieffel/verify.hpp"

namespace rieffel::cli {

namespace {

using nlohmann::json;

struct GridOptions {
  std::string spacing = "linear";
  double stop = std::numbers::pi;
  double min = 1e-3;
  int count = 20;

  HbarGrid build() const {
    if (spacing == "linear") return HbarGrid::linear(stop, count);
    if (spacing == "log-with-0") return HbarGrid::log_with_zero(min, stop, count);
    throw SchemaError("grid spacing must be linear or log-with-0");
  }
};

void add_grid_options(CLI::App* cmd, GridOptions& grid) {
  cmd->add_option("--grid-stop", grid.stop, "largest hbar on the grid");
  cmd->add_option("--grid-min", grid.min, "smallest positive hbar for log-with-0 spacing");
  cmd->add_option("--grid-count", grid.count, "number of grid points including 0");
  cmd->add_option("--grid-spacing", grid.spacing, "linear | log-with-0");
}

ClassicalState parse_state(const std::string& spec) {
  if (spec == "trace") return ClassicalState::trace();
  if (spec.rfind("point:", 0) == 0) {
    std::vector<double> x;
    std::stringstream ss(spec.substr(6));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        x.push_back(std::stod(item));
      } catch (const std::logic_error&) {
        throw SchemaError("bad point coordinate: " + item);
      }
    }
    return ClassicalState::point(std::move(x));
  }
  if (spec.rfind("density:", 0) == 0) return ClassicalState::density(load_element(spec.substr(8)));
  throw SchemaError("state must be trace, point:x1,...,x2n or density:PATH");
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw SchemaError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

void write_json(const std::string& path, std::ostream& out, const json& j) {
  Output o(path, out);
  o.stream() << j.dump(2) << '\n';
}

struct Common {
  std::string structure = "standard";
  std::string out_path;
  std::string format = "csv";
};

// "standard" follows the element's rank (rank 1 when there is no element).
SymplecticStructure structure_for(const std::string& spec, const FourierElement* a = nullptr) {
  if (spec == "standard") return make_standard_structure(a ? a->dim_n() : 1);
  return load_structure(spec);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical laboratory for Rieffel deformations of the torus", "rieffel_lab"};
  app.require_subcommand(1);
  Common common;
  int exit_code = kOk;

  // star
  std::string a_path, b_path;
  double hbar = 1.0;
  bool with_oracle = false;
  auto* star = app.add_subcommand("star", "twisted product of two elements");
  star->add_option("--a", a_path, "left factor (element JSON)")->required();
  star->add_option("--b", b_path, "right factor (element JSON)")->required();
  star->add_option("--hbar", hbar, "deformation parameter");
  star->add_option("--structure", common.structure, "standard:<n>, standard, or a structure JSON path");
  star->add_flag("--oracle", with_oracle, "also evaluate the damped oscillatory integral");
  star->add_option("-o,--out", common.out_path);

  // smooth
  int quadrature_points = 0;
  auto* smooth_cmd = app.add_subcommand("smooth", "apply the Gaussian smoothing S_hbar");
  smooth_cmd->add_option("--a", a_path, "element JSON")->required();
  smooth_cmd->add_option("--hbar", hbar);
  smooth_cmd->add_option("--structure", common.structure);
  smooth_cmd->add_option("--quadrature-points", quadrature_points,
                         "also run the direct quadrature with this many points per axis");
  smooth_cmd->add_option("-o,--out", common.out_path);

  // verify
  std::uint64_t seed = 42;
  std::vector<std::string> tolerances;
  auto* verify = app.add_subcommand("verify", "run the seeded property suite");
  verify->add_option("--seed", seed);
  verify->add_option("--tolerance", tolerances, "override a check threshold, name=value");
  verify->add_option("-o,--out", common.out_path);

  // state-curve
  std::string state_spec = "trace";
  GridOptions grid;
  auto* state_cmd = app.add_subcommand("state-curve", "hbar -> omega_0(S_hbar a)");
  state_cmd->add_option("--state", state_spec, "trace | point:x1,...,x2n | density:PATH");
  state_cmd->add_option("--a", a_path)->required();
  state_cmd->add_option("--structure", common.structure);
  add_grid_options(state_cmd, grid);
  state_cmd->add_option("--format", common.format, "csv | json");
  state_cmd->add_option("-o,--out", common.out_path);

  // norm-curve
  int box_N = 8;
  auto* norm_cmd = app.add_subcommand("norm-curve", "bounds on the deformed norm along hbar");
  norm_cmd->add_option("--a", a_path)->required();
  norm_cmd->add_option("--structure", common.structure);
  norm_cmd->add_option("--box", box_N, "compression box half-width N");
  add_grid_options(norm_cmd, grid);
  norm_cmd->add_option("--format", common.format, "csv | json");
  norm_cmd->add_option("-o,--out", common.out_path);

  // positivity-scan
  int trials = 1000, modes = 8;
  double tolerance = 1e-9;
  auto* pos_cmd = app.add_subcommand("positivity-scan", "search for omega_hbar(a* a) < 0");
  pos_cmd->add_option("--state", state_spec);
  pos_cmd->add_option("--structure", common.structure);
  pos_cmd->add_option("--hbar", hbar);
  pos_cmd->add_option("--trials", trials);
  pos_cmd->add_option("--modes", modes);
  pos_cmd->add_option("--seed", seed);
  pos_cmd->add_option("--a", a_path, "scan this single element instead of random ones");
  pos_cmd->add_option("--tolerance", tolerance, "pass iff min >= -tolerance * max ||a||_1^2");
  pos_cmd->add_option("-o,--out", common.out_path);

  // sos-check
  double tail = 1e-9, sos_tolerance = 1e-8;
  auto* sos_cmd = app.add_subcommand("sos-check", "compare the sum-of-squares series with S_hbar(a* a)");
  sos_cmd->add_option("--a", a_path, "element JSON (default: seeded random element)");
  sos_cmd->add_option("--structure", common.structure);
  sos_cmd->add_option("--hbar", hbar);
  sos_cmd->add_option("--seed", seed);
  sos_cmd->add_option("--modes", modes);
  sos_cmd->add_option("--tail", tail, "required tail bound");
  sos_cmd->add_option("--tolerance", sos_tolerance, "allowed l1 discrepancy");
  sos_cmd->add_option("-o,--out", common.out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kSchemaError;
  }

  try {
    if (*star) {
      const auto a = load_element(a_path);
      const auto b = load_element(b_path);
      require_same_dim(a, b);
      const DeformationContext ctx(structure_for(common.structure, &a), hbar);
      const auto product = star_product(ctx, a, b);
      if (!with_oracle) {
        write_json(common.out_path, out, element_to_json(product));
      } else {
        const auto oracle = oracle_star(ctx, a, b);
        write_json(common.out_path, out,
                   {{"product", element_to_json(product)},
                    {"oracle", element_to_json(oracle.element)},
                    {"l1_discrepancy", l1_distance(product, oracle.element)},
                    {"oracle_error_bound", oracle.error_bound}});
      }
    } else if (*smooth_cmd) {
      const auto a = load_element(a_path);
      const DeformationContext ctx(structure_for(common.structure, &a), hbar);
      const auto smoothed = smooth(ctx, a);
      if (quadrature_points <= 0) {
        write_json(common.out_path, out, element_to_json(smoothed));
      } else {
        const auto quad = smooth_quadrature_oracle(ctx, a, 0.0, quadrature_points);
        write_json(common.out_path, out,
                   {{"smoothed", element_to_json(smoothed)},
                    {"quadrature", element_to_json(quad)},
                    {"l1_discrepancy", l1_distance(smoothed, quad)}});
      }
    } else if (*verify) {
      VerifyOptions options;
      options.seed = seed;
      for (const auto& t : tolerances) {
        const auto eq = t.find('=');
        if (eq == std::string::npos) throw SchemaError("tolerance override must be name=value");
        try {
          options.thresholds[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
        } catch (const std::logic_error&) {
          throw SchemaError("bad tolerance value in " + t);
        }
      }
      const auto report = run_verify(options);
      write_json(common.out_path, out, report_to_json(report));
      if (!report.all_passed()) exit_code = kViolation;
    } else if (*state_cmd) {
      const auto a = load_element(a_path);
      const auto state = parse_state(state_spec);
      const auto curve = state_curve(state, structure_for(common.structure, &a), a, grid.build());
      Output o(common.out_path, out);
      if (common.format == "json") {
        json rows = json::array();
        for (const auto& p : curve) rows.push_back({{"hbar", p.hbar}, {"value_re", p.value.real()}, {"value_im", p.value.imag()}});
        o.stream() << json{{"state", state.describe()}, {"curve", rows}, {"max_adjacent_jump", max_adjacent_jump(curve)}}.dump(2) << '\n';
      } else {
        o.stream() << "hbar,value_re,value_im\n";
        for (const auto& p : curve)
          o.stream() << format_double(p.hbar) << ',' << format_double(p.value.real()) << ','
                     << format_double(p.value.imag()) << '\n';
      }
    } else if (*norm_cmd) {
      const auto a = load_element(a_path);
      const auto curve = norm_curve(structure_for(common.structure, &a), a, grid.build(), box_N);
      Output o(common.out_path, out);
      if (common.format == "json") {
        json rows = json::array();
        for (const auto& p : curve.points)
          rows.push_back({{"hbar", p.hbar}, {"lower", p.estimate.lower}, {"upper", p.estimate.upper}, {"box_N", p.estimate.rep_size}});
        o.stream() << json{{"curve", rows},
                           {"max_adjacent_jump", curve.max_adjacent_jump},
                           {"classical_sup_lower", curve.classical->lower},
                           {"classical_consistent", curve.classical_consistent}}.dump(2)
                   << '\n';
      } else {
        o.stream() << "hbar,lower,upper,box_N,max_adjacent_jump\n";
        for (const auto& p : curve.points)
          o.stream() << format_double(p.hbar) << ',' << format_double(p.estimate.lower) << ','
                     << format_double(p.estimate.upper) << ',' << p.estimate.rep_size << ','
                     << format_double(curve.max_adjacent_jump) << '\n';
      }
      if (!curve.classical_consistent) exit_code = kViolation;
    } else if (*pos_cmd) {
      const auto state = parse_state(state_spec);
      PositivityScan scan = [&] {
        if (!a_path.empty()) {
          const auto a = load_element(a_path);
          return positivity_scan(state, DeformationContext(structure_for(common.structure, &a), hbar), {a});
        }
        // "standard" follows the dimension of a point or density state.
        int n = 1;
        if (const auto* p = std::get_if<PointState>(&state.kind())) n = static_cast<int>(p->x.size() / 2);
        if (const auto* d = std::get_if<DensityState>(&state.kind())) n = d->density.dim_n();
        const auto structure = common.structure == "standard" ? make_standard_structure(n)
                                                              : load_structure(common.structure);
        return positivity_scan(state, DeformationContext(structure, hbar), trials, modes, seed);
      }();
      const bool passed = scan.min_found >= -tolerance * scan.max_l1_squared &&
                          scan.max_imaginary_ratio <= 1e-10;
      write_json(common.out_path, out,
                 {{"state", state.describe()},
                  {"hbar", hbar},
                  {"min_found", scan.min_found},
                  {"worst_case", element_to_json(scan.worst_case)},
                  {"max_l1_squared", scan.max_l1_squared},
                  {"max_imaginary_ratio", scan.max_imaginary_ratio},
                  {"trials", scan.trials},
                  {"seed", scan.seed},
                  {"tolerance", tolerance},
                  {"passed", passed}});
      if (!passed) exit_code = kViolation;
    } else if (*sos_cmd) {
      const auto structure = structure_for(common.structure);
      FourierElement a = [&] {
        if (!a_path.empty()) return load_element(a_path);
        Rng rng(seed);
        return random_element(rng, structure.dim_n(), modes);
      }();
      const DeformationContext ctx(structure, hbar);
      const int cutoff = sos_cutoff(ctx, a, tail);
      const auto series = sos_series(ctx, a, cutoff);
      const double discrepancy = l1_distance(series.approx, smooth(ctx, star_product(ctx, involution(a), a)));
      const bool passed = discrepancy <= sos_tolerance;
      write_json(common.out_path, out,
                 {{"element", element_to_json(a)},
                  {"hbar", hbar},
                  {"cutoff", cutoff},
                  {"tail_bound", series.tail_bound},
                  {"discrepancy", discrepancy},
                  {"tolerance", sos_tolerance},
                  {"passed", passed}});
      if (!passed) exit_code = kViolation;
    }
  } catch (const DimensionError& e) {
    err << "dimension error: " << e.what() << '\n';
    return kDimensionError;
  } catch (const StructureError& e) {
    err << "structure error: " << e.what() << '\n';
    return kDimensionError;
  } catch (const SchemaError& e) {
    err << "input error: " << e.what() << '\n';
    return kSchemaError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << '\n';
    return kSchemaError;
  } catch (const ConvergenceError& e) {
    err << "estimator failure: " << e.what() << '\n';
    return kViolation;
  }
  return exit_code;
}

}  // namespace rieffel::cli
