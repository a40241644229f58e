#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cubetess/analysis.hpp"
#include "cubetess/lattice.hpp"
#include "cubetess/meshio.hpp"
#include "cubetess/planar.hpp"
#include "cubetess/voronoi.hpp"

namespace cubetess::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string f7(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

Rat parse_rat(const std::string& s) {
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw UsageError("not a rational number: '" + s + "'");
  }
}

RefinementPlan parse_plan(const std::string& s) {
  try {
    return RefinementPlan::parse(s);
  } catch (const InvalidPlan& e) {
    throw UsageError(e.what());
  }
}

SiteClass parse_class(const std::string& s) {
  try {
    return site_class_from_string(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

BoxR parse_bbox(const std::string& s) {
  std::vector<Rat> vals;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    vals.push_back(parse_rat(s.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (vals.size() != 6)
    throw UsageError("bbox needs six comma-separated rationals x0,y0,z0,x1,y1,z1");
  return {{vals[0], vals[1], vals[2]}, {vals[3], vals[4], vals[5]}};
}

std::string plan_slug(const RefinementPlan& plan) {
  std::string s = plan.str();
  for (char& c : s)
    if (c == ',') c = '-';
  return s;
}

// Resolves an export path: an existing directory (or a trailing slash)
// selects the <plan>_<name>[.off|.stl] convention inside it.
std::string resolve_export_path(const std::string& path, const std::string& fmt,
                                const RefinementPlan& plan, const std::string& name) {
  namespace fs = std::filesystem;
  if (!path.empty() && (path.back() == '/' || fs::is_directory(path)))
    return (fs::path(path) / (plan_slug(plan) + "_" + name + "." + fmt)).string();
  return path;
}

std::string format_from_path(const std::string& path, const std::string& fallback) {
  if (path.size() > 4 && path.substr(path.size() - 4) == ".off") return "off";
  if (path.size() > 4 && path.substr(path.size() - 4) == ".stl") return "stl";
  return fallback;
}

void write_mesh(const FloatMesh& mesh, const std::string& fmt, const std::string& path,
                std::ostream& out) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  if (fmt == "off")
    write_off(mesh, f);
  else if (fmt == "stl")
    write_stl(mesh, f);
  else
    throw UsageError("unknown mesh format '" + fmt + "' (use off or stl)");
  out << "wrote " << path << " (" << mesh.vertices.size() << " vertices, "
      << mesh.triangles.size() << " triangles)\n";
}

int cmd_sites(const RefinementPlan& plan, const BoxR& bbox, std::ostream& out) {
  for (const Site& s : generate(plan, bbox))
    out << to_string(s.cls) << ' ' << s.pos.x << ' ' << s.pos.y << ' ' << s.pos.z
        << '\n';
  return 0;
}

int cmd_cell(const RefinementPlan& plan, SiteClass cls, const Rat& cutoff,
             const std::vector<std::string>& export_args, std::ostream& out) {
  if (!plan.has_class(cls))
    throw UsageError("class " + to_string(cls) + " is not active in plan " + plan.str());
  Site rep{representative(cls), cls, class_level(cls)};
  ConvexCell cell = voronoi_cell(rep, plan, cutoff);
  Rat vol = volume(cell);
  FVector f = face_census(cell);

  out << "plan " << plan.str() << " class " << to_string(cls) << " generator "
      << rep.pos.str() << '\n';
  out << "volume " << vol << " (~" << f7(vol.to_double()) << ")\n";
  out << "f-vector V=" << f.vertices << " E=" << f.edges << " F=" << f.faces << '\n';
  out << "faces:";
  for (const auto& [deg, count] : f.faces_by_degree)
    out << ' ' << count << "x " << deg << "-gon";
  out << '\n';

  std::map<Rat, int> edges;
  for (const CellFace& face : cell.faces)
    for (size_t i = 0; i < face.cycle.size(); ++i) {
      int a = face.cycle[i], b = face.cycle[(i + 1) % face.cycle.size()];
      if (a < b) ++edges[norm2(cell.vertices[b] - cell.vertices[a])];
    }
  out << "edges (squared length x count):";
  for (const auto& [r2, count] : edges)
    out << ' ' << r2 << " x" << count << " (~" << f7(std::sqrt(r2.to_double())) << ")";
  out << '\n';

  if (!export_args.empty()) {
    const std::string& fmt = export_args[0];
    std::string path = resolve_export_path(export_args[1], fmt, plan, to_string(cls));
    ConvexCell cells[] = {cell};
    write_mesh(to_float_mesh(cells), fmt, path, out);
  }
  return 0;
}

int cmd_shells(const RefinementPlan& plan, SiteClass cls, const Rat& max_r2,
               std::ostream& out) {
  ShellHistogram h;
  try {
    h = shell_histogram(cls, plan, max_r2);
  } catch (const ClassNotInPlan& e) {
    throw UsageError(e.what());
  }
  for (const auto& [r2, count] : h.shells) out << count << ' ' << r2 << '\n';
  return 0;
}

int cmd_volumes(const RefinementPlan& plan, std::ostream& out) {
  VolumeTable table = volume_table(plan);
  for (const auto& e : table.entries)
    out << to_string(e.cls) << " multiplicity=" << e.multiplicity << " volume="
        << e.volume << " (~" << f7(e.volume.to_double()) << ")\n";
  Rat sum = table.weighted_sum();
  if (table.partition_ok())
    out << "partition: OK (sum = " << sum << ")\n";
  else
    out << "partition: FAIL (sum = " << sum << ")\n";
  return 0;
}

int cmd_planar(const std::string& kind, int steps, std::ostream& out) {
  if (kind != "square" && kind != "triangular")
    throw UsageError("--kind must be square or triangular");
  out << "step len2 rotation_deg area2\n";
  for (int n = 0; n <= steps; ++n) {
    Basis2 b = kind == "square" ? refine_square(n) : refine_triangular(n);
    out << n << ' ' << b.len2() << ' ' << b.rotation_deg << ' ' << b.area2() << '\n';
  }
  if (kind == "triangular")
    out << "K-point squared gap: " << triangular_k_gap2(refine_triangular(0)) << '\n';
  return 0;
}

int cmd_verify(long mc_samples, std::uint64_t seed, int grid_n, bool skip_mc,
               const std::string& report_path, std::ostream& out) {
  Report report = verify_published_values();

  // grid confirmation of the insertion points (max-min positions)
  struct GridCase {
    const char* plan;
    Vec3R point;
    Rat gap;
  };
  const GridCase grid_cases[] = {
      {"L0", {Rat(1, 2), Rat(1, 2), Rat(1, 2)}, Rat(3, 4)},
      {"L0,L1", {0, Rat(1, 4), Rat(1, 2)}, Rat(5, 16)},
      {"L0,L1,L2W", {Rat(5, 24), Rat(5, 24), Rat(5, 24)}, Rat(25, 192)},
  };
  for (const GridCase& gc : grid_cases) {
    MaxFreeReport mfr = verify_max_free_point(RefinementPlan::parse(gc.plan), grid_n);
    std::string expected = "max " + gc.gap.str() + " at " + gc.point.str();
    std::string computed = "max " + mfr.max_min_r2.str() + " at " + gc.point.str() +
                           (mfr.contains(gc.point) ? "" : " (missing)");
    report.checks.push_back({"grid/" + std::string(gc.plan), expected, computed,
                             expected == computed});
  }

  if (!skip_mc) {
    for (const char* plan_str : {"L0,L1", "L0,L1,L2W", "L0,L1,L2X", "L0,L1,L2W,L3"}) {
      RefinementPlan plan = RefinementPlan::parse(plan_str);
      VolumeTable exact = volume_table(plan);
      auto estimates = montecarlo_volumes(plan, mc_samples, seed);
      for (const auto& [cls, est] : estimates) {
        double truth = exact[cls].volume.to_double();
        bool ok = std::abs(est.estimate - truth) <= 4.0 * est.std_error;
        report.checks.push_back(
            {"montecarlo/" + plan.str() + "/" + to_string(cls),
             f7(truth) + " within 4 standard errors",
             f7(est.estimate) + " +- " + f7(est.std_error) + (ok ? "" : " (off)"), ok});
      }
    }
  }

  out << report.text();
  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) throw std::runtime_error("cannot open report file: " + report_path);
    f << report.json();
    out << "report written to " << report_path << '\n';
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_export_assembly(const RefinementPlan& plan, const std::string& figure,
                        const std::string& path, const std::string& format,
                        std::ostream& out) {
  auto site = [](long x, long y, long z, long den, SiteClass cls) {
    return Site{{Rat(x, den), Rat(y, den), Rat(z, den)}, cls, class_level(cls)};
  };
  std::map<std::string, std::vector<Site>> presets;
  presets["bcc-three-cells"] = {
      site(0, 0, 0, 1, SiteClass::Gamma),
      site(1, 0, 0, 1, SiteClass::Gamma),
      site(1, 1, 1, 2, SiteClass::Body),
  };
  presets["level2-gamma-w"] = {
      site(0, 0, 0, 1, SiteClass::Gamma), site(1, 0, 0, 1, SiteClass::Gamma),
      site(0, 1, 0, 1, SiteClass::Gamma), site(0, 0, 1, 1, SiteClass::Gamma),
      site(1, 1, 1, 2, SiteClass::Body),  site(2, 1, 0, 4, SiteClass::W),
  };
  presets["level3-bridge"] = {
      site(0, 0, 0, 1, SiteClass::Gamma),
      site(5, 5, 5, 24, SiteClass::Lambda),
      site(7, 7, 7, 24, SiteClass::Lambda),
      site(12, 12, 12, 24, SiteClass::Body),
  };
  presets["level3-composite"] = {
      site(0, 0, 0, 1, SiteClass::Gamma),  site(5, 5, 5, 24, SiteClass::Lambda),
      site(7, 7, 7, 24, SiteClass::Lambda), site(12, 12, 12, 24, SiteClass::Body),
      site(6, 0, 12, 24, SiteClass::W),     site(12, 0, 6, 24, SiteClass::W),
      site(5, 5, 19, 24, SiteClass::Lambda),
  };

  auto it = presets.find(figure);
  if (it == presets.end()) {
    std::string names;
    for (const auto& [name, sites] : presets) names += (names.empty() ? "" : ", ") + name;
    throw UsageError("unknown figure preset '" + figure + "' (available: " + names + ")");
  }
  for (const Site& s : it->second)
    if (!plan.has_class(s.cls))
      throw UsageError("figure '" + figure + "' needs class " + to_string(s.cls) +
                       ", which plan " + plan.str() + " does not provide");

  std::vector<ConvexCell> cells;
  for (const Site& s : it->second) cells.push_back(voronoi_cell(s, plan));
  std::string fmt = format_from_path(path, format);
  std::string resolved = resolve_export_path(path, fmt, plan, figure + "_assembly");
  write_mesh(to_float_mesh(cells), fmt, resolved, out);
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Voronoi cells of hierarchically refined simple-cubic lattices"};
  app.require_subcommand(1);

  std::string plan_str = "L0,L1", class_str = "GAMMA", bbox_str = "0,0,0,1,1,1";
  std::string max_r2_str = "6", cutoff_str = "4";
  std::vector<std::string> export_args;
  std::string report_path, figure, path, format = "stl", kind = "square";
  long mc_samples = 1000000;
  std::uint64_t seed = 1;
  int grid_n = 48, steps = 4;
  bool skip_mc = false;

  auto* sites = app.add_subcommand("sites", "List lattice sites in a half-open box");
  sites->add_option("--plan", plan_str, "Refinement plan, e.g. L0,L1,L2W")->required();
  sites->add_option("--bbox", bbox_str, "x0,y0,z0,x1,y1,z1 as exact rationals");

  auto* cell = app.add_subcommand("cell", "Construct one Voronoi cell and report it");
  cell->add_option("--plan", plan_str)->required();
  cell->add_option("--class", class_str, "GAMMA, BODY, W, X, M or LAMBDA")->required();
  cell->add_option("--cutoff-r2", cutoff_str, "Squared neighbor cutoff (default 4)");
  cell->add_option("--export", export_args, "FMT PATH (FMT: off or stl)")->expected(2);

  auto* shells = app.add_subcommand("shells", "Neighbor-shell histogram around a class");
  shells->add_option("--plan", plan_str)->required();
  shells->add_option("--class", class_str)->required();
  shells->add_option("--max-r2", max_r2_str, "Largest squared distance")->required();

  auto* volumes = app.add_subcommand("volumes", "Volume table and partition identity");
  volumes->add_option("--plan", plan_str)->required();

  auto* verify = app.add_subcommand("verify", "Re-derive every published value");
  verify->add_option("--mc-samples", mc_samples, "Monte-Carlo samples per plan");
  verify->add_option("--seed", seed, "Monte-Carlo seed");
  verify->add_option("--grid-n", grid_n, "Max-free-point grid resolution");
  verify->add_option("--report", report_path, "Write machine-readable JSON report");
  verify->add_flag("--no-mc", skip_mc, "Skip the Monte-Carlo oracle");

  auto* planar = app.add_subcommand("planar", "2-D refinement recurrence table");
  planar->add_option("--kind", kind, "square or triangular")->required();
  planar->add_option("--steps", steps, "Number of refinement steps");

  auto* assembly = app.add_subcommand("export-assembly", "Multi-cell figure presets");
  assembly->add_option("--plan", plan_str)->required();
  assembly->add_option("--figure", figure,
                       "bcc-three-cells, level2-gamma-w, level3-bridge, level3-composite")
      ->required();
  assembly->add_option("path", path, "Output file (.off/.stl) or directory")->required();
  assembly->add_option("--format", format, "Format when path is a directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (sites->parsed()) return cmd_sites(parse_plan(plan_str), parse_bbox(bbox_str), out);
    if (cell->parsed())
      return cmd_cell(parse_plan(plan_str), parse_class(class_str),
                      parse_rat(cutoff_str), export_args, out);
    if (shells->parsed())
      return cmd_shells(parse_plan(plan_str), parse_class(class_str),
                        parse_rat(max_r2_str), out);
    if (volumes->parsed()) return cmd_volumes(parse_plan(plan_str), out);
    if (verify->parsed())
      return cmd_verify(mc_samples, seed, grid_n, skip_mc, report_path, out);
    if (planar->parsed()) return cmd_planar(kind, steps, out);
    if (assembly->parsed())
      return cmd_export_assembly(parse_plan(plan_str), figure, path, format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace cubetess::cli
