// toric-cohom: line-bundle cohomology on simplicial complete toric varieties.
//
// Subcommands: info, cohom, table, verify. Exit codes: 0 success,
// 1 verification mismatch, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric/errors.hpp"
#include "toric/oracle.hpp"
#include "toric/serialization.hpp"

namespace {

using nlohmann::json;
using namespace toric;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<long long> parse_divisor(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("invalid divisor coefficient: \"" + item + "\"");
    }
  }
  if (out.empty()) throw ParseError("empty divisor");
  return out;
}

Box parse_box(const std::string& text, int n) {
  std::vector<std::pair<long long, long long>> ranges;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw ParseError("box range must look like lo:hi, got \"" + item + "\"");
    try {
      const long long lo = std::stoll(item.substr(0, colon));
      const long long hi = std::stoll(item.substr(colon + 1));
      if (lo > hi) throw ParseError("box range has lo > hi: \"" + item + "\"");
      ranges.emplace_back(lo, hi);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("invalid box range: \"" + item + "\"");
    }
  }
  if (ranges.size() == 1) ranges.assign(static_cast<std::size_t>(n), ranges[0]);
  if (ranges.size() != static_cast<std::size_t>(n))
    throw ParseError("box must have 1 or " + std::to_string(n) + " ranges");
  return Box{std::move(ranges)};
}

std::string format_set(Mask m) {
  const auto idx = mask_to_indices(m);
  std::string s = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "}";
}

std::string format_h(const std::vector<std::int64_t>& h) {
  std::string s = "[";
  for (std::size_t i = 0; i < h.size(); ++i) s += (i ? ", " : "") + std::to_string(h[i]);
  return s + "]";
}

std::string format_class_group(const ClassGroup& g) {
  std::string s;
  if (g.free_rank() > 0)
    s = g.free_rank() == 1 ? "Z" : "Z^" + std::to_string(g.free_rank());
  for (const Integer& t : g.torsion_invariants())
    s += std::string(s.empty() ? "" : " + ") + "Z/" + t.str();
  return s.empty() ? "0" : s;
}

Fan load_valid_fan(const std::string& path) {
  const Fan fan = parse_fan(read_file(path));
  const FanDiagnostics diag = validate(fan);
  if (!diag.ok()) {
    std::string msg = "fan failed validation: " + path;
    for (const std::string& m : diag.messages) msg += "\n  " + m;
    throw ValidationError(msg);
  }
  return fan;
}

int cmd_info(const std::string& path, bool as_json) {
  const Fan fan = parse_fan(read_file(path));
  const FanDiagnostics diag = validate(fan);
  if (!diag.ok()) {
    if (as_json) {
      std::cout << json{{"fan_file", path}, {"diagnostics", diagnostics_to_json(diag)}}
                       .dump(2)
                << "\n";
    } else {
      std::cerr << "validation failed:\n";
      for (const std::string& m : diag.messages) std::cerr << "  " << m << "\n";
    }
    return kExitInputError;
  }

  CohomologyEngine engine(fan);
  std::vector<Mask> dual_filtered;
  for (Mask support : engine.usr())
    if (engine.table().find(support)->complement_in_usr)
      dual_filtered.push_back(support);

  if (as_json) {
    json sr = json::array();
    for (Mask g : engine.sr().generators) sr.push_back(mask_to_json(g));
    json filtered = json::array();
    for (Mask m : dual_filtered) filtered.push_back(mask_to_json(m));
    json supports = json::array();
    for (Mask key : engine.table().keys()) {
      const SupportInfo* info = engine.table().find(key);
      supports.push_back(json{{"support", mask_to_json(key)},
                              {"generators", info->generator_indices},
                              {"homology", homology_to_json(info->homology)},
                              {"complement_in_usr", info->complement_in_usr}});
    }
    const ClassGroup& g = engine.class_group();
    json torsion = json::array();
    for (const Integer& t : g.torsion_invariants()) torsion.push_back(to_int64_checked(t));
    std::cout << json{{"fan_file", path},
                      {"dim", fan.dim},
                      {"ray_count", fan.ray_count()},
                      {"diagnostics", diagnostics_to_json(diag)},
                      {"class_group", {{"free_rank", g.free_rank()}, {"torsion", torsion}}},
                      {"stanley_reisner", std::move(sr)},
                      {"usr_count", engine.usr().size()},
                      {"dual_filtered", std::move(filtered)},
                      {"support_table", std::move(supports)}}
                     .dump(2)
              << "\n";
    return kExitOk;
  }

  std::cout << "fan: " << path << "  (dim " << fan.dim << ", " << fan.ray_count()
            << " rays)\n";
  std::cout << "validation: ok\n";
  std::cout << "class group: " << format_class_group(engine.class_group()) << "\n";
  std::cout << "SR generators (" << engine.sr().generators.size() << "):";
  for (Mask g : engine.sr().generators) std::cout << " " << format_set(g);
  std::cout << "\n|U_SR| = " << engine.usr().size() << "\n";
  std::cout << "dual-filtered supports (" << dual_filtered.size() << "):";
  for (Mask m : dual_filtered) std::cout << " " << format_set(m);
  std::cout << "\nsupport table:\n";
  for (Mask key : engine.table().keys()) {
    const SupportInfo* info = engine.table().find(key);
    std::cout << "  I=" << format_set(key) << "  lambda homology:";
    const auto nz = info->homology.nonzero();
    if (nz.empty()) std::cout << " 0";
    for (const auto& [degree, dim] : nz)
      std::cout << " dim " << dim << " in degree " << degree << ";";
    std::cout << (info->complement_in_usr ? "  [complement in U_SR]" : "") << "\n";
  }
  return kExitOk;
}

int cmd_cohom(const std::string& path, const std::string& divisor_text, bool as_json,
              bool explain) {
  const Fan fan = load_valid_fan(path);
  const std::vector<long long> divisor = parse_divisor(divisor_text);
  if (divisor.size() != static_cast<std::size_t>(fan.ray_count()))
    throw ParseError("divisor must have " + std::to_string(fan.ray_count()) +
                     " coefficients");
  CohomologyEngine engine(fan);
  const CohomologyVector v = engine.cohomology(divisor, explain);
  if (as_json) {
    std::cout << cohomology_to_json(v, explain).dump(2) << "\n";
  } else {
    std::cout << "h = " << format_h(v.h) << "\n";
    if (explain) {
      std::cout << "class " << v.divisor_class.to_string() << "\n";
      for (const CohomologyTerm& t : v.terms)
        std::cout << "  h^" << t.degree << " += " << t.multiplicity << " x "
                  << t.homology_dim << "   (I=" << format_set(t.support) << ")\n";
    }
  }
  return kExitOk;
}

int cmd_table(const std::string& path, const std::string& box_text, bool as_json) {
  const Fan fan = load_valid_fan(path);
  const Box box = parse_box(box_text, fan.ray_count());
  CohomologyEngine engine(fan);
  json rows = json::array();
  // lexicographic order: vary the last coordinate fastest
  std::vector<long long> divisor(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) divisor[i] = box.ranges[i].first;
  bool running = true;
  while (running) {
    const CohomologyVector v = engine.cohomology(divisor);
    if (as_json) {
      rows.push_back(cohomology_to_json(v, false));
    } else {
      std::string ds;
      for (std::size_t i = 0; i < divisor.size(); ++i)
        ds += (i ? "," : "") + std::to_string(divisor[i]);
      std::cout << ds << "  h = " << format_h(v.h) << "\n";
    }
    std::size_t i = box.size();
    running = false;
    while (i-- > 0) {
      if (divisor[i] < box.ranges[i].second) {
        ++divisor[i];
        running = true;
        break;
      }
      divisor[i] = box.ranges[i].first;
    }
  }
  if (as_json) std::cout << json{{"rows", std::move(rows)}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, const std::string& box_text, bool as_json,
               bool corrupt_sr) {
  const Fan fan = load_valid_fan(path);
  const Box box =
      box_text.empty() ? default_box(fan) : parse_box(box_text, fan.ray_count());

  std::optional<CohomologyEngine> engine;
  if (corrupt_sr) {
    SRSet sr = stanley_reisner(fan_complex(fan));
    if (!sr.generators.empty()) sr.generators.pop_back();
    engine.emplace(fan, std::move(sr));
  } else {
    engine.emplace(fan);
  }

  const OracleReport report = verify(*engine, box, path);
  if (as_json) {
    std::cout << report_to_json(report).dump(2) << "\n";
  } else {
    std::cout << "fan: " << path << "\n";
    std::cout << "matches: " << report.match_count
              << "  mismatches: " << report.total_mismatches
              << "  classes compared: " << report.classes_compared
              << "  skipped (support outside box): " << report.classes_skipped << "\n";
    for (const OracleMismatch& m : report.mismatches) {
      std::string ps;
      for (std::size_t i = 0; i < m.p.size(); ++i)
        ps += (i ? "," : "") + std::to_string(m.p[i]);
      std::cout << "  MISMATCH [" << m.kind << "] p=(" << ps << ") i=" << m.degree
                << " algorithm=" << m.algorithm_value << " oracle=" << m.oracle_value
                << "\n";
    }
    std::cout << (report.ok() ? "OK" : "FAILED") << "\n";
  }
  return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"line-bundle cohomology on simplicial complete toric varieties"};
  app.require_subcommand(1);

  std::string fan_file, divisor_text, box_text;
  bool as_json = false, explain = false, corrupt_sr = false;

  auto* info = app.add_subcommand("info", "fan diagnostics, SR generators, class group");
  info->add_option("fan", fan_file, "fan JSON file")->required();
  info->add_flag("--json", as_json, "machine-readable output");

  auto* cohom = app.add_subcommand("cohom", "h-vector of one line bundle");
  cohom->add_option("fan", fan_file, "fan JSON file")->required();
  cohom->add_option("--divisor", divisor_text, "coefficients a_0,a_1,...")->required();
  cohom->add_flag("--json", as_json, "machine-readable output");
  cohom->add_flag("--explain", explain, "per-support audit breakdown");

  auto* table = app.add_subcommand("table", "h-vectors over a divisor coefficient box");
  table->add_option("fan", fan_file, "fan JSON file")->required();
  table->add_option("--box", box_text, "ranges lo:hi[,lo:hi...] (one per ray, or one for all)")
      ->required();
  table->add_flag("--json", as_json, "machine-readable output");

  auto* verify_cmd = app.add_subcommand("verify", "compare the engine against the oracle");
  verify_cmd->add_option("fan", fan_file, "fan JSON file")->required();
  verify_cmd->add_option("--box", box_text,
                         "scan box lo:hi[,lo:hi...]; default [-(d+2), d+1]");
  verify_cmd->add_flag("--json", as_json, "machine-readable output");
  verify_cmd
      ->add_flag("--self-test-corrupt", corrupt_sr,
                 "negative control: drop one SR generator and expect mismatches")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (info->parsed()) return cmd_info(fan_file, as_json);
    if (cohom->parsed()) return cmd_cohom(fan_file, divisor_text, as_json, explain);
    if (table->parsed()) return cmd_table(fan_file, box_text, as_json);
    if (verify_cmd->parsed()) return cmd_verify(fan_file, box_text, as_json, corrupt_sr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
