#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "diagprop/catalog.hpp"
#include "diagprop/charclass.hpp"
#include "diagprop/element_parse.hpp"
#include "diagprop/spec_io.hpp"
#include "diagprop/steenrod.hpp"

namespace diagprop {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::UsageError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  struct Timing {
    std::ostream& err;
    std::chrono::steady_clock::time_point t0;
    ~Timing() {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      err << "timing_ms " << ms << "\n";
    }
  } timing{err, t0};

  CLI::App app{"exact verdicts and class computations for the diagonal property"};
  app.name("diagprop");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string spec_path;
  bool as_json = false;
  bool as_text = false;
  CLI::App* verdict = app.add_subcommand("verdict", "evaluate a variety-spec file");
  verdict->add_option("file", spec_path, "spec file (JSON)")->required();
  CLI::Option* opt_json = verdict->add_flag("--json", as_json, "canonical JSON output");
  verdict->add_flag("--text", as_text, "human-readable output")->excludes(opt_json);

  std::string cand_path;
  std::optional<int> cand_window;
  CLI::App* candidates =
      app.add_subcommand("candidates", "cohomologically trivial twists per variety");
  candidates->add_option("file", cand_path, "spec file (JSON)")->required();
  candidates->add_option("--window", cand_window, "override the twist window half-width");

  CLI::App* chi = app.add_subcommand("chi", "Euler characteristic helpers");
  chi->require_subcommand(1);
  long long rank = 0, d1 = 0, d2 = 0, d3 = 0;
  CLI::App* chi_q3 = chi->add_subcommand("q3", "chi of a bundle on Q_3 by class data");
  chi_q3->add_option("--rank", rank, "bundle rank")->required();
  chi_q3->add_option("--d1", d1, "c1 = d1 x")->required();
  chi_q3->add_option("--d2", d2, "c2 = d2 y")->required();
  chi_q3->add_option("--d3", d3, "c3 = d3 xy")->required();
  long long chi0 = 0, dsq = 0, ddotk = 0;
  CLI::App* chi_surface = chi->add_subcommand("surface", "surface Riemann-Roch");
  chi_surface->add_option("--chi0", chi0, "chi(O)")->required();
  chi_surface->add_option("--dsq", dsq, "D.D")->required();
  chi_surface->add_option("--ddotk", ddotk, "D.K")->required();

  CLI::App* ring = app.add_subcommand("ring", "graded ring arithmetic");
  ring->require_subcommand(1);
  std::string ring_id, elem_a, elem_b;
  CLI::App* ring_mul = ring->add_subcommand("mul", "multiply two ring elements");
  ring_mul->add_option("id", ring_id, "ring id (q3, q5, p2, q3_z2, ...)")->required();
  ring_mul->add_option("a", elem_a, "left factor")->required();
  ring_mul->add_option("b", elem_b, "right factor")->required();

  int sq2_m = 0;
  std::string sq2_elem;
  CLI::App* sq2_cmd = app.add_subcommand("sq2", "Sq^2 on H*(Q_{2m-1}; Z/2)");
  sq2_cmd->add_option("m", sq2_m, "quadric parameter m >= 2")->required();
  sq2_cmd->add_option("element", sq2_elem, "element in xi, eta")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (verdict->parsed()) {
      SpecFile file = parse_spec_file(read_file(spec_path));
      if (as_json) file.options.format = "json";
      if (as_text) file.options.format = "text";
      ReportDocument doc = run_reports(file);
      out << (file.options.format == "text" ? report_to_text(doc)
                                            : report_to_canonical_json(doc));
      return 0;
    }
    if (candidates->parsed()) {
      SpecFile file = parse_spec_file(read_file(cand_path));
      std::optional<int> window = cand_window ? cand_window : file.options.chi_window;
      nlohmann::json root = nlohmann::json::object();
      root["tool_version"] = kToolVersion;
      nlohmann::json results = nlohmann::json::array();
      for (const auto& spec : file.varieties) {
        nlohmann::json r = nlohmann::json::object();
        r["name"] = spec.name;
        r["kind"] = kind_name(spec.kind);
        try {
          CandidateScan scan = coh_trivial_candidates(spec, window);
          r["window"] = {scan.window_lo, scan.window_hi};
          r["canonical_twist"] = scan.canonical_twist;
          r["candidates"] = scan.candidates;
          nlohmann::json entries = nlohmann::json::array();
          for (const auto& e : scan.entries) {
            nlohmann::json je = nlohmann::json::object();
            je["n"] = e.n;
            je["status"] = e.status;
            if (e.chi) je["chi"] = rational_to_string(*e.chi);
            entries.push_back(je);
          }
          r["entries"] = entries;
        } catch (const Error& e) {
          if (e.code() == Errc::Internal) throw;
          r["error"] = e.what();
        }
        results.push_back(r);
      }
      root["results"] = results;
      out << root.dump(2) << "\n";
      return 0;
    }
    if (chi_q3->parsed()) {
      if (rank < 0) fail(Errc::UsageError, "rank must be non-negative");
      out << rational_to_string(hrr_q3_closed_form(Int(rank), Int(d1), Int(d2), Int(d3)))
          << "\n";
      return 0;
    }
    if (chi_surface->parsed()) {
      out << euler_char_surface({Int(chi0)}, Int(dsq), Int(ddotk)).str() << "\n";
      return 0;
    }
    if (ring_mul->parsed()) {
      RingPtr r = ring_by_id(ring_id);
      RingElement a = parse_ring_element(r, elem_a);
      RingElement b = parse_ring_element(r, elem_b);
      out << (a * b).to_string() << "\n";
      return 0;
    }
    if (sq2_cmd->parsed()) {
      Sq2Spec spec = sq2_quadric_spec(sq2_m);
      RingElement a = parse_ring_element(spec.ring, sq2_elem);
      out << sq2(spec, a).to_string() << "\n";
      return 0;
    }
    fail(Errc::UsageError, "no subcommand selected");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::Internal ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: Internal: " << e.what() << "\n";
    return 2;
  }
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return cli_run(args, std::cout, std::cerr);
}

}  // namespace diagprop
