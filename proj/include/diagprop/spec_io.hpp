#ifndef DIAGPROP_SPEC_IO_HPP
#define DIAGPROP_SPEC_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "diagprop/obstruction.hpp"

namespace diagprop {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSpecFileVersion = 1;

struct ReportOptions {
  std::string format = "json";  // "json" or "text"
  std::optional<int> chi_window;

  friend bool operator==(const ReportOptions&, const ReportOptions&) = default;
};

/* Parsed form of a variety-spec file:
 *   { "version": 1,
 *     "varieties": [ { "name": ..., "kind": ..., ... }, ... ],
 *     "options": { "format": "json", "chi_window": 12 } }
 * Parsing is strict: unknown fields, duplicate names, or a version other
 * than 1 are errors with a JSON-path location. */
struct SpecFile {
  int version = kSpecFileVersion;
  std::vector<VarietySpec> varieties;
  ReportOptions options;

  friend bool operator==(const SpecFile&, const SpecFile&) = default;
};

SpecFile parse_spec_file(const std::string& text);
std::string serialize_spec_file(const SpecFile& file);  // canonical; parse round-trips

/* Reports for one input variety. A per-entry failure is recorded here and
 * does not abort the rest of the batch. */
struct VarietyResult {
  std::string name;
  VarietySpec spec;
  std::vector<ObstructionReport> reports;
  std::optional<std::string> error;
};

struct ReportDocument {
  std::string tool_version = kToolVersion;
  std::vector<VarietyResult> results;  // input order
};

ReportDocument run_reports(const SpecFile& file);

/* Canonical JSON: sorted keys, rationals as "p/q" strings, results in input
 * order, no timestamps. Identical input bytes produce identical output
 * bytes. */
std::string report_to_canonical_json(const ReportDocument& doc);

/* Human rendering; every verdict line carries its citation keys. */
std::string report_to_text(const ReportDocument& doc);

/* Command-line entry point (subcommands: verdict, candidates, chi, ring,
 * sq2). Returns the process exit code: 0 success, 1 input error, 2 internal
 * invariant violation. Timing goes to err as a sidecar, never into the
 * canonical output. */
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace diagprop

#endif
