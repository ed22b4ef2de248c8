#include "diagprop/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "diagprop/errors.hpp"

namespace diagprop {

using json = nlohmann::json;

namespace {

const std::map<std::string, VarietyKind>& kind_table() {
  static const std::map<std::string, VarietyKind> table = [] {
    std::map<std::string, VarietyKind> t;
    for (int k = 0; k <= static_cast<int>(VarietyKind::PicZGeneral); ++k) {
      auto kind = static_cast<VarietyKind>(k);
      t[kind_name(kind)] = kind;
    }
    return t;
  }();
  return table;
}

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(Errc::SyntaxError, path + ": " + what);
}

int get_int(const json& j, const std::string& key, const std::string& path) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) bad(path + "/" + key, "expected an integer");
  return v.get<int>();
}

std::string get_string(const json& j, const std::string& key, const std::string& path) {
  const json& v = j.at(key);
  if (!v.is_string()) bad(path + "/" + key, "expected a string");
  return v.get<std::string>();
}

Flag3 get_flag(const json& j, const std::string& key, const std::string& path) {
  const json& v = j.at(key);
  if (v.is_boolean()) return v.get<bool>() ? Flag3::True : Flag3::False;
  if (v.is_string() && v.get<std::string>() == "unknown") return Flag3::Unknown;
  bad(path + "/" + key, "expected true, false, or \"unknown\"");
}

struct KindFields {
  std::set<std::string> required;
  std::set<std::string> optional;
};

KindFields kind_fields(VarietyKind k) {
  switch (k) {
    case VarietyKind::ProjectiveSpace: return {{"n"}, {}};
    case VarietyKind::Grassmannian: return {{"n", "r"}, {}};
    case VarietyKind::Quadric: return {{"n"}, {}};
    case VarietyKind::CompleteIntersection: return {{"n", "multidegree"}, {}};
    case VarietyKind::K3Generic: return {{"d"}, {}};
    case VarietyKind::AbelianVariety: return {{"g"}, {}};
    case VarietyKind::PicZGeneral: return {{"dim", "index"}, {}};
    case VarietyKind::Product: return {{"factors"}, {}};
    case VarietyKind::Sphere: return {{"n"}, {}};
    case VarietyKind::LieGroup: return {{"dim"}, {}};
    default: return {{}, {}};
  }
}

VarietySpec parse_variety(const json& j, const std::string& path, bool require_name) {
  if (!j.is_object()) bad(path, "expected an object");
  if (!j.contains("kind")) bad(path, "missing field 'kind'");
  std::string kind_str = get_string(j, "kind", path);

  bool quartic_alias = false;
  if (kind_str == "quartic_surface_generic") {
    quartic_alias = true;
    kind_str = "k3_generic";
  }
  auto it = kind_table().find(kind_str);
  if (it == kind_table().end()) {
    std::string known;
    for (const auto& [name, _] : kind_table()) known += (known.empty() ? "" : ", ") + name;
    fail(Errc::UnknownKind,
         path + "/kind: '" + kind_str + "' is not a variety kind; known kinds: " + known +
             ", quartic_surface_generic");
  }

  VarietySpec spec;
  spec.kind = it->second;

  KindFields fields = kind_fields(spec.kind);
  const std::set<std::string> common = {"kind",
                                        "name",
                                        "mode",
                                        "pic_finitely_generated",
                                        "ample_generator_has_section",
                                        "h1_mod2_zero",
                                        "orientable",
                                        "point_property"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (common.count(key) || fields.required.count(key) || fields.optional.count(key)) continue;
    if (quartic_alias && key == "d") continue;
    bad(path + "/" + key, "unknown field for kind '" + kind_str + "'");
  }
  for (const auto& req : fields.required) {
    if (quartic_alias && req == "d") continue;  // the alias supplies d = 4
    if (!j.contains(req)) bad(path, "kind '" + kind_str + "' needs field '" + req + "'");
  }

  if (j.contains("name")) spec.name = get_string(j, "name", path);
  if (require_name && spec.name.empty()) bad(path, "missing or empty field 'name'");

  if (j.contains("n")) spec.n = get_int(j, "n", path);
  if (j.contains("r")) spec.r = get_int(j, "r", path);
  if (j.contains("g")) spec.g = get_int(j, "g", path);
  if (j.contains("dim")) spec.dim = get_int(j, "dim", path);
  if (j.contains("index")) spec.index = get_int(j, "index", path);

  if (quartic_alias) {
    spec.d = 4;
    if (j.contains("d")) {
      if (get_int(j, "d", path) != 4)
        bad(path + "/d", "quartic_surface_generic fixes d = 4");
    }
  } else if (j.contains("d")) {
    spec.d = get_int(j, "d", path);
  }

  if (j.contains("multidegree")) {
    const json& md = j.at("multidegree");
    if (!md.is_array()) bad(path + "/multidegree", "expected an array of integers");
    for (std::size_t i = 0; i < md.size(); ++i) {
      if (!md[i].is_number_integer())
        bad(path + "/multidegree/" + std::to_string(i), "expected an integer");
      spec.multidegree.push_back(md[i].get<int>());
    }
  }
  if (j.contains("factors")) {
    const json& fs = j.at("factors");
    if (!fs.is_array()) bad(path + "/factors", "expected an array of variety objects");
    for (std::size_t i = 0; i < fs.size(); ++i)
      spec.factors.push_back(
          parse_variety(fs[i], path + "/factors/" + std::to_string(i), false));
  }

  if (j.contains("pic_finitely_generated"))
    spec.pic_finitely_generated = get_flag(j, "pic_finitely_generated", path);
  if (j.contains("ample_generator_has_section"))
    spec.ample_generator_has_section = get_flag(j, "ample_generator_has_section", path);
  if (j.contains("h1_mod2_zero")) spec.h1_mod2_zero = get_flag(j, "h1_mod2_zero", path);
  if (j.contains("orientable")) spec.orientable = get_flag(j, "orientable", path);
  if (j.contains("point_property")) {
    const json& v = j.at("point_property");
    if (!v.is_boolean()) bad(path + "/point_property", "expected true or false");
    spec.point_property = v.get<bool>();
  }
  if (j.contains("mode")) {
    std::string mode = get_string(j, "mode", path);
    if (mode == "algebraic") spec.mode = Mode::Algebraic;
    else if (mode == "topological") spec.mode = Mode::Topological;
    else bad(path + "/mode", "expected \"algebraic\" or \"topological\"");
  }
  return spec;
}

json variety_to_json(const VarietySpec& spec) {
  json j = json::object();
  j["kind"] = kind_name(spec.kind);
  if (!spec.name.empty()) j["name"] = spec.name;

  KindFields fields = kind_fields(spec.kind);
  auto want = [&](const char* f) { return fields.required.count(f) != 0; };
  if (want("n")) j["n"] = spec.n;
  if (want("r")) j["r"] = spec.r;
  if (want("d")) j["d"] = spec.d;
  if (want("g")) j["g"] = spec.g;
  if (want("dim")) j["dim"] = spec.dim;
  if (want("index")) j["index"] = spec.index;
  if (want("multidegree")) j["multidegree"] = spec.multidegree;
  if (want("factors")) {
    json fs = json::array();
    for (const auto& f : spec.factors) fs.push_back(variety_to_json(f));
    j["factors"] = fs;
  }

  if (spec.pic_finitely_generated != Flag3::Unknown)
    j["pic_finitely_generated"] = spec.pic_finitely_generated == Flag3::True;
  if (spec.ample_generator_has_section != Flag3::Unknown)
    j["ample_generator_has_section"] = spec.ample_generator_has_section == Flag3::True;
  if (spec.h1_mod2_zero != Flag3::Unknown)
    j["h1_mod2_zero"] = spec.h1_mod2_zero == Flag3::True;
  if (spec.orientable != Flag3::Unknown) j["orientable"] = spec.orientable == Flag3::True;
  if (spec.point_property) j["point_property"] = true;
  if (spec.mode == Mode::Topological) j["mode"] = "topological";
  return j;
}

}  // namespace

SpecFile parse_spec_file(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::SyntaxError, std::string("spec file: ") + e.what());
  }
  if (!root.is_object()) bad("/", "expected a top-level object");
  for (const auto& [key, value] : root.items()) {
    (void)value;
    if (key != "version" && key != "varieties" && key != "options")
      bad("/" + key, "unknown field");
  }
  if (!root.contains("version")) bad("/", "missing field 'version'");
  SpecFile file;
  file.version = get_int(root, "version", "");
  if (file.version != kSpecFileVersion)
    bad("/version", "unsupported version " + std::to_string(file.version) + "; expected " +
                        std::to_string(kSpecFileVersion));
  if (!root.contains("varieties")) bad("/", "missing field 'varieties'");
  const json& vs = root.at("varieties");
  if (!vs.is_array()) bad("/varieties", "expected an array");
  std::set<std::string> names;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string path = "/varieties/" + std::to_string(i);
    VarietySpec spec = parse_variety(vs[i], path, true);
    if (!names.insert(spec.name).second) bad(path + "/name", "duplicate name '" + spec.name + "'");
    file.varieties.push_back(std::move(spec));
  }
  if (root.contains("options")) {
    const json& opts = root.at("options");
    if (!opts.is_object()) bad("/options", "expected an object");
    for (const auto& [key, value] : opts.items()) {
      (void)value;
      if (key != "format" && key != "chi_window") bad("/options/" + key, "unknown field");
    }
    if (opts.contains("format")) {
      file.options.format = get_string(opts, "format", "/options");
      if (file.options.format != "json" && file.options.format != "text")
        bad("/options/format", "expected \"json\" or \"text\"");
    }
    if (opts.contains("chi_window")) {
      int w = get_int(opts, "chi_window", "/options");
      if (w < 1) bad("/options/chi_window", "expected a positive integer");
      file.options.chi_window = w;
    }
  }
  return file;
}

std::string serialize_spec_file(const SpecFile& file) {
  json root = json::object();
  root["version"] = file.version;
  json vs = json::array();
  for (const auto& v : file.varieties) vs.push_back(variety_to_json(v));
  root["varieties"] = vs;
  if (!(file.options == ReportOptions{})) {
    json opts = json::object();
    if (file.options.format != "json") opts["format"] = file.options.format;
    if (file.options.chi_window) opts["chi_window"] = *file.options.chi_window;
    root["options"] = opts;
  }
  return root.dump(2) + "\n";
}

ReportDocument run_reports(const SpecFile& file) {
  ReportDocument doc;
  for (const auto& spec : file.varieties) {
    VarietyResult res;
    res.name = spec.name;
    res.spec = spec;
    try {
      res.reports = evaluate_all(spec);
    } catch (const Error& e) {
      if (e.code() == Errc::Internal) throw;  // a tool bug must abort the batch
      res.error = e.what();  // already prefixed with the errc name
    }
    doc.results.push_back(std::move(res));
  }
  return doc;
}

namespace {

json report_to_json(const ObstructionReport& rep, std::set<std::string>& used) {
  json r = json::object();
  r["property"] = property_name(rep.property);
  r["verdict"] = verdict_name(rep.verdict);
  json cits = json::array();
  for (const auto& c : rep.citations()) {
    cits.push_back(c);
    used.insert(c);
  }
  r["citations"] = cits;
  json trace = json::array();
  for (const auto& t : rep.trace) {
    json e = json::object();
    e["rule"] = t.rule;
    e["citation"] = t.citation;
    e["values"] = t.values;
    trace.push_back(e);
  }
  r["trace"] = trace;
  return r;
}

}  // namespace

std::string report_to_canonical_json(const ReportDocument& doc) {
  json root = json::object();
  root["tool_version"] = doc.tool_version;
  std::set<std::string> used;
  json results = json::array();
  for (const auto& res : doc.results) {
    json r = json::object();
    r["name"] = res.name;
    r["kind"] = kind_name(res.spec.kind);
    if (res.error) {
      r["error"] = *res.error;
    } else {
      json reps = json::array();
      for (const auto& rep : res.reports) reps.push_back(report_to_json(rep, used));
      r["reports"] = reps;
    }
    results.push_back(r);
  }
  root["results"] = results;
  json cits = json::object();
  for (const auto& key : used) {
    auto it = citation_index().find(key);
    if (it == citation_index().end())
      fail(Errc::Internal, "citation key '" + key + "' missing from the index");
    cits[key] = it->second;
  }
  root["citations"] = cits;
  return root.dump(2) + "\n";
}

std::string report_to_text(const ReportDocument& doc) {
  std::ostringstream out;
  out << "diagprop " << doc.tool_version << "\n";
  std::set<std::string> used;
  for (const auto& res : doc.results) {
    out << "\n" << res.name << " (" << kind_name(res.spec.kind) << ")\n";
    if (res.error) {
      out << "  error: " << *res.error << "\n";
      continue;
    }
    for (const auto& rep : res.reports) {
      out << "  " << property_name(rep.property) << ": " << verdict_name(rep.verdict) << "  [";
      bool first = true;
      for (const auto& c : rep.citations()) {
        out << (first ? "" : ", ") << c;
        used.insert(c);
        first = false;
      }
      out << "]\n";
      for (const auto& t : rep.trace) {
        out << "    " << t.rule << " (" << t.citation << ")\n";
        for (const auto& v : t.values) out << "      " << v << "\n";
      }
    }
  }
  if (!used.empty()) {
    out << "\ncitations\n";
    for (const auto& key : used) {
      auto it = citation_index().find(key);
      if (it == citation_index().end())
        fail(Errc::Internal, "citation key '" + key + "' missing from the index");
      out << "  " << key << ": " << it->second << "\n";
    }
  }
  return out.str();
}

}  // namespace diagprop
