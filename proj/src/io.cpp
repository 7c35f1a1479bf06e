#include "geomgate/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace geomgate {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::string join(const std::vector<double>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_double(xs[i]);
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

double parse_double(const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.find_last_not_of(" \t") + 1 && pos < s.size()) {
      // trailing garbage beyond whitespace
      for (std::size_t i = pos; i < s.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(s[i]))) {
          throw Error("BadInput", "malformed number: " + s);
        }
      }
    }
    return v;
  } catch (const std::exception&) {
    throw Error("BadInput", "malformed number: " + s);
  }
}

json summary_to_json(const PulseSummary& s, const PulseSchedule& sched) {
  json j;
  j["path"] = s.path_name;
  j["eta"] = s.eta;
  j["theta0"] = s.theta0;
  j["phi0"] = s.phi0;
  j["gamma_g"] = s.gamma_g;
  j["gamma_total"] = s.gamma_total;
  j["total_time"] = sched.total_time;
  j["tau0"] = sched.tau0;
  j["segment_boundaries"] = sched.segment_boundaries;
  j["signed_areas"] = sched.signed_areas;
  j["samples_per_segment"] = s.samples_per_segment;
  return j;
}

}  // namespace

void write_pulse(std::ostream& out, FileFormat format,
                 const PulseSummary& summary, const PulseSchedule& schedule) {
  if (format == FileFormat::json) {
    json j;
    j["schema"] = "geomgate-pulse/1";
    j["summary"] = summary_to_json(summary, schedule);
    json rows = json::array();
    for (const auto& s : schedule.samples) {
      rows.push_back({{"t", s.time},
                      {"omega", s.control.omega_r},
                      {"phi_pulse", s.control.phi_pulse},
                      {"delta", s.control.delta},
                      {"segment", s.segment}});
    }
    j["samples"] = rows;
    out << j.dump(2) << '\n';
    return;
  }
  out << "# geomgate-pulse/1\n";
  out << "# path = " << summary.path_name << '\n';
  out << "# eta = " << format_double(summary.eta) << '\n';
  out << "# theta0 = " << format_double(summary.theta0) << '\n';
  out << "# phi0 = " << format_double(summary.phi0) << '\n';
  out << "# gamma_g = " << format_double(summary.gamma_g) << '\n';
  out << "# gamma_total = " << format_double(summary.gamma_total) << '\n';
  out << "# total_time = " << format_double(schedule.total_time) << '\n';
  out << "# tau0 = " << format_double(schedule.tau0) << '\n';
  out << "# segment_boundaries = " << join(schedule.segment_boundaries) << '\n';
  out << "# signed_areas = " << join(schedule.signed_areas) << '\n';
  out << "# samples_per_segment = " << join(summary.samples_per_segment) << '\n';
  out << "t_tau0,omega,phi_pulse,delta,segment\n";
  for (const auto& s : schedule.samples) {
    out << format_double(s.time) << ',' << format_double(s.control.omega_r)
        << ',' << format_double(s.control.phi_pulse) << ','
        << format_double(s.control.delta) << ',' << s.segment << '\n';
  }
}

namespace {

// Rebuild the uniform midpoint grid exactly as the scheduler laid it out and
// attach the stored control values.
PulseSchedule rebuild_schedule(const PulseSummary& summary,
                               const std::vector<double>& boundaries,
                               const std::vector<double>& areas, double tau0,
                               double total_time,
                               const std::vector<ControlPoint>& controls) {
  const auto& counts = summary.samples_per_segment;
  if (boundaries.size() != counts.size() + 1) {
    throw Error("BadInput", "segment boundaries and sample counts disagree");
  }
  std::size_t expected = 0;
  for (int c : counts) {
    if (c <= 0) throw Error("BadInput", "non-positive sample count");
    expected += static_cast<std::size_t>(c);
  }
  if (expected != controls.size()) {
    throw Error("BadInput", "sample row count does not match the summary");
  }

  PulseSchedule sched;
  sched.segment_boundaries = boundaries;
  sched.signed_areas = areas;
  sched.tau0 = tau0;
  sched.total_time = total_time;
  std::size_t row = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const int n = counts[i];
    const double start = boundaries[i];
    const double width = (boundaries[i + 1] - start) / n;
    const int direction =
        (i < areas.size() && areas[i] < 0.0) ? -1 : 1;
    for (int k = 0; k < n; ++k) {
      ScheduleSample s;
      s.time = start + (k + 0.5) * width;
      s.width = width;
      s.segment = static_cast<int>(i);
      s.control = controls[row++];
      s.control.signed_direction = direction;
      sched.samples.push_back(s);
    }
  }
  return sched;
}

LoadedPulse load_pulse_json(const json& j) {
  if (!j.contains("summary") || !j.contains("samples")) {
    throw Error("BadInput", "pulse JSON lacks summary or samples");
  }
  const json& s = j["summary"];
  LoadedPulse lp;
  lp.summary.path_name = s.value("path", std::string("custom"));
  lp.summary.eta = s.at("eta").get<double>();
  lp.summary.theta0 = s.value("theta0", 0.0);
  lp.summary.phi0 = s.value("phi0", 0.0);
  lp.summary.gamma_g = s.at("gamma_g").get<double>();
  lp.summary.gamma_total = s.at("gamma_total").get<double>();
  lp.summary.samples_per_segment =
      s.at("samples_per_segment").get<std::vector<int>>();

  std::vector<ControlPoint> controls;
  for (const auto& row : j["samples"]) {
    ControlPoint c;
    c.omega_r = row.at("omega").get<double>();
    c.phi_pulse = row.at("phi_pulse").get<double>();
    c.delta = row.at("delta").get<double>();
    controls.push_back(c);
  }
  lp.schedule = rebuild_schedule(
      lp.summary, s.at("segment_boundaries").get<std::vector<double>>(),
      s.at("signed_areas").get<std::vector<double>>(),
      s.at("tau0").get<double>(), s.at("total_time").get<double>(), controls);
  return lp;
}

LoadedPulse load_pulse_csv(std::istream& in) {
  LoadedPulse lp;
  std::vector<double> boundaries;
  std::vector<double> areas;
  double tau0 = M_PI;
  double total_time = 0.0;
  std::vector<ControlPoint> controls;
  bool header_seen = false;

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(0, key.find_first_not_of(" \t"));
      key.erase(key.find_last_not_of(" \t") + 1);
      std::string value = line.substr(eq + 1);
      value.erase(0, value.find_first_not_of(" \t"));
      value.erase(value.find_last_not_of(" \t") + 1);

      if (key == "path") lp.summary.path_name = value;
      else if (key == "eta") lp.summary.eta = parse_double(value);
      else if (key == "theta0") lp.summary.theta0 = parse_double(value);
      else if (key == "phi0") lp.summary.phi0 = parse_double(value);
      else if (key == "gamma_g") lp.summary.gamma_g = parse_double(value);
      else if (key == "gamma_total") lp.summary.gamma_total = parse_double(value);
      else if (key == "total_time") total_time = parse_double(value);
      else if (key == "tau0") tau0 = parse_double(value);
      else if (key == "segment_boundaries") {
        for (const auto& p : split(value, ',')) boundaries.push_back(parse_double(p));
      } else if (key == "signed_areas") {
        for (const auto& p : split(value, ',')) areas.push_back(parse_double(p));
      } else if (key == "samples_per_segment") {
        for (const auto& p : split(value, ','))
          lp.summary.samples_per_segment.push_back(
              static_cast<int>(parse_double(p)));
      }
      continue;
    }
    if (!header_seen) {  // column header line
      header_seen = true;
      continue;
    }
    const auto parts = split(line, ',');
    if (parts.size() != 5) {
      throw Error("BadInput", "pulse row must have 5 columns: " + line);
    }
    ControlPoint c;
    c.omega_r = parse_double(parts[1]);
    c.phi_pulse = parse_double(parts[2]);
    c.delta = parse_double(parts[3]);
    controls.push_back(c);
  }
  if (boundaries.empty()) {
    throw Error("BadInput", "pulse file lacks a segment_boundaries summary");
  }
  lp.schedule = rebuild_schedule(lp.summary, boundaries, areas, tau0,
                                 total_time, controls);
  return lp;
}

}  // namespace

LoadedPulse load_pulse(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw Error("BadInput", "cannot open " + filename);
  char first = 0;
  in >> std::ws;
  first = static_cast<char>(in.peek());
  if (first == '{') {
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error("BadInput", std::string("pulse JSON parse: ") + e.what());
    }
    return load_pulse_json(j);
  }
  return load_pulse_csv(in);
}

void write_trajectory(std::ostream& out, FileFormat format,
                      const TrajectorySummary& summary,
                      const std::vector<TrajectoryRow>& rows) {
  if (format == FileFormat::json) {
    json j;
    j["schema"] = "geomgate-trajectory/1";
    j["summary"] = {{"path", summary.path_name},
                    {"final_fidelity", summary.final_fidelity},
                    {"final_trace_error", summary.final_trace_error},
                    {"gamma_g", summary.gamma_g},
                    {"gamma_total", summary.gamma_total},
                    {"total_time", summary.total_time},
                    {"gamma1", summary.gamma1},
                    {"gamma2", summary.gamma2},
                    {"dt_per_tau0", summary.dt_per_tau0}};
    json jr = json::array();
    for (const auto& r : rows) {
      jr.push_back({{"t", r.t},
                    {"p0", r.p0},
                    {"p1", r.p1},
                    {"fidelity", r.fidelity},
                    {"trace_error", r.trace_error}});
    }
    j["rows"] = jr;
    out << j.dump(2) << '\n';
    return;
  }
  out << "# geomgate-trajectory/1\n";
  out << "# path = " << summary.path_name << '\n';
  out << "# final_fidelity = " << format_double(summary.final_fidelity) << '\n';
  out << "# final_trace_error = " << format_double(summary.final_trace_error)
      << '\n';
  out << "# gamma_g = " << format_double(summary.gamma_g) << '\n';
  out << "# gamma_total = " << format_double(summary.gamma_total) << '\n';
  out << "# total_time = " << format_double(summary.total_time) << '\n';
  out << "# gamma1 = " << format_double(summary.gamma1) << '\n';
  out << "# gamma2 = " << format_double(summary.gamma2) << '\n';
  out << "# dt_per_tau0 = " << summary.dt_per_tau0 << '\n';
  out << "t_tau0,p0,p1,fidelity,trace_error\n";
  for (const auto& r : rows) {
    out << format_double(r.t) << ',' << format_double(r.p0) << ','
        << format_double(r.p1) << ',' << format_double(r.fidelity) << ','
        << format_double(r.trace_error) << '\n';
  }
}

void write_scan(std::ostream& out, FileFormat format, const ScanSummary& summary,
                const std::vector<std::pair<double, double>>& scan) {
  if (format == FileFormat::json) {
    json j;
    j["schema"] = "geomgate-scan/1";
    j["summary"] = {{"gamma_target", summary.gamma_target},
                    {"theta_c", summary.theta_c},
                    {"total_time", summary.total_time}};
    json jr = json::array();
    for (const auto& [theta, t] : scan) jr.push_back({{"theta_c", theta}, {"time", t}});
    j["scan"] = jr;
    out << j.dump(2) << '\n';
    return;
  }
  out << "# geomgate-scan/1\n";
  out << "# gamma_target = " << format_double(summary.gamma_target) << '\n';
  out << "# theta_c = " << format_double(summary.theta_c) << '\n';
  out << "# total_time = " << format_double(summary.total_time) << '\n';
  out << "theta_c,total_time\n";
  for (const auto& [theta, t] : scan) {
    out << format_double(theta) << ',' << format_double(t) << '\n';
  }
}

void write_bench(std::ostream& out, FileFormat format,
                 const std::vector<BenchRow>& rows) {
  if (format == FileFormat::json) {
    json j;
    j["schema"] = "geomgate-bench/1";
    json jr = json::array();
    for (const auto& r : rows) {
      jr.push_back({{"path", r.path_name},
                    {"total_time", r.total_time},
                    {"gamma_g", r.gamma_g},
                    {"gamma_total", r.gamma_total},
                    {"gate_distance", r.gate_distance},
                    {"fidelity", r.fidelity}});
    }
    j["rows"] = jr;
    out << j.dump(2) << '\n';
    return;
  }
  out << "path,total_time,gamma_g,gamma_total,gate_distance,fidelity\n";
  for (const auto& r : rows) {
    out << r.path_name << ',' << format_double(r.total_time) << ','
        << format_double(r.gamma_g) << ',' << format_double(r.gamma_total)
        << ',' << format_double(r.gate_distance) << ','
        << format_double(r.fidelity) << '\n';
  }
}

ClosedPath load_path_json(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw Error("BadInput", "cannot open " + filename);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("BadInput", std::string("path JSON parse: ") + e.what());
  }

  ClosedPath path;
  path.eta = j.value("eta", 0.0);
  if (!j.contains("segments") || !j["segments"].is_array()) {
    return path;  // no segments: closure_check reports it as open
  }
  for (const auto& js : j["segments"]) {
    PathSegment s;
    const std::string kind = js.value("kind", std::string("parametric"));
    if (kind == "meridian") s.kind = SegmentKind::meridian;
    else if (kind == "arc") s.kind = SegmentKind::arc;
    else if (kind == "parametric") s.kind = SegmentKind::parametric;
    else throw Error("BadInput", "unknown segment kind: " + kind);
    s.theta_start = js.at("theta_start").get<double>();
    s.theta_end = js.at("theta_end").get<double>();
    s.phi_start = js.at("phi_start").get<double>();
    s.phi_end = js.at("phi_end").get<double>();
    s.duration = js.value("duration", 1.0);
    if (!(s.duration > 0.0)) throw Error("BadInput", "duration must be > 0");
    if (s.kind == SegmentKind::meridian && s.phi_start != s.phi_end) {
      throw Error("BadInput", "meridian segment must hold phi fixed");
    }
    if (s.kind == SegmentKind::arc && s.theta_start != s.theta_end) {
      throw Error("BadInput", "arc segment must hold theta fixed");
    }
    path.segments.push_back(s);
  }
  return path;
}

}  // namespace geomgate
