#include "gcolor/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "gcolor/error.hpp"
#include "svg_plot.hpp"

namespace gcolor {

namespace fs = std::filesystem;

namespace {

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string opt(const std::optional<double>& v, std::string (*f)(double)) {
  return v ? f(*v) : std::string();
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(std::move(field));
      field.clear();
    } else if (ch != '\r') {
      field += ch;
    }
  }
  out.push_back(std::move(field));
  return out;
}

template <typename T>
T parse_number(const std::string& field, std::size_t line_no, const char* column) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, std::string("bad value '") + field + "' in column " + column);
  }
  return value;
}

void write_file(const fs::path& path, const std::string& header,
                const std::vector<std::string>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << header << '\n';
  for (const auto& r : rows) out << r << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

std::string format_run_row(const RunRecord& r) {
  std::ostringstream out;
  out << r.instance_id << ',' << r.n << ',' << shortest(r.c) << ',' << r.k_induced << ','
      << r.sampler << ',' << r.s << ',' << r.run_index << ',' << r.seed << ',' << r.colors_used
      << ',' << (r.success ? 1 : 0) << ',' << fixed3(r.wallclock_us) << ','
      << opt(r.qpu_modeled_us, fixed3) << ',' << r.k_iterations << ',' << r.rejected_rounds;
  return out.str();
}

std::string format_stats_row(const InstanceStats& s) {
  std::ostringstream out;
  out << s.instance_id << ',' << s.n << ',' << shortest(s.c) << ',' << s.k_induced << ','
      << s.sampler << ',' << s.s << ',' << s.runs << ',' << s.successes << ','
      << shortest(s.p_success) << ',' << shortest(s.wallclock_mean_us) << ','
      << shortest(s.wallclock_median_us) << ',' << shortest(s.wallclock_sigma_us) << ','
      << shortest(s.wallclock_p40_us) << ',' << shortest(s.wallclock_p60_us) << ','
      << (s.repetitions ? std::to_string(*s.repetitions) : std::string()) << ','
      << opt(s.tts_us, shortest);
  return out.str();
}

std::string format_group_row(const GroupStats& g) {
  std::ostringstream out;
  out << g.n << ',' << g.sampler << ',' << g.s << ',' << g.instances << ','
      << shortest(g.p_success_median) << ',' << shortest(g.p_success_p40) << ','
      << shortest(g.p_success_p60) << ',' << shortest(g.wallclock_median_us) << ','
      << shortest(g.wallclock_mean_us) << ',' << shortest(g.wallclock_sigma_us) << ','
      << opt(g.tts_median_us, shortest) << ',' << opt(g.tts_low_us, shortest) << ','
      << opt(g.tts_high_us, shortest) << ',' << g.tts_unbounded;
  return out.str();
}

std::string format_coloring_row(const RunRecord& r) {
  std::ostringstream out;
  out << r.instance_id << ',' << r.sampler << ',' << r.s << ',' << r.run_index << ',';
  for (std::size_t i = 0; i < r.coloring.size(); ++i) out << (i ? " " : "") << r.coloring[i];
  return out.str();
}

RunRecord parse_run_row(const std::string& line, std::size_t line_no) {
  const auto f = split_csv(line);
  if (f.size() != 14) {
    throw ParseError(line_no, "expected 14 fields, found " + std::to_string(f.size()));
  }
  RunRecord r;
  r.instance_id = f[0];
  r.n = parse_number<std::size_t>(f[1], line_no, "n");
  r.c = parse_number<double>(f[2], line_no, "c");
  r.k_induced = parse_number<int>(f[3], line_no, "k_induced");
  r.sampler = f[4];
  r.s = parse_number<std::size_t>(f[5], line_no, "s");
  r.run_index = parse_number<std::size_t>(f[6], line_no, "run_index");
  r.seed = parse_number<std::uint64_t>(f[7], line_no, "seed");
  r.colors_used = parse_number<int>(f[8], line_no, "colors_used");
  if (f[9] != "0" && f[9] != "1") throw ParseError(line_no, "success must be 0 or 1");
  r.success = f[9] == "1";
  r.wallclock_us = parse_number<double>(f[10], line_no, "wallclock_us");
  if (!f[11].empty()) r.qpu_modeled_us = parse_number<double>(f[11], line_no, "qpu_modeled_us");
  r.k_iterations = parse_number<std::size_t>(f[12], line_no, "k_iterations");
  r.rejected_rounds = parse_number<std::size_t>(f[13], line_no, "rejected_rounds");
  return r;
}

void write_runs_csv(const fs::path& path, std::span<const RunRecord> runs) {
  std::vector<std::string> rows;
  rows.reserve(runs.size());
  for (const auto& r : runs) rows.push_back(format_run_row(r));
  write_file(path, kRunsCsvHeader, rows);
}

void write_colorings_csv(const fs::path& path, std::span<const RunRecord> runs) {
  std::vector<std::string> rows;
  rows.reserve(runs.size());
  for (const auto& r : runs) rows.push_back(format_coloring_row(r));
  write_file(path, kColoringsCsvHeader, rows);
}

std::vector<RunRecord> read_runs_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kRunsCsvHeader) {
    throw ParseError(1, "unexpected runs.csv header", path.string());
  }
  std::vector<RunRecord> runs;
  std::size_t line_no = 1;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.empty()) continue;
      runs.push_back(parse_run_row(line, line_no));
    }
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }

  const fs::path colorings = path.parent_path() / "colorings.csv";
  std::ifstream cin(colorings, std::ios::binary);
  if (!cin) return runs;
  using Key = std::tuple<std::string, std::string, std::size_t, std::size_t>;
  std::map<Key, std::vector<int>> by_key;
  line_no = 0;
  while (std::getline(cin, line)) {
    if (++line_no == 1 || line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 5) throw ParseError(line_no, "expected 5 fields", colorings.string());
    std::vector<int> coloring;
    std::istringstream cs(f[4]);
    int c;
    while (cs >> c) coloring.push_back(c);
    by_key[Key{f[0], f[1], parse_number<std::size_t>(f[2], line_no, "s"),
               parse_number<std::size_t>(f[3], line_no, "run_index")}] = std::move(coloring);
  }
  for (auto& r : runs) {
    auto it = by_key.find(Key{r.instance_id, r.sampler, r.s, r.run_index});
    if (it != by_key.end()) r.coloring = it->second;
  }
  return runs;
}

namespace {

svg::LinePlot plot_vs(const SweepResult& sweep, bool against_s, const std::string& metric) {
  svg::LinePlot plot;
  plot.x_label = against_s ? "sample number s" : "graph size n";
  std::map<std::pair<std::string, std::size_t>, svg::Series> series;
  for (const auto& g : sweep.groups) {
    const std::size_t key_value = against_s ? g.n : g.s;
    auto& s = series[{g.sampler, key_value}];
    s.label = g.sampler + (against_s ? " n=" : " s=") + std::to_string(key_value);
    svg::Point p;
    p.x = static_cast<double>(against_s ? g.s : g.n);
    if (metric == "success") {
      p.y = g.p_success_median;
      p.lo = g.p_success_p40;
      p.hi = g.p_success_p60;
    } else if (metric == "wallclock") {
      p.y = g.wallclock_median_us;
      p.lo = g.wallclock_median_us - g.wallclock_sigma_us / 2;
      p.hi = g.wallclock_median_us + g.wallclock_sigma_us / 2;
    } else {
      p.y = g.tts_median_us;
      p.lo = g.tts_low_us;
      p.hi = g.tts_high_us;
    }
    s.points.push_back(p);
  }
  for (auto& [key, s] : series) {
    std::sort(s.points.begin(), s.points.end(),
              [](const svg::Point& a, const svg::Point& b) { return a.x < b.x; });
    plot.series.push_back(std::move(s));
  }
  if (metric == "success") {
    plot.title = "Success probability (median, 40th-60th percentile)";
    plot.y_label = "p_success";
  } else if (metric == "wallclock") {
    plot.title = "Wallclock time (median, +-sigma/2)";
    plot.y_label = "wallclock [us]";
    plot.log_y = true;
  } else {
    plot.title = "Time to solution (median over instances)";
    plot.y_label = "TTS [us]";
    plot.log_y = true;
  }
  return plot;
}

std::optional<svg::StackedPlot> timing_breakdown(const SweepResult& sweep,
                                                 const TimingConstants& timing) {
  std::optional<std::size_t> s_min;
  for (const auto& r : sweep.runs)
    if (r.qpu_modeled_us && (!s_min || r.s < *s_min)) s_min = r.s;
  if (!s_min) return std::nullopt;

  struct Acc {
    double classical = 0, reads = 0;
    std::size_t count = 0;
  };
  std::map<std::size_t, Acc> by_n;
  const double t_sample = timing.sample().count();
  for (const auto& r : sweep.runs) {
    if (!r.qpu_modeled_us || r.s != *s_min) continue;
    Acc& a = by_n[r.n];
    a.classical += r.wallclock_us - *r.qpu_modeled_us;
    if (t_sample > 0) a.reads += (*r.qpu_modeled_us - timing.program.count()) / t_sample;
    ++a.count;
  }
  svg::StackedPlot plot;
  plot.title = "Hybrid timing breakdown per run, s=" + std::to_string(*s_min);
  plot.y_label = "mean time per run [us]";
  plot.categories = {"Classical", "Programming", "Anneal", "Readout", "Delay", "Embed"};
  plot.note = "Embed is out of scope and fixed at 0; annealer categories are modeled, not measured";
  for (const auto& [n, a] : by_n) {
    const double k = static_cast<double>(a.count);
    const double reads = a.reads / k;
    plot.bars.push_back({"n=" + std::to_string(n),
                         {a.classical / k, timing.program.count(), reads * timing.anneal.count(),
                          reads * timing.readout.count(), reads * timing.delay.count(), 0.0}});
  }
  return plot;
}

}  // namespace

void emit_report(const SweepResult& sweep, const fs::path& dir, const TimingConstants& timing) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create report directory " + dir.string() + ": " + ec.message());

  write_runs_csv(dir / "runs.csv", sweep.runs);
  write_colorings_csv(dir / "colorings.csv", sweep.runs);
  std::vector<std::string> rows;
  for (const auto& c : sweep.cells) rows.push_back(format_stats_row(c));
  write_file(dir / "stats.csv", kStatsCsvHeader, rows);
  rows.clear();
  for (const auto& g : sweep.groups) rows.push_back(format_group_row(g));
  write_file(dir / "groups.csv", kGroupsCsvHeader, rows);

  for (const char* metric : {"success", "wallclock", "tts"}) {
    write_text(dir / (std::string(metric) + "_vs_s.svg"), svg::render(plot_vs(sweep, true, metric)));
    write_text(dir / (std::string(metric) + "_vs_n.svg"), svg::render(plot_vs(sweep, false, metric)));
  }
  if (auto breakdown = timing_breakdown(sweep, timing)) {
    write_text(dir / "timing_breakdown.svg", svg::render(*breakdown));
  }
}

SweepResult load_sweep(const fs::path& dir, double p_target) {
  return aggregate(read_runs_csv(dir / "runs.csv"), p_target);
}

}  // namespace gcolor
