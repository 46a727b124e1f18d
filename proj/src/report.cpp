#include "tourlab/report.hpp"

#include <ostream>

#include "json.hpp"
#include "text.hpp"

namespace tourlab {

namespace {

using nlohmann::ordered_json;

double timing(double ms, const ReportOptions& options) { return options.include_timing ? ms : 0.0; }

void write_rows(std::ostream& out, const ExperimentStats& stats, const ReportOptions& options) {
  out << kTrialCsvHeader << '\n';
  for (const auto& r : stats.trials) {
    out << r.trial_id << ',' << r.seed << ',' << format_real(r.tour_length) << ','
        << format_real(timing(r.wall_time_ms, options)) << ',' << r.fitness_evaluations << ','
        << r.iterations << '\n';
  }
}

void write_footer(std::ostream& out, const ExperimentStats& stats, const ReportOptions& options) {
  const Summary& s = stats.lengths;
  out << "# summary\n";
  out << "# instance," << stats.instance_name << '\n';
  out << "# solver," << stats.solver << '\n';
  out << "# experiment_seed," << stats.experiment_seed << '\n';
  out << "# trials," << s.count << '\n';
  out << "# mean," << format_real(s.mean) << '\n';
  out << "# std," << format_real(s.std) << '\n';
  out << "# min," << format_real(s.min) << '\n';
  out << "# q1," << format_real(s.q1) << '\n';
  out << "# median," << format_real(s.median) << '\n';
  out << "# q3," << format_real(s.q3) << '\n';
  out << "# max," << format_real(s.max) << '\n';
  out << "# degenerate," << (s.degenerate ? "true" : "false") << '\n';
  out << "# mean_wall_time_ms," << format_real(timing(stats.mean_wall_time_ms, options)) << '\n';
}

ordered_json summary_json(const ExperimentStats& stats, const ReportOptions& options) {
  const Summary& s = stats.lengths;
  return ordered_json{{"trials", s.count},     {"mean", s.mean},
                      {"std", s.std},          {"min", s.min},
                      {"q1", s.q1},            {"median", s.median},
                      {"q3", s.q3},            {"max", s.max},
                      {"degenerate", s.degenerate},
                      {"mean_wall_time_ms", timing(stats.mean_wall_time_ms, options)}};
}

ordered_json experiment_json(const ExperimentStats& stats, const ReportOptions& options) {
  ordered_json trials = ordered_json::array();
  for (const auto& r : stats.trials) {
    trials.push_back({{"trial_id", r.trial_id},
                      {"seed", r.seed},
                      {"tour_length", r.tour_length},
                      {"wall_time_ms", timing(r.wall_time_ms, options)},
                      {"fitness_evaluations", r.fitness_evaluations},
                      {"iterations", r.iterations}});
  }
  std::vector<City> best(stats.best_tour.begin(), stats.best_tour.end());
  return ordered_json{{"instance", stats.instance_name},
                      {"solver", stats.solver},
                      {"experiment_seed", stats.experiment_seed},
                      {"trials", std::move(trials)},
                      {"summary", summary_json(stats, options)},
                      {"best_length", stats.best_length},
                      {"best_tour", best}};
}

}  // namespace

void write_csv(std::ostream& out, const ExperimentStats& stats, const ReportOptions& options) {
  write_rows(out, stats, options);
  write_footer(out, stats, options);
}

void write_json(std::ostream& out, const ExperimentStats& stats, const ReportOptions& options) {
  out << experiment_json(stats, options).dump(2) << '\n';
}

void write_csv(std::ostream& out, const Comparison& comparison, const ReportOptions& options) {
  out << "# arm,a\n";
  write_csv(out, comparison.a, options);
  out << "# arm,b\n";
  write_csv(out, comparison.b, options);
  out << "# comparison\n";
  out << "# mean_ratio," << format_real(comparison.mean_ratio) << '\n';
  out << "# improvement," << format_real(comparison.improvement) << '\n';
}

void write_json(std::ostream& out, const Comparison& comparison, const ReportOptions& options) {
  ordered_json doc{{"a", experiment_json(comparison.a, options)},
                   {"b", experiment_json(comparison.b, options)},
                   {"mean_ratio", comparison.mean_ratio},
                   {"improvement", comparison.improvement}};
  out << doc.dump(2) << '\n';
}

}  // namespace tourlab
