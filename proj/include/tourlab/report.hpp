#pragma once

#include <iosfwd>
#include <string>

#include "tourlab/bench.hpp"

namespace tourlab {

struct ReportOptions {
  /// When false every timing field is written as 0 so that repeated runs
  /// produce byte-identical files.
  bool include_timing = true;
};

inline constexpr const char* kTrialCsvHeader =
    "trial_id,seed,tour_length,wall_time_ms,fitness_evaluations,iterations";

/// Per-trial rows followed by a `#`-commented summary footer.
void write_csv(std::ostream& out, const ExperimentStats& stats, const ReportOptions& options = {});
void write_json(std::ostream& out, const ExperimentStats& stats, const ReportOptions& options = {});

/// Two trial tables, one per arm, and a footer with the mean ratio and the
/// relative improvement of arm b over arm a.
void write_csv(std::ostream& out, const Comparison& comparison, const ReportOptions& options = {});
void write_json(std::ostream& out, const Comparison& comparison, const ReportOptions& options = {});

}  // namespace tourlab
