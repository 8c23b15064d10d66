#pragma once

// Command implementations behind the `rotkit` executable. Each command is a
// pure function of its input files, options and seed.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rotkit/coverage.hpp"
#include "rotkit/drawing.hpp"
#include "rotkit/evaluation.hpp"

namespace rotkit::cli {

namespace fs = std::filesystem;

enum class AugmentMode { random, rotate, flip };

struct AugmentOptions {
  fs::path input;
  fs::path output;
  AugmentMode mode = AugmentMode::random;
  double budget_deg = 20.0;    // random mode
  double angle_deg = 0.0;      // rotate / flip modes
  std::size_t multiplier = 1;  // outputs per input record
  std::uint64_t seed = 0;
};

struct AugmentSummary {
  std::size_t records_in = 0;
  std::size_t records_out = 0;
  std::size_t rotated = 0;
  std::size_t flipped = 0;
};

AugmentSummary cmd_augment(const AugmentOptions& opt);

enum class ConvertTarget { matrix, euler_pyr, euler_rpy };

struct ConvertSummary {
  std::size_t records = 0;
  std::size_t gimbal = 0;
};

ConvertSummary cmd_convert(const fs::path& input, const fs::path& output, ConvertTarget target);

/// Writes a per-record CSV (id,geodesic_rad,geodesic_deg) when csv_output is set.
GeodesicReport cmd_eval(const fs::path& predictions, const fs::path& ground_truth,
                        const std::optional<fs::path>& csv_output);

/// Zero-roll spiral poses as labels (ids spiral_0000, ...).
std::size_t cmd_spiral(const fs::path& output, const SpiralSpec& spec);

/// Haar-uniform poses as labels (ids random_0000, ...).
std::size_t cmd_random(const fs::path& output, std::size_t count, std::uint64_t seed);

/// CSV: id,source,pc1..pck where source indexes `inputs`.
PcaResult cmd_pca(const std::vector<fs::path>& inputs, const fs::path& output_csv, std::size_t k = 3);

/// CSV in the layout of a dataset range table, one row per input:
/// dataset,pitch_min_deg,pitch_max_deg,yaw_min_deg,yaw_max_deg,roll_min_deg,roll_max_deg,size
std::vector<EulerRangeStats> cmd_stats(const std::vector<fs::path>& inputs, std::ostream& csv);

struct DrawOptions {
  fs::path input;
  fs::path out_dir;
  double width = 400.0;
  double height = 400.0;
  double size = 100.0;
  std::optional<PixelPoint> center;  // default: image center
};

/// One SVG per record, named after the sanitized record id. Returns the count.
std::size_t cmd_draw(const DrawOptions& opt);

/// Fills the Euler views requested by `target` (clearing the others).
void refresh_views(PoseRecord& rec, ConvertTarget target);

/// Entry point of the executable. Exit codes: 0 success, 1 validation or
/// usage error, 2 I/O error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

}  // namespace rotkit::cli
