#include "rotkit/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotkit/errors.hpp"
#include "rotkit/euler.hpp"
#include "rotkit/labels.hpp"
#include "text_format.hpp"

namespace rotkit::cli {

using Json = nlohmann::ordered_json;

namespace {

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void finish_output(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

// Recomputes whichever Euler views the record already carries.
void refresh_existing_views(PoseRecord& rec) {
  const bool pyr = rec.euler_pyr.has_value();
  const bool rpy = rec.euler_rpy.has_value();
  rec.euler_pyr.reset();
  rec.euler_rpy.reset();
  rec.gimbal = false;
  rec.gimbal_sum.reset();
  if (pyr) refresh_views(rec, ConvertTarget::euler_pyr);
  if (rpy) {
    const RpySolution s = extract_rpy(rec.rotation);
    rec.euler_rpy = s.value;
    rec.gimbal = rec.gimbal || s.kind == RpyKind::gimbal;
  }
}

std::string sanitize_filename(const std::string& id) {
  std::string out;
  out.reserve(id.size());
  for (char ch : id) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
                    ch == '-' || ch == '_' || ch == '.';
    out += ok ? ch : '_';
  }
  if (out.empty() || out == "." || out == "..") out = "_" + out;
  return out;
}

std::string padded_id(const char* prefix, std::size_t i, std::size_t n) {
  std::string num = std::to_string(i);
  const std::size_t width = std::max<std::size_t>(4, std::to_string(n ? n - 1 : 0).size());
  if (num.size() < width) num.insert(0, width - num.size(), '0');
  return std::string(prefix) + num;
}

void write_generated(const fs::path& output, const char* prefix, std::span<const RotationMatrix> rots) {
  std::vector<PoseRecord> records(rots.size());
  for (std::size_t i = 0; i < rots.size(); ++i) {
    records[i].id = padded_id(prefix, i, rots.size());
    records[i].rotation = rots[i];
    refresh_views(records[i], ConvertTarget::euler_pyr);
  }
  write_labels(output, records);
}

}  // namespace

void refresh_views(PoseRecord& rec, ConvertTarget target) {
  rec.euler_pyr.reset();
  rec.euler_rpy.reset();
  rec.gimbal = false;
  rec.gimbal_sum.reset();
  switch (target) {
    case ConvertTarget::matrix:
      break;
    case ConvertTarget::euler_pyr: {
      const PyrSolutions s = extract_pyr(rec.rotation);
      rec.euler_pyr = s.primary;
      rec.gimbal = s.kind != PyrKind::regular;
      rec.gimbal_sum = s.gimbal_sum;
      break;
    }
    case ConvertTarget::euler_rpy: {
      const RpySolution s = extract_rpy(rec.rotation);
      rec.euler_rpy = s.value;
      rec.gimbal = s.kind == RpyKind::gimbal;
      break;
    }
  }
}

AugmentSummary cmd_augment(const AugmentOptions& opt) {
  if (opt.multiplier < 1) throw InvalidArgument("--multiplier must be at least 1");
  if (!std::isfinite(opt.angle_deg)) throw InvalidArgument("--angle-deg must be finite");
  const double budget = deg_to_rad(opt.budget_deg);
  if (opt.mode == AugmentMode::random && !(opt.budget_deg >= 0.0 && opt.budget_deg <= 90.0))
    throw InvalidArgument("--budget-deg must lie in [0, 90]");

  const std::vector<PoseRecord> input = read_labels(opt.input);
  const std::size_t mult = opt.multiplier;
  AugmentSummary summary;
  summary.records_in = input.size();

  std::vector<RotationMatrix> fixed_out;
  AugmentOp fixed_op;
  if (opt.mode != AugmentMode::random) {
    fixed_op = {opt.mode == AugmentMode::rotate ? AugmentKind::rotate : AugmentKind::flip,
                deg_to_rad(opt.angle_deg)};
    const std::vector<RotationMatrix> rots = rotations_of(input);
    fixed_out.resize(rots.size());
    apply_batch(fixed_op, rots, fixed_out);
  }

  std::vector<PoseRecord> output;
  output.reserve(input.size() * mult);
  for (std::size_t i = 0; i < input.size(); ++i) {
    for (std::size_t j = 0; j < mult; ++j) {
      PoseRecord rec = input[i];
      if (mult > 1) rec.id += "#" + std::to_string(j);
      AugmentOp op = fixed_op;
      if (opt.mode == AugmentMode::random) {
        // Same stream layout as densify_rolls.
        RandomStream rng(opt.seed, i * mult + j);
        auto [rot, drawn] = random_augment(input[i].rotation, budget, rng);
        rec.rotation = rot;
        op = drawn;
      } else {
        rec.rotation = fixed_out[i];
      }
      if (!is_rotation(rec.rotation))
        throw ValidationError("record '" + rec.id + "': augmentation left SO(3)");
      rec.provenance.push_back(op);
      refresh_existing_views(rec);
      (op.kind == AugmentKind::rotate ? summary.rotated : summary.flipped) += 1;
      output.push_back(std::move(rec));
    }
  }
  write_labels(opt.output, output);
  summary.records_out = output.size();
  return summary;
}

ConvertSummary cmd_convert(const fs::path& input, const fs::path& output, ConvertTarget target) {
  std::vector<PoseRecord> records = read_labels(input);
  ConvertSummary summary;
  summary.records = records.size();
  for (PoseRecord& rec : records) {
    refresh_views(rec, target);
    if (rec.gimbal) ++summary.gimbal;
  }
  write_labels(output, records);
  return summary;
}

GeodesicReport cmd_eval(const fs::path& predictions, const fs::path& ground_truth,
                        const std::optional<fs::path>& csv_output) {
  const std::vector<PoseRecord> pred = read_labels(predictions);
  const std::vector<PoseRecord> truth = read_labels(ground_truth);
  GeodesicReport report = mean_geodesic_error(pred, truth);
  if (csv_output) {
    std::ofstream out = open_output(*csv_output);
    out << "id,geodesic_rad,geodesic_deg\n";
    for (const RecordError& e : report.per_record)
      out << e.id << ',' << text::shortest(e.geodesic) << ',' << text::shortest(rad_to_deg(e.geodesic))
          << '\n';
    finish_output(out, *csv_output);
  }
  return report;
}

std::size_t cmd_spiral(const fs::path& output, const SpiralSpec& spec) {
  const std::vector<RotationMatrix> rots = spiral_rotations(spec);
  write_generated(output, "spiral_", rots);
  return rots.size();
}

std::size_t cmd_random(const fs::path& output, std::size_t count, std::uint64_t seed) {
  const std::vector<RotationMatrix> rots = random_rotations(count, seed);
  write_generated(output, "random_", rots);
  return rots.size();
}

PcaResult cmd_pca(const std::vector<fs::path>& inputs, const fs::path& output_csv, std::size_t k) {
  if (inputs.empty()) throw InvalidArgument("pca needs at least one --input");
  std::vector<Vec9> vectors;
  std::vector<std::pair<std::string, std::size_t>> rows;
  for (std::size_t s = 0; s < inputs.size(); ++s) {
    for (const PoseRecord& rec : read_labels(inputs[s])) {
      vectors.push_back(flatten9(rec.rotation));
      rows.emplace_back(rec.id, s);
    }
  }
  if (vectors.size() < 2) throw ValidationError("pca needs at least 2 records");
  PcaResult res = pca_project(vectors, k);

  std::ofstream out = open_output(output_csv);
  out << "id,source";
  for (std::size_t c = 0; c < k; ++c) out << ",pc" << c + 1;
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << rows[i].first << ',' << rows[i].second;
    for (double v : res.projected[i]) out << ',' << text::shortest(v == 0.0 ? 0.0 : v);
    out << '\n';
  }
  finish_output(out, output_csv);
  return res;
}

std::vector<EulerRangeStats> cmd_stats(const std::vector<fs::path>& inputs, std::ostream& csv) {
  if (inputs.empty()) throw InvalidArgument("stats needs at least one --input");
  std::vector<EulerRangeStats> all;
  csv << "dataset,pitch_min_deg,pitch_max_deg,yaw_min_deg,yaw_max_deg,roll_min_deg,roll_max_deg,size\n";
  for (const fs::path& p : inputs) {
    const std::vector<PoseRecord> recs = read_labels(p);
    if (recs.empty()) throw ValidationError("'" + p.string() + "' has no records");
    const EulerRangeStats st = euler_range_stats(rotations_of(recs));
    auto num = [](double v) { return text::shortest(v == 0.0 ? 0.0 : v); };
    csv << p.stem().string() << ',' << num(st.pitch.min_deg) << ',' << num(st.pitch.max_deg) << ','
        << num(st.yaw.min_deg) << ',' << num(st.yaw.max_deg) << ',' << num(st.roll.min_deg) << ','
        << num(st.roll.max_deg) << ',' << st.count << '\n';
    all.push_back(st);
  }
  return all;
}

std::size_t cmd_draw(const DrawOptions& opt) {
  if (!(opt.width > 0.0 && opt.height > 0.0)) throw InvalidArgument("--width and --height must be positive");
  if (!(opt.size > 0.0)) throw InvalidArgument("--size must be positive");
  const std::vector<PoseRecord> records = read_labels(opt.input);
  std::error_code ec;
  fs::create_directories(opt.out_dir, ec);
  if (ec) throw IoError("cannot create '" + opt.out_dir.string() + "': " + ec.message());

  const PixelPoint center = opt.center.value_or(PixelPoint{(opt.width - 1.0) / 2.0, (opt.height - 1.0) / 2.0});
  std::set<std::string> used;
  for (const PoseRecord& rec : records) {
    const std::string base = sanitize_filename(rec.id);
    std::string name = base;
    for (std::size_t k = 1; !used.insert(name).second; ++k) name = base + "_" + std::to_string(k);
    const fs::path path = opt.out_dir / (name + ".svg");
    const AxisSegments segs = segments(project_axes(rec.rotation), DrawSpec{center, opt.size});
    std::ofstream out = open_output(path);
    out << render_svg(segs, opt.width, opt.height, rec.image_path);
    finish_output(out, path);
  }
  return records.size();
}

// ---------------------------------------------------------------------------
// Argument handling

namespace {

std::vector<double> parse_numbers(const std::string& text, std::size_t count, const char* flag) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string item = text.substr(pos, comma - pos);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size() || !std::isfinite(v))
      throw InvalidArgument(std::string(flag) + ": expected " + std::to_string(count) +
                            " comma-separated numbers, got '" + text + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  if (out.size() != count)
    throw InvalidArgument(std::string(flag) + ": expected " + std::to_string(count) +
                          " comma-separated numbers, got '" + text + "'");
  return out;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  const char* env = std::getenv("ROTKIT_SEED");
  if (!env || !*env) return 0;
  std::uint64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto res = std::from_chars(env, end, v);
  if (res.ec != std::errc() || res.ptr != end)
    throw InvalidArgument(std::string("ROTKIT_SEED must be an unsigned integer, got '") + env + "'");
  return v;
}

Json report_json(const GeodesicReport& r) {
  return Json{{"command", "eval"},
              {"records", r.per_record.size()},
              {"mean_rad", r.mean},
              {"mean_deg", rad_to_deg(r.mean)},
              {"median_rad", r.median},
              {"max_rad", r.max}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Head-pose rotation toolkit", "rotkit"};
  app.require_subcommand(1);

  std::string input, output, reference, mode = "random", target = "euler_pyr";
  std::vector<std::string> inputs;
  std::optional<std::uint64_t> seed;
  double budget_deg = 20.0, angle_deg = 0.0, turns = 8.0, size = 100.0, width = 400.0, height = 400.0;
  std::size_t multiplier = 1, count = 1440, k = 3;
  std::string pitch_range = "-75,75", center;

  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", seed, "Random seed (default: $ROTKIT_SEED, then 0)"); };

  CLI::App* augment = app.add_subcommand("augment", "Apply image flips/rotations to pose labels");
  augment->add_option("--input", input, "Input labels (JSONL)")->required();
  augment->add_option("--output", output, "Output labels (JSONL)")->required();
  augment->add_option("--mode", mode, "random, rotate or flip")->check(CLI::IsMember({"random", "rotate", "flip"}));
  augment->add_option("--budget-deg", budget_deg, "Angle budget of random mode, degrees");
  augment->add_option("--angle-deg", angle_deg, "Rotation angle or mirror-line angle of fixed modes, degrees");
  augment->add_option("--multiplier", multiplier, "Outputs per input record");
  add_seed(augment);

  CLI::App* convert = app.add_subcommand("convert", "Fill or strip Euler views of label records");
  convert->add_option("--input", input, "Input labels (JSONL)")->required();
  convert->add_option("--output", output, "Output labels (JSONL)")->required();
  convert->add_option("--target", target, "matrix, euler_pyr or euler_rpy")
      ->check(CLI::IsMember({"matrix", "euler_pyr", "euler_rpy"}));

  CLI::App* eval = app.add_subcommand("eval", "Mean geodesic error between two label files");
  eval->add_option("--input", input, "Predicted labels (JSONL)")->required();
  eval->add_option("--reference", reference, "Ground-truth labels (JSONL)")->required();
  eval->add_option("--output", output, "Per-record CSV report");

  CLI::App* spiral = app.add_subcommand("spiral", "Zero-roll spiral of camera poses");
  spiral->add_option("--output", output, "Output labels (JSONL)")->required();
  spiral->add_option("--count", count, "Number of poses");
  spiral->add_option("--turns", turns, "Azimuth revolutions");
  spiral->add_option("--pitch-range", pitch_range, "min,max pitch in degrees");

  CLI::App* random = app.add_subcommand("random", "Haar-uniform random poses");
  random->add_option("--output", output, "Output labels (JSONL)")->required();
  random->add_option("--count", count, "Number of poses");
  add_seed(random);

  CLI::App* pca = app.add_subcommand("pca", "PCA of flattened rotation matrices");
  pca->add_option("--input", inputs, "Input labels (repeatable)")->required();
  pca->add_option("--output", output, "Output CSV")->required();
  pca->add_option("--k", k, "Number of components")->check(CLI::Range(1, 9));

  CLI::App* stats = app.add_subcommand("stats", "Euler angle ranges per label file");
  stats->add_option("--input", inputs, "Input labels (repeatable)")->required();
  stats->add_option("--output", output, "Output CSV (default: stdout)");

  CLI::App* draw = app.add_subcommand("draw", "SVG axis overlays, one per record");
  draw->add_option("--input", input, "Input labels (JSONL)")->required();
  draw->add_option("--output", output, "Output directory")->required();
  draw->add_option("--size", size, "Axis length in pixels");
  draw->add_option("--center", center, "x,y pixel position of the axis origin");
  draw->add_option("--width", width, "Image width in pixels");
  draw->add_option("--height", height, "Image height in pixels");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "rotkit: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    Json summary;
    if (*augment) {
      AugmentOptions opt;
      opt.input = input;
      opt.output = output;
      opt.mode = mode == "rotate" ? AugmentMode::rotate : mode == "flip" ? AugmentMode::flip : AugmentMode::random;
      opt.budget_deg = budget_deg;
      opt.angle_deg = angle_deg;
      opt.multiplier = multiplier;
      opt.seed = resolve_seed(seed);
      const AugmentSummary s = cmd_augment(opt);
      summary = {{"command", "augment"}, {"records_in", s.records_in}, {"records_out", s.records_out},
                 {"rotated", s.rotated}, {"flipped", s.flipped}};
    } else if (*convert) {
      const ConvertTarget t = target == "matrix"      ? ConvertTarget::matrix
                              : target == "euler_rpy" ? ConvertTarget::euler_rpy
                                                      : ConvertTarget::euler_pyr;
      const ConvertSummary s = cmd_convert(input, output, t);
      summary = {{"command", "convert"}, {"records", s.records}, {"gimbal", s.gimbal}};
    } else if (*eval) {
      std::optional<fs::path> csv;
      if (!output.empty()) csv = output;
      summary = report_json(cmd_eval(input, reference, csv));
    } else if (*spiral) {
      const std::vector<double> pr = parse_numbers(pitch_range, 2, "--pitch-range");
      SpiralSpec spec;
      spec.count = count;
      spec.turns = turns;
      spec.pitch_min = deg_to_rad(pr[0]);
      spec.pitch_max = deg_to_rad(pr[1]);
      const std::size_t n = cmd_spiral(output, spec);
      summary = {{"command", "spiral"},  {"records", n},           {"turns", turns},
                 {"pitch_min_deg", pr[0]}, {"pitch_max_deg", pr[1]}};
    } else if (*random) {
      const std::uint64_t s = resolve_seed(seed);
      summary = {{"command", "random"}, {"records", cmd_random(output, count, s)}, {"seed", s}};
    } else if (*pca) {
      std::vector<fs::path> paths(inputs.begin(), inputs.end());
      const PcaResult r = cmd_pca(paths, output, k);
      double eig_sum = 0.0;
      for (double v : r.all_eigenvalues) eig_sum += v;
      summary = {{"command", "pca"},
                 {"records", r.projected.size()},
                 {"explained_variance", r.explained_variance},
                 {"eigenvalue_sum", eig_sum},
                 {"covariance_trace", r.covariance_trace}};
    } else if (*stats) {
      std::vector<fs::path> paths(inputs.begin(), inputs.end());
      if (output.empty()) {
        cmd_stats(paths, out);
        return kExitOk;  // the CSV is the stdout payload
      }
      std::ostringstream csv;
      const auto st = cmd_stats(paths, csv);
      std::ofstream file = open_output(output);
      file << csv.str();
      finish_output(file, output);
      summary = {{"command", "stats"}, {"datasets", st.size()}};
    } else if (*draw) {
      DrawOptions opt;
      opt.input = input;
      opt.out_dir = output;
      opt.size = size;
      opt.width = width;
      opt.height = height;
      if (!center.empty()) {
        const std::vector<double> c = parse_numbers(center, 2, "--center");
        opt.center = PixelPoint{c[0], c[1]};
      }
      summary = {{"command", "draw"}, {"records", cmd_draw(opt)}};
    }
    out << summary.dump() << '\n';
    return kExitOk;
  } catch (const IoError& e) {
    err << "rotkit: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    err << "rotkit: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "rotkit: parse error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "rotkit: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace rotkit::cli
