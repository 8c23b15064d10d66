#include "rotkit/evaluation.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rotkit/errors.hpp"
#include "rotkit/kernels.hpp"

namespace rotkit {

namespace {

std::map<std::string, const PoseRecord*> index_by_id(std::span<const PoseRecord> records,
                                                     const char* which) {
  std::map<std::string, const PoseRecord*> out;
  for (const PoseRecord& r : records) {
    if (!out.emplace(r.id, &r).second)
      throw ValidationError(std::string("duplicate id '") + r.id + "' in " + which);
  }
  return out;
}

std::string join_ids(const std::vector<std::string>& ids) {
  constexpr std::size_t kShown = 20;
  std::string s;
  for (std::size_t i = 0; i < ids.size() && i < kShown; ++i) s += (i ? ", " : "") + ids[i];
  if (ids.size() > kShown) s += ", ... (" + std::to_string(ids.size()) + " total)";
  return s;
}

}  // namespace

std::vector<double> geodesic_distances(std::span<const RotationMatrix> a,
                                       std::span<const RotationMatrix> b) {
  if (a.size() != b.size()) throw InvalidArgument("geodesic_distances: sizes differ");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!is_rotation(a[k]) || !is_rotation(b[k]))
      throw InvalidArgument("geodesic_distances: pair " + std::to_string(k) +
                            " contains a non-rotation");
  }
  std::vector<double> out(a.size());
  std::vector<double> two_sin(a.size());
  kernels::angle_terms(a, b, out, two_sin);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = geodesic_from_terms(out[k], two_sin[k]);
  return out;
}

GeodesicReport mean_geodesic_error(std::span<const PoseRecord> predictions,
                                   std::span<const PoseRecord> ground_truth) {
  const auto pred = index_by_id(predictions, "predictions");
  const auto truth = index_by_id(ground_truth, "ground truth");

  std::vector<std::string> missing_pred, missing_truth;
  for (const auto& [id, _] : truth)
    if (!pred.count(id)) missing_pred.push_back(id);
  for (const auto& [id, _] : pred)
    if (!truth.count(id)) missing_truth.push_back(id);
  if (!missing_pred.empty() || !missing_truth.empty()) {
    std::string msg = "id sets differ";
    if (!missing_pred.empty()) msg += "; missing from predictions: " + join_ids(missing_pred);
    if (!missing_truth.empty()) msg += "; missing from ground truth: " + join_ids(missing_truth);
    throw ValidationError(msg);
  }
  if (truth.empty()) throw ValidationError("no records to evaluate");

  std::vector<RotationMatrix> a, b;
  a.reserve(truth.size());
  b.reserve(truth.size());
  for (const auto& [id, rec] : truth) {
    a.push_back(pred.at(id)->rotation);
    b.push_back(rec->rotation);
  }
  const std::vector<double> d = geodesic_distances(a, b);

  GeodesicReport report;
  report.per_record.reserve(d.size());
  std::size_t k = 0;
  double sum = 0.0;
  for (const auto& [id, _] : truth) {
    report.per_record.push_back({id, d[k]});
    sum += d[k];
    report.max = std::max(report.max, d[k]);
    ++k;
  }
  report.mean = sum / static_cast<double>(d.size());

  std::vector<double> sorted = d;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  report.median = n % 2 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
  return report;
}

}  // namespace rotkit
