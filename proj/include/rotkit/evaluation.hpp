#pragma once

#include <span>
#include <string>
#include <vector>

#include "rotkit/labels.hpp"

namespace rotkit {

struct RecordError {
  std::string id;
  double geodesic = 0.0;  // radians
};

struct GeodesicReport {
  double mean = 0.0;  // radians
  double median = 0.0;
  double max = 0.0;
  std::vector<RecordError> per_record;  // sorted by id
};

/// Mean geodesic error between records paired by id. The id sets must match
/// exactly (ValidationError lists what is missing on each side); duplicate
/// ids are rejected. Pairs are processed in id order, so the result does not
/// depend on argument order or file order.
GeodesicReport mean_geodesic_error(std::span<const PoseRecord> predictions,
                                   std::span<const PoseRecord> ground_truth);

/// Batch geodesic distances a[k] vs b[k] through the SIMD angle kernel.
/// Bit-identical to geodesic_distance on each pair.
std::vector<double> geodesic_distances(std::span<const RotationMatrix> a,
                                       std::span<const RotationMatrix> b);

}  // namespace rotkit
