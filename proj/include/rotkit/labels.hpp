#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rotkit/augment.hpp"
#include "rotkit/euler.hpp"
#include "rotkit/rotation.hpp"

namespace rotkit {

/// One labeled sample. The matrix is the source of truth; Euler fields are
/// optional views that must agree with it.
struct PoseRecord {
  std::string id;
  std::optional<std::string> image_path;
  RotationMatrix rotation = Matrix3::identity();
  std::optional<EulerPyr> euler_pyr;  // radians in memory, degrees on disk
  std::optional<EulerRpy> euler_rpy;
  bool gimbal = false;                // an Euler view came from a Gimbal branch
  std::optional<double> gimbal_sum;   // coupled p -/+ r, radians
  std::vector<AugmentOp> provenance;
};

/// Geodesic tolerance between a stored Euler view and the matrix.
inline constexpr double kEulerViewTol = 1e-6;
/// Same, for views flagged as Gimbal-branch readings (the branch snaps yaw
/// to +-pi/2, which moves the reading by up to asin(gimbal_eps)).
inline constexpr double kGimbalViewTol = 2e-4;

/// JSON Lines label files:
///   {"id": "...", "image_path": "...", "rotation": [9 numbers, row-major],
///    "euler_pyr_deg": [pitch, yaw, roll], "euler_rpy_deg": [roll, pitch, yaw],
///    "gimbal": true, "gimbal_sum_deg": x,
///    "provenance": [{"op": "rotate"|"flip", "angle_deg": x}, ...]}
/// Only id and rotation are required. Blank lines are skipped. Doubles are
/// written in shortest round-trip form, so rotations survive write/read
/// bit-exactly.
///
/// Throws ParseError (with line number) on malformed lines and
/// ValidationError (naming the record id) when a rotation is not in SO(3)
/// or an Euler view disagrees with it.
std::vector<PoseRecord> parse_labels(std::istream& in);
std::vector<PoseRecord> read_labels(const std::filesystem::path& path);

void write_labels(std::ostream& out, std::span<const PoseRecord> records);
void write_labels(const std::filesystem::path& path, std::span<const PoseRecord> records);

std::string to_json_line(const PoseRecord& record);

/// Throws ValidationError unless the record satisfies the invariants above.
void validate_record(const PoseRecord& record);

std::vector<RotationMatrix> rotations_of(std::span<const PoseRecord> records);

}  // namespace rotkit
