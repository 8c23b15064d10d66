#include "rotkit/labels.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "rotkit/errors.hpp"

namespace rotkit {

using Json = nlohmann::ordered_json;

namespace {

double number_at(const Json& arr, std::size_t i, std::size_t line, const char* field) {
  const Json& v = arr.at(i);
  if (!v.is_number()) throw ParseError(line, std::string(field) + " must contain only numbers");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(line, std::string(field) + " must be finite");
  return d;
}

std::array<double, 3> triple(const Json& obj, const char* field, std::size_t line) {
  const Json& arr = obj.at(field);
  if (!arr.is_array() || arr.size() != 3)
    throw ParseError(line, std::string(field) + " must be an array of 3 numbers");
  return {number_at(arr, 0, line, field), number_at(arr, 1, line, field),
          number_at(arr, 2, line, field)};
}

PoseRecord record_from_json(const Json& j, std::size_t line) {
  if (!j.is_object()) throw ParseError(line, "record must be a JSON object");
  PoseRecord rec;

  if (!j.contains("id") || !j["id"].is_string()) throw ParseError(line, "missing string field 'id'");
  rec.id = j["id"].get<std::string>();

  if (j.contains("image_path")) {
    if (!j["image_path"].is_string()) throw ParseError(line, "image_path must be a string");
    rec.image_path = j["image_path"].get<std::string>();
  }

  if (!j.contains("rotation")) throw ParseError(line, "missing field 'rotation'");
  const Json& rot = j["rotation"];
  if (!rot.is_array() || rot.size() != 9)
    throw ParseError(line, "rotation must be an array of 9 numbers");
  for (std::size_t k = 0; k < 9; ++k) rec.rotation.m[k] = number_at(rot, k, line, "rotation");

  if (j.contains("euler_pyr_deg")) {
    const auto t = triple(j, "euler_pyr_deg", line);
    rec.euler_pyr = pyr_from_degrees(t[0], t[1], t[2]);
  }
  if (j.contains("euler_rpy_deg")) {
    const auto t = triple(j, "euler_rpy_deg", line);
    rec.euler_rpy = EulerRpy{deg_to_rad(t[0]), deg_to_rad(t[1]), deg_to_rad(t[2])};
  }
  if (j.contains("gimbal")) {
    if (!j["gimbal"].is_boolean()) throw ParseError(line, "gimbal must be a boolean");
    rec.gimbal = j["gimbal"].get<bool>();
  }
  if (j.contains("gimbal_sum_deg")) {
    if (!j["gimbal_sum_deg"].is_number()) throw ParseError(line, "gimbal_sum_deg must be a number");
    rec.gimbal_sum = deg_to_rad(j["gimbal_sum_deg"].get<double>());
  }
  if (j.contains("provenance")) {
    const Json& prov = j["provenance"];
    if (!prov.is_array()) throw ParseError(line, "provenance must be an array");
    for (const Json& p : prov) {
      if (!p.is_object() || !p.contains("op") || !p["op"].is_string() || !p.contains("angle_deg") ||
          !p["angle_deg"].is_number())
        throw ParseError(line, "provenance entries need 'op' and numeric 'angle_deg'");
      const std::string op = p["op"].get<std::string>();
      AugmentOp a;
      if (op == "rotate") {
        a.kind = AugmentKind::rotate;
      } else if (op == "flip") {
        a.kind = AugmentKind::flip;
      } else {
        throw ParseError(line, "unknown provenance op '" + op + "'");
      }
      a.angle = deg_to_rad(p["angle_deg"].get<double>());
      rec.provenance.push_back(a);
    }
  }
  return rec;
}

Json degrees(double a, double b, double c) {
  return Json::array({rad_to_deg(a), rad_to_deg(b), rad_to_deg(c)});
}

}  // namespace

void validate_record(const PoseRecord& rec) {
  const std::string who = "record '" + rec.id + "'";
  if (!is_rotation(rec.rotation)) throw ValidationError(who + ": rotation is not in SO(3)");
  const double tol = rec.gimbal ? kGimbalViewTol : kEulerViewTol;
  if (rec.euler_pyr) {
    const double d = geodesic_distance(compose_pyr(*rec.euler_pyr), rec.rotation);
    if (!(d <= tol))
      throw ValidationError(who + ": euler_pyr_deg disagrees with rotation by " +
                            std::to_string(rad_to_deg(d)) + " deg");
  }
  if (rec.euler_rpy) {
    const double d = geodesic_distance(compose_rpy(*rec.euler_rpy), rec.rotation);
    if (!(d <= tol))
      throw ValidationError(who + ": euler_rpy_deg disagrees with rotation by " +
                            std::to_string(rad_to_deg(d)) + " deg");
  }
}

std::vector<PoseRecord> parse_labels(std::istream& in) {
  std::vector<PoseRecord> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw ParseError(line, std::string("invalid JSON: ") + e.what());
    }
    PoseRecord rec = record_from_json(j, line);
    validate_record(rec);
    out.push_back(std::move(rec));
  }
  if (in.bad()) throw IoError("read failure after line " + std::to_string(line));
  return out;
}

std::vector<PoseRecord> read_labels(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  try {
    return parse_labels(in);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " + e.what());
  }
}

std::string to_json_line(const PoseRecord& rec) {
  Json j;
  j["id"] = rec.id;
  if (rec.image_path) j["image_path"] = *rec.image_path;
  j["rotation"] = Json(rec.rotation.m);
  if (rec.euler_pyr) j["euler_pyr_deg"] = degrees(rec.euler_pyr->pitch, rec.euler_pyr->yaw, rec.euler_pyr->roll);
  if (rec.euler_rpy) j["euler_rpy_deg"] = degrees(rec.euler_rpy->roll, rec.euler_rpy->pitch, rec.euler_rpy->yaw);
  if (rec.gimbal) j["gimbal"] = true;
  if (rec.gimbal_sum) j["gimbal_sum_deg"] = rad_to_deg(*rec.gimbal_sum);
  if (!rec.provenance.empty()) {
    Json prov = Json::array();
    for (const AugmentOp& op : rec.provenance)
      prov.push_back({{"op", std::string(kind_name(op.kind))}, {"angle_deg", rad_to_deg(op.angle)}});
    j["provenance"] = std::move(prov);
  }
  return j.dump();
}

void write_labels(std::ostream& out, std::span<const PoseRecord> records) {
  for (const PoseRecord& rec : records) out << to_json_line(rec) << '\n';
}

void write_labels(const std::filesystem::path& path, std::span<const PoseRecord> records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_labels(out, records);
  out.flush();
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

std::vector<RotationMatrix> rotations_of(std::span<const PoseRecord> records) {
  std::vector<RotationMatrix> out;
  out.reserve(records.size());
  for (const PoseRecord& r : records) out.push_back(r.rotation);
  return out;
}

}  // namespace rotkit
