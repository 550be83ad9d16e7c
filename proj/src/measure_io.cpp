#include "lorenz/measure_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lorenz/error.hpp"

namespace lorenz {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    schema_error(e.what());
  }
}

std::size_t read_dim(const json& doc) {
  if (!doc.contains("dim")) schema_error("missing \"dim\"");
  const auto& d = doc["dim"];
  if (!d.is_number_integer() || d.get<long long>() <= 0) schema_error("\"dim\" must be a positive integer");
  return d.get<std::size_t>();
}

Rows read_atoms(const json& doc, std::size_t width) {
  if (!doc.contains("atoms") || !doc["atoms"].is_array()) schema_error("missing \"atoms\" array");
  Rows rows(width);
  Vector buf;
  std::size_t index = 0;
  for (const auto& atom : doc["atoms"]) {
    if (!atom.is_array()) schema_error("atom " + std::to_string(index) + " is not an array");
    if (atom.size() != width) {
      throw Error(ErrorKind::DimensionMismatch, "atom " + std::to_string(index) + " has " +
                                                    std::to_string(atom.size()) + " entries, expected " +
                                                    std::to_string(width));
    }
    buf.clear();
    for (const auto& x : atom) {
      if (!x.is_number()) schema_error("atom " + std::to_string(index) + " has a non-numeric entry");
      buf.push_back(x.get<double>());
    }
    rows.push_back(buf);
    ++index;
  }
  return rows;
}

std::optional<Labels> read_labels(const json& doc) {
  if (!doc.contains("labels") || doc["labels"].is_null()) return std::nullopt;
  const auto& l = doc["labels"];
  if (!l.is_array()) schema_error("\"labels\" must be an array of strings");
  Labels out;
  for (const auto& s : l) {
    if (!s.is_string()) schema_error("\"labels\" must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

json rows_json(const Rows& rows) {
  json out = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto r = rows[i];
    out.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return out;
}

}  // namespace

AnyMeasure parse_measure(std::string_view json_text) {
  const json doc = parse_document(json_text);
  if (!doc.is_object()) schema_error("measure must be a JSON object");
  const std::size_t dim = read_dim(doc);
  bool complex = false;
  if (doc.contains("complex")) {
    if (!doc["complex"].is_boolean()) schema_error("\"complex\" must be a boolean");
    complex = doc["complex"].get<bool>();
  }
  if (complex) {
    if (doc.contains("labels") && !doc["labels"].is_null()) schema_error("complex measures take no labels");
    return ComplexVectorMeasure::validate(dim, read_atoms(doc, 2 * dim));
  }
  return VectorMeasure::validate(read_atoms(doc, dim), read_labels(doc));
}

VectorMeasure parse_real_measure(std::string_view json_text) {
  auto any = parse_measure(json_text);
  if (auto* c = std::get_if<ComplexVectorMeasure>(&any)) return complex_embed(*c);
  return std::get<VectorMeasure>(std::move(any));
}

std::string serialize(const VectorMeasure& m) {
  json doc;
  doc["dim"] = m.dimension();
  doc["atoms"] = rows_json(m.atoms());
  if (m.labels()) doc["labels"] = *m.labels();
  doc["complex"] = false;
  return doc.dump() + "\n";
}

std::string serialize(const ComplexVectorMeasure& m) {
  json doc;
  doc["dim"] = m.dimension();
  doc["atoms"] = rows_json(m.interleaved());
  doc["complex"] = true;
  return doc.dump() + "\n";
}

std::string to_json(const HausdorffResult& r) {
  json doc;
  doc["distance"] = r.distance;
  doc["witness"] = r.witness;
  doc["witness_is_point"] = r.witness_is_point;
  doc["mode"] = r.mode == HausdorffMode::Exact ? "exact" : "sampled";
  return doc.dump(2) + "\n";
}

std::string to_json(const AchievementCertificate& c) {
  json doc;
  doc["lambda"] = c.lambda;
  json intervals = json::array();
  for (const auto& iv : c.intervals) intervals.push_back({iv.lo, iv.hi});
  doc["intervals"] = intervals;
  doc["residual"] = c.residual;
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "cannot read " + path.string());
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace lorenz
