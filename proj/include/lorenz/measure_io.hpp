#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "lorenz/hausdorff.hpp"
#include "lorenz/measure.hpp"
#include "lorenz/zonoid.hpp"

namespace lorenz {

// Measure files:
//   {"dim": n, "atoms": [[x, ...], ...], "labels": ["..."], "complex": false}
// Complex measures set "complex": true and give 2n reals per atom,
// interleaved (re, im). Numbers are written in shortest round-trip form.

using AnyMeasure = std::variant<VectorMeasure, ComplexVectorMeasure>;

/// Throws ParseError on malformed JSON or schema, and the validation errors
/// of the measure types.
AnyMeasure parse_measure(std::string_view json_text);
/// Real measures only; a complex file is embedded into 2n dimensions.
VectorMeasure parse_real_measure(std::string_view json_text);

std::string serialize(const VectorMeasure& m);
std::string serialize(const ComplexVectorMeasure& m);

std::string to_json(const HausdorffResult& r);
std::string to_json(const AchievementCertificate& c);

/// Throws IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

}  // namespace lorenz
