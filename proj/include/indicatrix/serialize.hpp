#pragma once

#include "indicatrix/assembler.hpp"

#include <json.hpp>

#include <string>

namespace indicatrix {

using json = nlohmann::ordered_json;

inline constexpr int kArtifactVersion = 1;

struct SpecFile {
  StepSpec spec = StepSpec::constant(Card::finite(1));
  Rat a = Rat(0);
  Rat b = Rat(1);
};

/// Throws SpecError on malformed documents.
SpecFile spec_file_from_json(const json& j);
json spec_to_json(const StepSpec& f);
json spec_file_to_json(const SpecFile& s);
StepSpec spec_from_json(const json& j);

json plf_to_json(const Plf& g);
Plf plf_from_json(const json& j);

json assembly_to_json(const Assembly& s);
Assembly assembly_from_json(const json& j);

json violation_to_json(const Violation& v);
json validation_to_json(const ValidationResult& r);
json section_to_json(const SectionReport& r);

/// "x,y" rows at m equally spaced points (exact, or decimals when digits > 0).
std::string sample_csv(const Plf& g, std::size_t points, int digits);
/// One polyline in a 1000x1000 view box plus the unit frame.
std::string plot_svg(const Plf& g);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace indicatrix
