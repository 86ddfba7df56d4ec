#pragma once

#include <string>

#include <json.hpp>

#include "rieffel/fourier_element.hpp"
#include "rieffel/structure.hpp"

namespace rieffel {

/// {"n": int, "terms": [{"k": [int x 2n], "re": float, "im": float}]}, terms in
/// lattice order. Throws SchemaError on malformed input and DimensionError when
/// a key has the wrong length.
nlohmann::json element_to_json(const FourierElement& a);
FourierElement element_from_json(const nlohmann::json& j);

/// {"n": int, "theta": [[float]], "g": [[float]], "J": [[float]]}.
/// Invariant violations surface as StructureError.
nlohmann::json structure_to_json(const SymplecticStructure& s);
SymplecticStructure structure_from_json(const nlohmann::json& j);

/// "standard:<n>" or a path to a structure JSON file.
SymplecticStructure load_structure(const std::string& spec);
FourierElement load_element(const std::string& path);
nlohmann::json read_json_file(const std::string& path);

/// %.17g, the shortest fixed width that round-trips every double.
std::string format_double(double x);

}  // namespace rieffel
