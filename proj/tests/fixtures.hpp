#pragma once

#include <string>

#include "semdiff/history.hpp"

namespace semdiff::testing {

inline std::string fixture(const std::string& name) { return std::string(SEMDIFF_FIXTURES) + "/" + name; }

inline cd::ClassDiagram fixture_cd(const std::string& name) { return load_cd(fixture(name)); }
inline ad::ActivityDiagram fixture_ad(const std::string& name) { return load_ad(fixture(name)); }

}  // namespace semdiff::testing
