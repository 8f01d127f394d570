#pragma once

#include "rerail/automaton.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace rerail::testing {

inline std::string fixture_path(const std::string& name) { return std::string(RERAIL_FIXTURE_DIR) + "/" + name; }

inline std::string fixture_text(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline Automaton fixture_raf(const std::string& name) { return load_raf(fixture_path(name)); }

} // namespace rerail::testing
