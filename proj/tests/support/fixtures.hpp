#pragma once

#include <string>

#include "bss/dataset_io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(BSS_DATA_DIR) + "/" + name; }

inline bss::BipolarSoftSet load(const std::string& name) { return bss::load_dataset(path(name)); }

inline const std::vector<std::string> kChoice{"e1", "e3", "e4", "e5", "e7", "e8"};

}  // namespace fixtures
