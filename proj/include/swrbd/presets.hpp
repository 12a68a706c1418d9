#pragma once

#include "swrbd/search.hpp"

namespace swrbd {

struct UnknownPresetError : ValidationError {
  explicit UnknownPresetError(const std::string& what) : ValidationError(what) {}
};

/// Labels of the built-in problem instances.
std::vector<std::string> preset_labels();

/// Builds a built-in instance; the full SearchConfig validation runs at load.
SearchConfig load_preset(const std::string& label);

}  // namespace swrbd
