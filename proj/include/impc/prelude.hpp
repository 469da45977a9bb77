#pragma once

#include <string>
#include <vector>

namespace impc {

struct PreludeFile {
  std::string name;
  std::string text;
};

// The library prelude sources, in include order.
const std::vector<PreludeFile>& prelude_files();

}  // namespace impc
