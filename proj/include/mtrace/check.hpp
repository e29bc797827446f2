#pragma once

#include <string>

namespace mtrace {

// One named verification with a short diagnostic.
struct CheckItem {
  std::string id;
  bool ok = false;
  std::string detail;
};

}  // namespace mtrace
