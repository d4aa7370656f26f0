#include "rigged/error.hpp"

#include <cstdlib>
#include <string_view>

namespace rigged {

bool debug_checks_enabled() {
  static const bool enabled = [] {
    const char* value = std::getenv("RIGGED_DEBUG");
    return value != nullptr && std::string_view(value) == "1";
  }();
  return enabled;
}

}  // namespace rigged
