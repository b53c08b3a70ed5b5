#include "ualg/types.hpp"

#include <cstdlib>
#include <optional>

namespace ualg {

namespace {

std::optional<bool>& recheck_override() {
  static std::optional<bool> value;
  return value;
}

bool recheck_from_env() {
  const char* v = std::getenv("UALG_DEBUG_RECHECK");
  return v != nullptr && v[0] == '1' && v[1] == '\0';
}

}  // namespace

bool debug_recheck_enabled() {
  if (recheck_override().has_value()) {
    return *recheck_override();
  }
  static const bool from_env = recheck_from_env();
  return from_env;
}

void set_debug_recheck(bool on) { recheck_override() = on; }

void clear_debug_recheck_override() { recheck_override().reset(); }

}  // namespace ualg
