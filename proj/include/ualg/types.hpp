#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ualg {

// Carrier elements are indices into {0, ..., size-1}.
using element_type = std::size_t;

inline constexpr element_type UNDEFINED = static_cast<element_type>(-1);

// Validation, shape and precondition failures. Negative domain answers
// (no hom exists, subset not closed, ...) are ordinary return values.
class UalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction required a surjective hom; `missing` lists the codomain
// elements without a preimage, ascending.
class NotSurjectiveError : public UalgError {
 public:
  NotSurjectiveError(const std::string& msg, std::vector<element_type> missing)
      : UalgError(msg), missing_(std::move(missing)) {}

  const std::vector<element_type>& missing() const noexcept {
    return missing_;
  }

 private:
  std::vector<element_type> missing_;
};

// Hom factoring requires the kernel of h to be contained in the kernel of g;
// (x, y) is the first pair with h(x) = h(y) but g(x) != g(y).
class KernelContainmentError : public UalgError {
 public:
  KernelContainmentError(const std::string& msg, element_type x,
                         element_type y)
      : UalgError(msg), x_(x), y_(y) {}

  element_type x() const noexcept { return x_; }
  element_type y() const noexcept { return y_; }

 private:
  element_type x_;
  element_type y_;
};

// When enabled, homs produced by constructions that are correct by theorem
// (compositions, projections, canonical maps, ...) are re-verified
// exhaustively; a failure throws std::logic_error. Controlled by the
// UALG_DEBUG_RECHECK environment variable, overridable programmatically.
bool debug_recheck_enabled();
void set_debug_recheck(bool on);
void clear_debug_recheck_override();

}  // namespace ualg
