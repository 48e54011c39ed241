#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schwinger {

enum class Errc {
  invalid_argument,
  zero_field,
  zero_width,
  unsupported_profile,
  pole,
  domain,
  degenerate_normalization,
  degenerate_frequency,
  normalization_violation,
  gap_closing,
  non_convergence,
  step_budget,
  conservation_defect,
  cross_check,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::zero_field: return "zero_field";
    case Errc::zero_width: return "zero_width";
    case Errc::unsupported_profile: return "unsupported_profile";
    case Errc::pole: return "pole";
    case Errc::domain: return "domain";
    case Errc::degenerate_normalization: return "degenerate_normalization";
    case Errc::degenerate_frequency: return "degenerate_frequency";
    case Errc::normalization_violation: return "normalization_violation";
    case Errc::gap_closing: return "gap_closing";
    case Errc::non_convergence: return "non_convergence";
    case Errc::step_budget: return "step_budget";
    case Errc::conservation_defect: return "conservation_defect";
    case Errc::cross_check: return "cross_check";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status and sweeps can record it per point.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

  /// True for failures of the numerical oracle rather than bad input.
  bool numerical() const noexcept {
    return code_ == Errc::non_convergence || code_ == Errc::step_budget ||
           code_ == Errc::conservation_defect;
  }

 private:
  Errc code_;
};

namespace detail {

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) throw Error(code, what);
}

}  // namespace detail
}  // namespace schwinger
