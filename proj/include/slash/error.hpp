#pragma once

#include <stdexcept>
#include <string>

namespace slash {

// Input/precondition violations. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  InputError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline InputError not_a_complex_structure(const std::string& detail) {
  return InputError("NotAComplexStructure", detail);
}
inline InputError degenerate_form(const std::string& detail) {
  return InputError("DegenerateForm", detail);
}
inline InputError not_a_circle_point(const std::string& detail) {
  return InputError("NotACirclePoint", detail);
}
inline InputError shape_error(const std::string& detail) {
  return InputError("ShapeError", detail);
}
inline InputError parse_error(const std::string& detail) {
  return InputError("ParseError", detail);
}
inline InputError invalid_label(const std::string& detail) {
  return InputError("InvalidLabel", detail);
}
inline InputError not_in_any_orbit(const std::string& detail) {
  return InputError("NotInAnyOrbit", detail);
}
inline InputError not_in_orbit(const std::string& detail) {
  return InputError("NotInOrbit", detail);
}
inline InputError unsupported_conjugator(const std::string& detail) {
  return InputError("UnsupportedConjugator", detail);
}
inline InputError tolerance_exceeded(const std::string& detail) {
  return InputError("ToleranceExceeded", detail);
}

}  // namespace slash
