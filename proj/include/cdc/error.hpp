#ifndef CDC_ERROR_HPP
#define CDC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cdc {

/// Error categories used across the library. The CLI maps Precondition and
/// Parse to exit code 2, Verification to exit code 1.
enum class Errc {
    NotAPrimePower,
    FieldMismatch,
    DivisionByZero,
    AmbientMismatch,
    ShapeMismatch,
    DimensionTooLarge,
    InvalidDistance,
    TooLarge,
    CardinalityMismatch,
    ShapeViolation,
    WeightMismatch,
    Precondition,
    NotApplicable,
    ProfileViolation,
    InvalidSubcode,
    NotInvertible,
    NotFound,
    Verification,
    Parse,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
    if (!ok) raise(code, what);
}

}  // namespace cdc

#endif
