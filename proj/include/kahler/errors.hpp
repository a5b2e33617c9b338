#pragma once

#include <stdexcept>
#include <string>

namespace kahler {

// Base of every error raised by the library. name() is the stable identifier
// surfaced by the CLI ("DomainError", "NonpositiveScale", ...).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)), message_(what) {}

    const std::string& name() const noexcept { return name_; }
    /// what() without the leading "Name: ".
    const std::string& message() const noexcept { return message_; }

private:
    std::string name_;
    std::string message_;
};

#define KAHLER_DEFINE_ERROR(Type)                                              \
    class Type : public Error {                                                \
    public:                                                                    \
        explicit Type(const std::string& what) : Error(#Type, what) {}         \
    }

KAHLER_DEFINE_ERROR(DomainError);
KAHLER_DEFINE_ERROR(InputTooShort);
KAHLER_DEFINE_ERROR(NonzeroConstantTerm);
KAHLER_DEFINE_ERROR(NonpositiveScale);
KAHLER_DEFINE_ERROR(OrderTooSmall);
KAHLER_DEFINE_ERROR(OutOfConvergenceRadius);
KAHLER_DEFINE_ERROR(NamedSpecRequired);
KAHLER_DEFINE_ERROR(ConfigError);
KAHLER_DEFINE_ERROR(ParseError);

#undef KAHLER_DEFINE_ERROR

} // namespace kahler
