#pragma once

#include <stdexcept>
#include <string>

namespace jackson {

// Every kernel error carries a stable name; the CLI echoes it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define JACKSON_DEFINE_ERROR(NAME)                                            \
    struct NAME : Error {                                                     \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}        \
    };

JACKSON_DEFINE_ERROR(MismatchedOrder)
JACKSON_DEFINE_ERROR(DivisionByZero)
JACKSON_DEFINE_ERROR(NotPrimitive)
JACKSON_DEFINE_ERROR(IndexOutOfRange)
JACKSON_DEFINE_ERROR(NonTerminating)
JACKSON_DEFINE_ERROR(InvalidModule)
JACKSON_DEFINE_ERROR(UnrecognizedFamily)
JACKSON_DEFINE_ERROR(FieldTooLarge)
JACKSON_DEFINE_ERROR(InconsistentPair)
JACKSON_DEFINE_ERROR(WrongRegime)
JACKSON_DEFINE_ERROR(LengthMismatch)
JACKSON_DEFINE_ERROR(BadPrime)
JACKSON_DEFINE_ERROR(NotReducible)
JACKSON_DEFINE_ERROR(MalformedPresentation)
JACKSON_DEFINE_ERROR(ParseError)

#undef JACKSON_DEFINE_ERROR

}  // namespace jackson
