#pragma once

#include <stdexcept>
#include <string>

namespace altbase {

/// Base class for all domain errors raised by the library. `code()` is a
/// stable machine-readable identifier; `what()` carries the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Input text (rational, word, base reference, config file) failed to parse.
/// The CLI maps this to exit status 2, everything else Error-derived to 1.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("parse_error", msg) {}
};

#define ALTBASE_DEFINE_ERROR(Name, code_str)                                  \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& msg) : Error(code_str, msg) {}       \
    }

ALTBASE_DEFINE_ERROR(ZeroPolynomialError, "zero_polynomial");
ALTBASE_DEFINE_ERROR(NotSquarefreeError, "not_squarefree");
ALTBASE_DEFINE_ERROR(InvalidIsolatorError, "invalid_isolator");
ALTBASE_DEFINE_ERROR(FieldMismatchError, "field_mismatch");
ALTBASE_DEFINE_ERROR(DivisionByZeroError, "division_by_zero");
ALTBASE_DEFINE_ERROR(NotInvertibleError, "not_invertible");
ALTBASE_DEFINE_ERROR(RootFindingFailedError, "root_finding_failed");
ALTBASE_DEFINE_ERROR(BetaNotGreaterThanOneError, "beta_not_greater_than_one");
ALTBASE_DEFINE_ERROR(RootNotGreaterThanOneError, "root_not_greater_than_one");
ALTBASE_DEFINE_ERROR(MalformedConfigError, "malformed_config");
ALTBASE_DEFINE_ERROR(OutOfRangeError, "out_of_range");
ALTBASE_DEFINE_ERROR(DigitOutOfRangeError, "digit_out_of_range");
ALTBASE_DEFINE_ERROR(DigitNotInAlphabetError, "digit_not_in_alphabet");
ALTBASE_DEFINE_ERROR(ExpansionDidNotCloseError, "expansion_did_not_close");
ALTBASE_DEFINE_ERROR(DegenerateChoiceError, "degenerate_choice");
ALTBASE_DEFINE_ERROR(NotPurelyPeriodicError, "not_purely_periodic");
ALTBASE_DEFINE_ERROR(UndecidedError, "undecided");
ALTBASE_DEFINE_ERROR(PeriodDidNotCloseError, "period_did_not_close");
ALTBASE_DEFINE_ERROR(RewriteStuckError, "rewrite_stuck");

#undef ALTBASE_DEFINE_ERROR

}  // namespace altbase
