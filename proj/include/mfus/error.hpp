#pragma once

#include <stdexcept>
#include <string>

namespace mfus {

// Every failure the kernel reports carries a short machine-readable kind
// (NotMonic, Reducible, DivisionByZero, FieldMismatch, ShapeMismatch,
// NonSplit, ParseError, Decomposable, NotGenerator, NotClosed, Degenerate,
// IsomorphismSearchExhausted) plus a human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

} // namespace mfus
