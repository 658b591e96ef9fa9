#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gapcode {

enum class ErrorKind {
    parameter,          // invalid construction parameters (ell, r, t)
    overflow,           // value does not fit the requested width
    domain,             // index or argument outside its domain
    length_mismatch,    // message length differs from k
    weight_collision,   // encoder wrote the same position twice
    malformed_codeword, // wrong weight or blocklength for the code
    not_a_codeword,     // input lies outside the image of the encoder
    budget_exceeded,    // exhaustive enumeration too large
    parse,              // text input could not be parsed
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace gapcode
