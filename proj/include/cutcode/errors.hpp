#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "cutcode/linalg.hpp"

namespace cutcode {

/// An enumeration or search would exceed its configured size limit.
class GuardExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Puncturing removed a codeword's whole support; `message` is a nonzero
/// message whose codeword vanishes on the kept coordinates.
class RankDrop : public std::runtime_error {
   public:
    RankDrop(const std::string& what, Vec message, Vec codeword)
        : std::runtime_error(what), message(std::move(message)), codeword(std::move(codeword)) {}
    Vec message;
    Vec codeword;
};

/// Malformed input file; `line` is 1-based.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

}  // namespace cutcode
