#pragma once

#include <stdexcept>
#include <string>

namespace wrep {

/// Base of every error raised by the library.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition.
class invalid_parameter : public error {
   public:
    using error::error;
};

/// A configured size cap was exceeded. Oracles are exponential, so the caps
/// are hard limits rather than hints.
class resource_limit : public error {
   public:
    using error::error;
};

/// A rotation system is not a valid plane embedding.
class invalid_embedding : public error {
   public:
    using error::error;
};

/// A structural claim the colouring algorithm relies on did not hold. The
/// message carries enough state to reproduce the failure.
class invariant_violation : public error {
   public:
    using error::error;
};

/// Malformed input text.
class parse_error : public error {
   public:
    parse_error(const std::string& what, int line)
        : error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

   private:
    int line_;
};

/// Input is well-formed but outside what the library handles (e.g. a tile
/// wrapping a hole).
class unsupported_input : public error {
   public:
    using error::error;
};

}  // namespace wrep
