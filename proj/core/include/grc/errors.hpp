#pragma once

#include <stdexcept>
#include <string>

namespace grc {

/// Raised when an internal consistency check fails. The CLI maps this to
/// exit code 4; nothing recoverable can be done with the offending state.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

enum class FormatErrorKind {
    BadMagic,
    Truncated,
    Invariant,
};

/// Raised by the serializers on malformed input files (CLI exit code 2).
class FormatError : public std::runtime_error {
public:
    FormatError(FormatErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    FormatErrorKind kind() const { return kind_; }

private:
    FormatErrorKind kind_;
};

namespace detail {
[[noreturn]] void check_failed(const char* expr, const char* file, int line,
                               const std::string& msg);
}

}  // namespace grc

#define GRC_CHECK(expr, msg)                                              \
    do {                                                                  \
        if (!(expr)) ::grc::detail::check_failed(#expr, __FILE__, __LINE__, (msg)); \
    } while (0)
