/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef ORDCORE_GUARD_ERRORS_HH
#define ORDCORE_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace ordcore
{
    /// Raised when an operation's precondition on its arguments does not hold.
    class InvalidArgument : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class ParseError : public std::runtime_error
    {
    private:
        int _line;

    public:
        ParseError(int line, const std::string & message) :
            std::runtime_error("line " + std::to_string(line) + ": " + message),
            _line(line)
        {
        }

        [[nodiscard]] auto line() const noexcept -> int { return _line; }
    };

    /// A witness map does not have the shape a reduction gadget forces on it.
    class GadgetError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
