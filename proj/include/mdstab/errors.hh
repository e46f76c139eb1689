#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdstab
{
    // Base of every error thrown by the library.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class InvalidParameter : public Error
    {
    public:
        using Error::Error;
    };

    class Unsupported : public Error
    {
    public:
        using Error::Error;
    };

    // Input was readable but does not belong to the requested branch
    // (e.g. asking for the odd-cycle index of a 4-chromatic graph).
    class WrongBranch : public Error
    {
    public:
        using Error::Error;
    };

    // The stability threshold only exists for graphs of chromatic number at least 3.
    class UndefinedThreshold : public Error
    {
    public:
        using Error::Error;
    };

    // An enumeration would exceed its fixed budget.
    class ResourceError : public Error
    {
    public:
        using Error::Error;
    };

    class ParseError : public Error
    {
    public:
        ParseError(const std::string & what, std::size_t offset) :
            Error(what + " (at byte " + std::to_string(offset) + ")"),
            _offset(offset)
        {
        }

        [[nodiscard]] auto offset() const -> std::size_t { return _offset; }

    private:
        std::size_t _offset;
    };
}
