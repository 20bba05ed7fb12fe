#pragma once

#include <stdexcept>
#include <string>

namespace boxcert
{
    /// Base of every error the library throws. The kind maps onto CLI exit codes.
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Malformed input text (graph, representation, poset, family or expression files).
    class ParseError : public Error
    {
        public:
            using Error::Error;
    };

    /// A parameter is outside the documented range.
    class InvalidArgument : public Error
    {
        public:
            using Error::Error;
    };

    /// An exact search or generator would exceed a configured size cap.
    class SizeLimitError : public Error
    {
        public:
            using Error::Error;
    };

    /// A randomized construction exhausted its retry budget.
    class NotFoundError : public Error
    {
        public:
            using Error::Error;
    };

    /// A precondition that is checked by certificate verification failed.
    class VerificationError : public Error
    {
        public:
            using Error::Error;
    };
}
