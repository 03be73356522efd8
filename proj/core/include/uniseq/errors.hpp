#pragma once

#include <stdexcept>
#include <string>

namespace uniseq {

// Base of every error raised by the library. The CLI maps all of these to
// exit status 2, except where a command documents otherwise.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define UNISEQ_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                     \
    public:                                                         \
        using Error::Error;                                         \
    }

UNISEQ_DEFINE_ERROR(InvalidArgument);
UNISEQ_DEFINE_ERROR(InvalidWord);
UNISEQ_DEFINE_ERROR(InvalidFamily);
UNISEQ_DEFINE_ERROR(IndexOutOfRange);
UNISEQ_DEFINE_ERROR(MissingLetterImage);
UNISEQ_DEFINE_ERROR(EmptyInput);
UNISEQ_DEFINE_ERROR(SplitViolation);
UNISEQ_DEFINE_ERROR(AmbiguousCollapse);
UNISEQ_DEFINE_ERROR(HypothesisNotVerified);
UNISEQ_DEFINE_ERROR(CapExceeded);
UNISEQ_DEFINE_ERROR(InvalidMap);
UNISEQ_DEFINE_ERROR(BlocksInvalid);
UNISEQ_DEFINE_ERROR(BlockNotClosed);
UNISEQ_DEFINE_ERROR(UnsupportedAlphabet);

#undef UNISEQ_DEFINE_ERROR

// Malformed input file; the message carries line/column or the offending
// field path.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace uniseq
