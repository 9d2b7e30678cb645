#pragma once

#include <stdexcept>
#include <string>

namespace braidforge {

// Bad arguments: out-of-range indices, strand mismatches, unsupported
// parameter tuples. Maps to CLI exit code 2.
class ParamError : public std::invalid_argument {
public:
    explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

// A word in the text format failed to parse. Carries the 1-based index of
// the offending token (0 = header).
class ParseError : public ParamError {
public:
    ParseError(const std::string& what, int token_pos)
        : ParamError(what), token(token_pos) {}
    int token;
};

// A rewrite rule was applied at a position where its pattern does not match.
class RewriteError : public std::logic_error {
public:
    explicit RewriteError(const std::string& what) : std::logic_error(what) {}
};

// Input exceeds a hard implementation bound (e.g. representation dimension).
class CapacityError : public ParamError {
public:
    explicit CapacityError(const std::string& what) : ParamError(what) {}
};

// An internal consistency check failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace braidforge
