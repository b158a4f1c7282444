#pragma once

#include <stdexcept>
#include <string>

namespace bhx {

/// Malformed input: bad vertex ids, self-loops, out-of-range parameters.
class InputError : public std::invalid_argument
{
public:
    explicit InputError(const std::string & what) : std::invalid_argument(what) {}
};

/// A computation was refused because it exceeds a size or time budget.
/// Callers get a reason and, where one exists, a pointer to the alternative.
class Refusal : public std::runtime_error
{
public:
    explicit Refusal(const std::string & what) : std::runtime_error(what) {}
};

/// A structural check that must hold failed; signals a bug, not bad data.
class VerificationFailure : public std::logic_error
{
public:
    explicit VerificationFailure(const std::string & what) : std::logic_error(what) {}
};

} // namespace bhx
