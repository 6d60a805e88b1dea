// errors.hpp - exception types shared by the spider library.
#pragma once

#include <stdexcept>
#include <string>

namespace spider {

/// Malformed caller input: bad node ids, self-loops, unsorted arrays, unknown formats.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Integer overflow or a size that exceeds the representable capacity.
class ArithmeticError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// An indicator is undefined for the given graph or parameters
/// (disconnected graph, too few nodes, invalid growth direction).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A closed-form evaluation failed its own consistency check.
class FormulaError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace spider
