#pragma once

#include <stdexcept>
#include <string>

namespace pmlv {

// A request exceeded a table or enumeration guard. The caller may retry with a
// larger capacity.
class CapacityError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// Precondition violated by the caller (bad order, wrong mode, divergent input).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requested numeric precision or truncation outside the supported window.
class RangeError : public std::range_error {
public:
    using std::range_error::range_error;
};

// Arithmetic produced something that cannot happen if the implementation is
// right: a non-rational cyclotomic residue, a surviving Euler gamma, ...
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace pmlv
