#pragma once

#include <stdexcept>
#include <string>

namespace orbichi {

// Input fails structural validation (bad multiplication table, bad embedding, ...).
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computation would exceed a configured enumeration budget or order cap.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A spec string or JSON document cannot be parsed.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace orbichi
