#pragma once

#include <stdexcept>

namespace xnb {

// Malformed or unusable input data (bad CSV cell, missing column, too few classes).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Model file could not be read, parsed or validated.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace xnb
