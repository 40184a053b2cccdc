#pragma once

#include <stdexcept>
#include <string>

namespace duet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : Error {
    using Error::Error;
};
struct IndexError : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct NumericError : Error {
    using Error::Error;
};
struct ContractError : Error {
    using Error::Error;
};
struct RoutingError : Error {
    using Error::Error;
};
struct BindingError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

} // namespace duet
