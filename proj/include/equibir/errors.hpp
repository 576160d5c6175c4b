#pragma once

#include <stdexcept>
#include <string>

namespace equibir {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct InvalidGaloisIndex : Error {
    explicit InvalidGaloisIndex(const std::string& what) : Error(what) {}
};

struct GroupTooLarge : Error {
    explicit GroupTooLarge(const std::string& what) : Error(what) {}
};

struct BadGenerator : Error {
    explicit BadGenerator(const std::string& what) : Error(what) {}
};

struct GroupMismatch : Error {
    explicit GroupMismatch(const std::string& what) : Error(what) {}
};

struct NotACharacter : Error {
    explicit NotACharacter(const std::string& what) : Error(what) {}
};

struct GeometryInconsistency : Error {
    explicit GeometryInconsistency(const std::string& what) : Error(what) {}
};

struct BadScenario : Error {
    explicit BadScenario(const std::string& what) : Error(what) {}
};

struct BadChoice : Error {
    explicit BadChoice(const std::string& what) : Error(what) {}
};

struct FixtureError : Error {
    explicit FixtureError(const std::string& what) : Error(what) {}
};

} // namespace equibir
