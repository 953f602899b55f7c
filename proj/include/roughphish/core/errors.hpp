#ifndef ROUGHPHISH_CORE_ERRORS_HPP
#define ROUGHPHISH_CORE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rough {

/// Base class for every error raised by the rough-set engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An attribute name that is not part of the table (or not allowed in this position).
class UnknownAttributeError : public Error {
public:
    explicit UnknownAttributeError(std::string name)
        : Error("unknown attribute '" + name + "'"), name_(std::move(name)) {}
    UnknownAttributeError(std::string name, const std::string& what)
        : Error(what), name_(std::move(name)) {}

    const std::string& attribute() const noexcept { return name_; }

private:
    std::string name_;
};

/// An object id outside the universe.
class BoundsError : public Error {
public:
    BoundsError(std::size_t id, std::size_t universe_size)
        : Error("object id " + std::to_string(id) + " is outside the universe of " +
                std::to_string(universe_size) + " objects"),
          id_(id) {}

    std::size_t id() const noexcept { return id_; }

private:
    std::size_t id_;
};

/// Exhaustive searches refuse tables with too many condition attributes.
class CapacityError : public Error {
public:
    CapacityError(std::size_t attributes, std::size_t cap)
        : Error("exhaustive search supports at most " + std::to_string(cap) +
                " condition attributes, table has " + std::to_string(attributes)),
          cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

/// Dependency degree of an empty universe.
class UndefinedDivisionError : public Error {
public:
    UndefinedDivisionError() : Error("dependency degree is undefined for an empty table") {}
};

/// Malformed decision table input, with 1-based row/column when known (0 = n/a).
class TableFormatError : public Error {
public:
    TableFormatError(const std::string& message, std::size_t row = 0, std::size_t column = 0)
        : Error(format(message, row, column)), row_(row), column_(column) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, std::size_t row, std::size_t column) {
        std::string out;
        if (row != 0) {
            out += "row " + std::to_string(row);
            if (column != 0)
                out += ", column " + std::to_string(column);
            out += ": ";
        }
        return out + message;
    }

    std::size_t row_;
    std::size_t column_;
};

} // namespace rough

#endif
