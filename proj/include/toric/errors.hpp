#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class of every error raised by the library for invalid mathematical
/// input (as opposed to malformed documents, see ParseError).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define TORIC_DOMAIN_ERROR(Name)                                               \
    class Name : public DomainError {                                          \
    public:                                                                    \
        explicit Name(const std::string& message) : DomainError(#Name, message) {} \
    }

TORIC_DOMAIN_ERROR(InvalidArgument);
TORIC_DOMAIN_ERROR(FanAxiomViolation);
TORIC_DOMAIN_ERROR(NonPointedCone);
TORIC_DOMAIN_ERROR(NotPointed);
TORIC_DOMAIN_ERROR(NotFullDimensional);
TORIC_DOMAIN_ERROR(NotLinearOnCone);
TORIC_DOMAIN_ERROR(NotIntegral);
TORIC_DOMAIN_ERROR(DegeneratePolytope);
TORIC_DOMAIN_ERROR(NotFaceClosed);
TORIC_DOMAIN_ERROR(DependentGenerators);
TORIC_DOMAIN_ERROR(NoArrangementVertices);
TORIC_DOMAIN_ERROR(ShellCheckFailed);
TORIC_DOMAIN_ERROR(IncompleteFan);
TORIC_DOMAIN_ERROR(InternalInvariantViolation);

#undef TORIC_DOMAIN_ERROR

/// Malformed input document. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string kind, const std::string& message, int line = 0, int column = 0)
        : std::runtime_error(format(kind, message, line, column)),
          kind_(std::move(kind)), line_(line), column_(column) {}

    const std::string& kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    static std::string format(const std::string& kind, const std::string& message, int line,
                              int column) {
        std::string where;
        if (line > 0)
            where = " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")";
        return kind + where + ": " + message;
    }

    std::string kind_;
    int line_;
    int column_;
};

class SyntaxError : public ParseError {
public:
    SyntaxError(const std::string& message, int line = 0, int column = 0)
        : ParseError("SyntaxError", message, line, column) {}
};

class SchemaError : public ParseError {
public:
    SchemaError(const std::string& message, int line = 0, int column = 0)
        : ParseError("SchemaError", message, line, column) {}
};

class DimensionMismatch : public ParseError {
public:
    DimensionMismatch(const std::string& message, int line = 0, int column = 0)
        : ParseError("DimensionMismatch", message, line, column) {}
};

} // namespace toric
