#ifndef MODULI_ERRORS_HPP
#define MODULI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace moduli {

// Domain errors are mathematical misuse (mismatched conductors, singular
// matrices, malformed input).  ResourceLimit is different in kind: the
// computation was abandoned, the question is unanswered.  Callers that turn
// results into exit codes must keep the two apart.

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ConductorMismatch : Error {
    explicit ConductorMismatch(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what) : Error(what) {}
};

struct InvalidLift : Error {
    explicit InvalidLift(const std::string& what) : Error(what) {}
};

struct ResourceLimit : Error {
    explicit ResourceLimit(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int col_, const std::string& what)
        : Error("line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ": " + what),
          line(line_), column(col_) {}
};

} // namespace moduli

#endif
