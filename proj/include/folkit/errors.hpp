#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace folkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact zero could not be certified at the available truncation order.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what = "precision exhausted")
        : Error(what) {}
};

// A field extension would push the tower past the configured degree bound.
struct ExtensionDegreeExceeded : Error {
    explicit ExtensionDegreeExceeded(const std::string& what = "extension degree bound exceeded")
        : Error(what) {}
};

struct DepthExceeded : Error {
    explicit DepthExceeded(const std::string& what = "blow-up depth bound exceeded")
        : Error(what) {}
};

struct SyntaxError : Error {
    int line, column;
    SyntaxError(const std::string& what, int line_, int col_)
        : Error(what + " at " + std::to_string(line_) + ":" + std::to_string(col_)),
          line(line_), column(col_) {}
};

struct UnknownVariable : SyntaxError {
    UnknownVariable(const std::string& name, int line_, int col_)
        : SyntaxError("unknown variable '" + name + "'", line_, col_) {}
};

struct ValidationError : Error {
    std::vector<std::string> violations;
    explicit ValidationError(std::vector<std::string> v)
        : Error(join(v)), violations(std::move(v)) {}
private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "case file validation failed:";
        for (const auto& x : v) s += "\n  - " + x;
        return s;
    }
};

struct IoError : Error {
    using Error::Error;
};

struct AllZero : Error {
    explicit AllZero(const std::string& what = "all components are zero") : Error(what) {}
};

struct DimensionUnsupported : Error {
    explicit DimensionUnsupported(const std::string& what = "operation requires n = 2") : Error(what) {}
};

struct NotSquarefree : Error {
    explicit NotSquarefree(const std::string& what = "polynomial is not squarefree") : Error(what) {}
};

struct NotInvariant : Error {
    explicit NotInvariant(const std::string& what = "curve is not invariant") : Error(what) {}
};

struct InvalidBranch : Error {
    using Error::Error;
};

struct DicriticalInfinitelyMany : Error {
    explicit DicriticalInfinitelyMany(const std::string& what =
        "dicritical germ has infinitely many separatrices; enumeration refused")
        : Error(what) {}
};

struct NonGenericDirection : Error {
    explicit NonGenericDirection(const std::string& what = "direction is not generic") : Error(what) {}
};

struct NotSecondType : Error {
    explicit NotSecondType(const std::string& what = "foliation is not of second type") : Error(what) {}
};

struct EmptyBranchList : Error {
    explicit EmptyBranchList(const std::string& what = "no branches supplied") : Error(what) {}
};

struct NotAnAutomorphism : Error {
    explicit NotAnAutomorphism(const std::string& what = "map is not an automorphism fixing 0")
        : Error(what) {}
};

} // namespace folkit
