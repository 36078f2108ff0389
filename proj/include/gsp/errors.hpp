#pragma once

#include <stdexcept>
#include <string>

namespace gsp {

// Base for everything this library throws on bad input. Callers that only
// care about "reject vs crash" can catch this one type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input text is not wellformed (JSON syntax, missing/mistyped fields).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Input parses but violates a semantic contract (range, duplicate edge,
// disconnected graph, zero total weight, ...).
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// A decision tree is structurally broken or inconsistent with its instance.
struct InvalidTree : ValidationError {
    explicit InvalidTree(const std::string& what) : ValidationError(what) {}
};

// An operation that requires a tree instance was handed a non-tree.
struct NotATree : ValidationError {
    explicit NotATree(const std::string& what) : ValidationError(what) {}
};

struct Disconnected : ValidationError {
    explicit Disconnected(const std::string& what) : ValidationError(what) {}
};

// Vertex id out of range for the instance at hand.
struct UnknownVertex : ValidationError {
    explicit UnknownVertex(const std::string& what) : ValidationError(what) {}
};

// Numeric parameter outside its domain (epsilon <= 0, alpha <= 1, ...).
struct InvalidParams : ValidationError {
    explicit InvalidParams(const std::string& what) : ValidationError(what) {}
};
using InvalidEpsilon = InvalidParams;

// Exact solvers refuse instances beyond their enumeration limits.
struct TooLarge : Error {
    explicit TooLarge(const std::string& what) : Error(what) {}
};

// No vertex cut with two nonempty sides exists (complete graphs, n < 2).
struct NoCut : Error {
    explicit NoCut(const std::string& what) : Error(what) {}
};

struct EmptySeparator : ValidationError {
    explicit EmptySeparator(const std::string& what) : ValidationError(what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

// Always-on internal invariant check. These guard theorem-backed
// postconditions (component bounds, cost identities); a failure is a bug in
// this library, never bad user input, hence logic_error.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(what);
}

}  // namespace gsp
