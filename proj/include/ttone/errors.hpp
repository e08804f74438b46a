#ifndef TTONE_ERRORS_HPP
#define TTONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ttone {

// Malformed or out-of-contract input (unknown edge id, bad parse, ...).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but outside what the operation supports
// (e.g. parallel edges fed to the outerplane embedder).
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// A structural hypothesis a constructive colorer relies on does not hold
// for the given graph (caller asserted a class the graph is not in).
class hypothesis_error : public std::runtime_error {
public:
    explicit hypothesis_error(const std::string& what) : std::runtime_error(what) {}
};

// An extension step that carries a success guarantee failed anyway.
// Reaching this is a bug, not a user error.
class defect_error : public std::logic_error {
public:
    explicit defect_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace ttone

#endif
