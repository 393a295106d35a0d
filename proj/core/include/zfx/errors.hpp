#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zfx {

// Input or workload exceeds a fixed capacity or a configured budget.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Operation called outside its mathematical domain (not a leaf, not a fort, disconnected input, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Malformed graph6 text. offset is the byte position of the first bad byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset);
    // Same error with a location prefix such as "line 7: ".
    ParseError with_prefix(const std::string& prefix) const;
    std::size_t offset() const noexcept { return offset_; }

private:
    struct Raw {};
    ParseError(Raw, const std::string& full, std::size_t offset);
    std::size_t offset_;
};

// Structurally invalid graph-labelled tree.
class TreeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Elimination trace that cannot be replayed.
class TraceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internally verified postcondition failed. Always a bug in this library.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace zfx
