#ifndef NECOC_ERRORS_HPP
#define NECOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace necoc {

// Thrown when a checked construction is asked for a composite base.
class composite_base_error : public std::invalid_argument {
public:
    explicit composite_base_error(int base)
        : std::invalid_argument("base " + std::to_string(base) +
                                " is composite; the recursive construction requires a prime") {}
};

// Thrown when a construction would exceed the configured dimension ceiling.
class capacity_error : public std::length_error {
public:
    capacity_error(long long requested, long long limit)
        : std::length_error("requested dimension " + std::to_string(requested) +
                            " exceeds the capacity ceiling " + std::to_string(limit)) {}
};

// Thrown when an exhaustive enumeration would exceed its candidate budget.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed matrix/CSV/sparse input; carries a line number when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& source, long line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what) {}
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace necoc

#endif
