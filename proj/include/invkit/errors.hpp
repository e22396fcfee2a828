#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace invkit {

// Bad arguments from the caller (parse errors, invalid labels, mismatched
// dimensions). CLI maps these to exit code 2.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematically invalid operation on otherwise well-formed data (inverting
// zero, inverting a singular matrix, Jordan profile of a non-unipotent).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A configured budget was exhausted. Carries how far we got so callers can
// report partial progress or resume. CLI maps these to exit code 3.
class budget_error : public std::runtime_error {
public:
    budget_error(const std::string& stage, std::size_t reached, std::size_t budget)
        : std::runtime_error(stage + ": budget exceeded (reached " + std::to_string(reached) +
                             " of " + std::to_string(budget) + ")"),
          stage_(stage), reached_(reached), budget_(budget) {}

    const std::string& stage() const { return stage_; }
    std::size_t reached() const { return reached_; }
    std::size_t budget() const { return budget_; }

private:
    std::string stage_;
    std::size_t reached_;
    std::size_t budget_;
};

// Broken internal invariant (orbit-stabilizer mismatch, sift failure on a
// generator). Indicates a bug, not bad input. CLI maps these to exit code 4.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace invkit
