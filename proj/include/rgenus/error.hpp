#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rgenus {

/// Malformed graph input: self-loops, duplicate edges, labels out of range.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A parameter outside the documented domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Cycle enumeration produced more cycles than the configured cap.
class CycleCapExceeded : public std::runtime_error {
public:
    CycleCapExceeded(std::uint64_t cap, unsigned max_length)
        : std::runtime_error("cycle enumeration exceeded cap of " + std::to_string(cap) +
                             " cycles (max length " + std::to_string(max_length) + ")"),
          cap_(cap) {}

    std::uint64_t cap() const noexcept { return cap_; }

private:
    std::uint64_t cap_;
};

/// Genus search ran out of budget. Carries the best genus upper
/// bound established so far, so the caller never sees a silent wrong answer.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(std::uint64_t budget, std::int64_t best_upper)
        : std::runtime_error("genus search exceeded budget of " + std::to_string(budget) +
                             " search nodes; best genus upper bound " +
                             std::to_string(best_upper)),
          budget_(budget), best_upper_(best_upper) {}

    std::uint64_t budget() const noexcept { return budget_; }
    std::int64_t best_upper() const noexcept { return best_upper_; }

private:
    std::uint64_t budget_;
    std::int64_t best_upper_;
};

/// Adaptive quadrature could not reach the requested tolerance.
class ToleranceNotReached : public std::runtime_error {
public:
    ToleranceNotReached(double requested, double achieved)
        : std::runtime_error("quadrature tolerance " + std::to_string(requested) +
                             " not reached; error estimate " + std::to_string(achieved)),
          achieved_(achieved) {}

    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

}  // namespace rgenus
