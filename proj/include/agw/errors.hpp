#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace agw {

// Precondition / input errors.
struct NotAPrimePower : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct TooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct BadShape : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Overflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A requested value lies outside the validity domain of a closed-form
// result (e.g. an r beyond the range a formula covers).
struct DomainViolation : std::domain_error {
    using std::domain_error::domain_error;
};

struct IncompleteHierarchy : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Signals an internal inconsistency (e.g. a generator matrix that should
// be full rank by construction but is not).
struct RankDeficient : std::logic_error {
    using std::logic_error::logic_error;
};

// An exhaustive computation would exceed the configured budget.  `required`
// carries the exact count of units (points, subspaces) that would be needed;
// UINT64_MAX means the count itself overflows 64 bits.
struct BudgetExceeded : std::runtime_error {
    std::uint64_t required;
    std::uint64_t budget;

    BudgetExceeded(std::uint64_t required_, std::uint64_t budget_, const std::string& context = "")
        : std::runtime_error((context.empty() ? std::string() : context + ": ") +
                             "budget exceeded: need " + format_count(required_) +
                             " units, budget is " + std::to_string(budget_)),
          required(required_),
          budget(budget_) {}

  private:
    static std::string format_count(std::uint64_t c) {
        if (c == UINT64_MAX) return "more than 2^64-1";
        return std::to_string(c);
    }
};

}  // namespace agw
