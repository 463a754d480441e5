#pragma once

#include <stdexcept>
#include <string>

namespace pirep {

/// Malformed or unsupported user input (spec files, dimension mismatches).
class input_error : public std::runtime_error {
  public:
    explicit input_error(const std::string &msg) : std::runtime_error(msg) {}
};

/// A computation was refused because it would exceed the configured cell budget.
class budget_error : public std::runtime_error {
  public:
    budget_error(const std::string &msg, unsigned long long cells, unsigned long long budget)
        : std::runtime_error(msg), cells_(cells), budget_(budget) {}
    unsigned long long cells() const { return cells_; }
    unsigned long long budget() const { return budget_; }

  private:
    unsigned long long cells_;
    unsigned long long budget_;
};

/// The semisimple quotient of the generated algebra is not split over the
/// rationals; such inputs are rejected with a diagnostic naming the layer.
class nonsplit_error : public std::runtime_error {
  public:
    nonsplit_error(const std::string &msg, std::size_t layer)
        : std::runtime_error(msg), layer_(layer) {}
    std::size_t layer() const { return layer_; }

  private:
    std::size_t layer_;
};

/// Violation of an internal invariant; indicates a bug, not bad input.
class internal_error : public std::logic_error {
  public:
    explicit internal_error(const std::string &msg) : std::logic_error(msg) {}
};

} // namespace pirep
