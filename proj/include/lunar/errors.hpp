// lunar-lab: exception types shared by every module.
#ifndef LUNAR_ERRORS_HPP_
#define LUNAR_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lunar {

  // Malformed tables, bad parameters, unknown labels, dimension mismatches.
  class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A computation needed the lunar condition and the table does not have it.
  // witness() is the flattened counterexample: (a, b, c, d, x, y) for two
  // class representatives (a, b), (c, d) sharing the point (x, y), or
  // (index, first, second) for a repeated label; empty when unavailable.
  class NotLunar : public std::runtime_error {
   public:
    explicit NotLunar(std::string what, std::vector<std::size_t> witness = {})
        : std::runtime_error(std::move(what)), _witness(std::move(witness)) {}

    [[nodiscard]] std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::vector<std::size_t> _witness;
  };

  // Iterative norm estimation ran out of iterations.
  class NumericError : public std::runtime_error {
   public:
    NumericError(std::string const& what, double last_estimate, double residual)
        : std::runtime_error(what),
          _last_estimate(last_estimate),
          _residual(residual) {}

    [[nodiscard]] double last_estimate() const noexcept {
      return _last_estimate;
    }
    [[nodiscard]] double residual() const noexcept {
      return _residual;
    }

   private:
    double _last_estimate;
    double _residual;
  };

  // Internal consistency failure; unreachable for valid inputs.
  class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace lunar

#endif  // LUNAR_ERRORS_HPP_
