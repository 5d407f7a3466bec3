#pragma once

#include <stdexcept>
#include <string>

namespace igusa {

// Every error raised by the library derives from Error so callers can map
// failures to exit codes by type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct NotDivisible : Error {
  NotDivisible() : Error("polynomial division leaves a nonzero remainder") {}
};

struct NonRationalCenter : Error {
  NonRationalCenter(std::string minimal_polynomial, std::string where)
      : Error("non-rational special point (" + where + "): coordinate has minimal polynomial " +
              minimal_polynomial),
        minimal_polynomial(std::move(minimal_polynomial)) {}
  std::string minimal_polynomial;
};

struct BadPrime : Error {
  BadPrime(long p, std::string reason)
      : Error("bad prime " + std::to_string(p) + ": " + reason), prime(p), reason(std::move(reason)) {}
  long prime;
  std::string reason;
};

struct UnitVanishes : Error {
  using Error::Error;
};

struct DivergentLimit : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  BudgetExceeded(double needed, double budget)
      : Error("enumeration needs " + std::to_string(static_cast<long double>(needed)) +
              " evaluations, budget is " + std::to_string(static_cast<long double>(budget))),
        needed(needed), budget(budget) {}
  double needed;
  double budget;
};

}  // namespace igusa
