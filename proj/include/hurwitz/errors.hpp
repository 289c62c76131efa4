#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured search-space cap.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// 2g-2+|mu|+l(mu) < 0: no covers exist.
class NegativeRamification : public Error {
public:
  using Error::Error;
};

// Outside the stable range 2g-2+n > 0.
class UnstableRange : public Error {
public:
  using Error::Error;
};

class MissingHodgeEntry : public Error {
public:
  using Error::Error;
};

class RankDeficient : public Error {
public:
  using Error::Error;
};

class PrecisionLoss : public Error {
public:
  using Error::Error;
};

class NotTransitive : public Error {
public:
  using Error::Error;
};

class PerimeterMismatch : public Error {
public:
  using Error::Error;
};

class UnstableResult : public Error {
public:
  using Error::Error;
};

class InsufficientSamples : public Error {
public:
  using Error::Error;
};

}  // namespace hurwitz
