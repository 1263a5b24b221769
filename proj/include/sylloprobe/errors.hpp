#pragma once

#include <stdexcept>
#include <string>

namespace sylloprobe {

// Base of every error the library raises. The CLI maps subclasses onto exit
// statuses, so each one belongs to exactly one of the three groups below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --- catalog / logic bugs -------------------------------------------------

// Premises are jointly unsatisfiable over the admissible models.
class DegeneratePattern : public Error {
 public:
  using Error::Error;
};

class NoVariantFound : public Error {
 public:
  using Error::Error;
};

class CatalogInvariantViolation : public Error {
 public:
  using Error::Error;
};

// --- bad input data or configuration --------------------------------------

// Text outside the four categorical templates.
class UnparsableStatement : public Error {
 public:
  using Error::Error;
};

class LexiconError : public Error {
 public:
  using Error::Error;
};

class LexiconTooSmall : public LexiconError {
 public:
  using LexiconError::LexiconError;
};

// A JSON-lines row that does not follow the canonical schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class UnknownLabelString : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

class DuplicatePredictionId : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

class EmptyIntersection : public Error {
 public:
  using Error::Error;
};

// --- filesystem -------------------------------------------------------------

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sylloprobe
