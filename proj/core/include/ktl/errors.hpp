#pragma once

#include <stdexcept>
#include <string>

namespace ktl {

// Base class for everything this library throws on bad input or on a
// construction whose internal validation fails.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A candidate homomorphism does not map the source relation lattice into the
// target relation lattice.  Carries the index of the offending relation row.
class NotWellDefined : public Error {
  public:
    NotWellDefined(std::size_t relation_index, const std::string& what)
        : Error(what), relation_index(relation_index) {}
    std::size_t relation_index;
};

class ExactDivisionFailed : public Error {
  public:
    explicit ExactDivisionFailed(const std::string& what) : Error(what) {}
};

// A gated ring construction (group ring, ideal-square quotient) did not
// reproduce the claimed additive structure.
class ValidationFailed : public Error {
  public:
    explicit ValidationFailed(const std::string& what) : Error(what) {}
};

class CrossedConditionFailed : public Error {
  public:
    explicit CrossedConditionFailed(const std::string& what) : Error(what) {}
};

// Candidate module operators violate one of the six S(R,tau) relations.
class RelationViolation : public Error {
  public:
    explicit RelationViolation(const std::string& what) : Error(what) {}
};

class WrongPrime : public Error {
  public:
    explicit WrongPrime(const std::string& what) : Error(what) {}
};

class NotIso : public Error {
  public:
    explicit NotIso(const std::string& what) : Error(what) {}
};

class TooLarge : public Error {
  public:
    explicit TooLarge(const std::string& what) : Error(what) {}
};

class NotNilpotent : public Error {
  public:
    explicit NotNilpotent(const std::string& what) : Error(what) {}
};

class NotSplit : public Error {
  public:
    explicit NotSplit(const std::string& what) : Error(what) {}
};

class ConfigError : public Error {
  public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace ktl
