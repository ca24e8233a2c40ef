#ifndef KAUCTION_ERRORS_HPP_
#define KAUCTION_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace kauction {

// Base of every error the library throws.
class AuctionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid caller-supplied parameters (sizes, counts, out-of-range values).
class ParameterError : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

// Prime / generator search exhausted its attempt budget.
class GenerationFailure : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

// Arithmetic outside its domain, e.g. inverting zero.
class DomainError : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

// The knapsack residual did not reach zero. In this protocol that means a
// tie slipped through or a share was corrupted.
class UnsolvableKnapsack : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

// A flag vector with no flag set.
class NoBids : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

// A message body or transcript record that does not decode.
class MalformedMessage : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

// A run configuration or adversary script that does not validate.
class ConfigError : public AuctionError {
 public:
  using AuctionError::AuctionError;
};

}  // namespace kauction

#endif  // KAUCTION_ERRORS_HPP_
