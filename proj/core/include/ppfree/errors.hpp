#pragma once

#include <stdexcept>

namespace ppfree {

/// Base type for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter map that is not a bijection of its alphabet.
class NotPermutationError : public Error {
 public:
  using Error::Error;
};

/// A letter permutation whose square is not the identity.
class NotInvolutiveError : public Error {
 public:
  using Error::Error;
};

/// Two values built over different alphabets were combined.
class AlphabetMismatchError : public Error {
 public:
  using Error::Error;
};

/// Morphism iteration from the seed letter cannot produce a growing prefix.
class NotProlongableError : public Error {
 public:
  using Error::Error;
};

/// Unrecognized builtin name.
class UnknownNameError : public Error {
 public:
  using Error::Error;
};

/// Power exponent outside the supported range (k >= 2).
class BadExponentError : public Error {
 public:
  using Error::Error;
};

/// Precondition on the alphabet or involution shape failed.
class BadSettingError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (words, involutions, morphism tables).
class TextParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace ppfree
