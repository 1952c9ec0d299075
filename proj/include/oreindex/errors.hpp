/* Copyright 2026 The oreindex Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef OREINDEX_ERRORS_HPP
#define OREINDEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace oreindex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A modulus that should be prime is not (or is < 2).
class InvalidPrime : public Error {
 public:
  using Error::Error;
};

/// Input outside an operation's domain (non-monic divisor, bad m, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The polynomial vanishes identically modulo p.
class ZeroModP : public Error {
 public:
  using Error::Error;
};

/// phi divides f over the integers, so f is reducible and no polygon exists.
class PhiDividesF : public Error {
 public:
  using Error::Error;
};

}  // namespace oreindex

#endif  // OREINDEX_ERRORS_HPP
