// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MF_ERRORS_HPP
#define MF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mf {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// matroid construction / parsing
class EmptyBasesError : public Error {
 public:
  using Error::Error;
};
class WrongCardinalityError : public Error {
 public:
  using Error::Error;
};
class ExchangeViolationError : public Error {
 public:
  ExchangeViolationError(const std::string& what, unsigned b1, unsigned b2,
                         int e)
      : Error(what), basis1(b1), basis2(b2), element(e) {}
  unsigned basis1;  // bit sets of the witnessing pair
  unsigned basis2;
  int element;  // e in B1 \ B2 with no exchange partner
};
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line_no)
      : Error(what), line(line_no) {}
  int line;
};
class UnknownNameError : public Error {
 public:
  using Error::Error;
};
class BadParamsError : public Error {
 public:
  using Error::Error;
};

// polynomial ring
class ZeroPolynomialError : public Error {
 public:
  using Error::Error;
};
class VarAbsentError : public Error {
 public:
  using Error::Error;
};
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};
class ProductTooLargeError : public Error {
 public:
  using Error::Error;
};

// finite fields
class NotPrimeError : public Error {
 public:
  using Error::Error;
};
class TooLargeError : public Error {
 public:
  using Error::Error;
};
class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};
class EmbeddingUnavailableError : public Error {
 public:
  using Error::Error;
};

// system generation / reduction
class RankZeroError : public Error {
 public:
  using Error::Error;
};
class BoundViolatedError : public Error {
 public:
  using Error::Error;
};
class AllZerosSolutionError : public Error {
 public:
  using Error::Error;
};
class InconsistentInputError : public Error {
 public:
  using Error::Error;
};

// bounds
class NTooSmallError : public Error {
 public:
  using Error::Error;
};

// solver
class SearchSpaceTooLargeError : public Error {
 public:
  using Error::Error;
};
class NoEliminableVariableError : public Error {
 public:
  using Error::Error;
};
class CapExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace mf

#endif  // MF_ERRORS_HPP
