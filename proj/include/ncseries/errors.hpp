// Copyright 2026 The ncseries Authors
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

#ifndef NCSERIES_ERRORS_HPP
#define NCSERIES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ncs {

// Inverting a series (or q-polynomial) whose constant term vanishes.
class ZeroConstantTerm : public std::domain_error {
 public:
  explicit ZeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

// geometric(B) and plethysm operands require <B, 1> == 0.
class NonzeroConstantTerm : public std::domain_error {
 public:
  explicit NonzeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

// Enrichment series must have <M, 1> == 1.
class BadConstantTerm : public std::domain_error {
 public:
  explicit BadConstantTerm(const std::string& what) : std::domain_error(what) {}
};

// Plethystic inverse requested for an operand with <R, X0> == 0.
class NotInvertible : public std::domain_error {
 public:
  explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

// A fixed-point iteration hit its filtration cap. Always an internal error.
class NoConvergence : public std::logic_error {
 public:
  explicit NoConvergence(const std::string& what) : std::logic_error(what) {}
};

// Involution applied to a pair outside its domain.
class InvalidPair : public std::invalid_argument {
 public:
  explicit InvalidPair(const std::string& what) : std::invalid_argument(what) {}
};

class UnknownName : public std::invalid_argument {
 public:
  explicit UnknownName(const std::string& name)
      : std::invalid_argument("unknown series name: " + name) {}
};

class UnknownIdentity : public std::invalid_argument {
 public:
  explicit UnknownIdentity(const std::string& name)
      : std::invalid_argument("unknown identity: " + name) {}
};

}  // namespace ncs

#endif  // NCSERIES_ERRORS_HPP
