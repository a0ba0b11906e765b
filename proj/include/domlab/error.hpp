// Copyright 2026 The domlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DOMLAB_ERROR_HPP_
#define DOMLAB_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace domlab {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A set or sequence violates its representation invariants.
class MalformedSet : public Error {
 public:
  explicit MalformedSet(const std::string& what)
      : Error("malformed set: " + what) {}
};

// Two tail families whose overlap cannot be represented exactly.
class UnsupportedCombination : public Error {
 public:
  explicit UnsupportedCombination(const std::string& what)
      : Error("unsupported combination: " + what) {}
};

// Document does not conform to a file format. `location` is a JSON path.
class FormatError : public Error {
 public:
  FormatError(std::string location, const std::string& what)
      : Error(location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

// Dominance queried against an empty opponent reduction.
class UndefinedRelation : public Error {
 public:
  explicit UndefinedRelation(const std::string& what)
      : Error("undefined dominance relation: " + what) {}
};

// An analytic oracle has no closed form for the requested query shape.
class UnsupportedQuery : public Error {
 public:
  UnsupportedQuery(std::string entry, const std::string& what)
      : Error("unsupported query on '" + entry + "': " + what),
        entry_(std::move(entry)) {}
  const std::string& entry() const { return entry_; }

 private:
  std::string entry_;
};

// A requested removal is not legal for the elimination mode.
class IllegalStep : public Error {
 public:
  explicit IllegalStep(const std::string& what)
      : Error("illegal step: " + what) {}
};

class NotANestedStep : public Error {
 public:
  explicit NotANestedStep(const std::string& what)
      : Error("not a nested step: " + what) {}
};

class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(const std::string& what, unsigned long long count)
      : Error("enumeration too large: " + what), count_(count) {}
  unsigned long long count() const { return count_; }

 private:
  unsigned long long count_;
};

class UnknownEntry : public Error {
 public:
  explicit UnknownEntry(const std::string& id)
      : Error("unknown catalog entry: " + id) {}
};

}  // namespace domlab

#endif  // DOMLAB_ERROR_HPP_
