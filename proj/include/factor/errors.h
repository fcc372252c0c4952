/*
 * Copyright 2026 The FACTOR Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FACTOR_ERRORS_H_
#define FACTOR_ERRORS_H_

#include <stdexcept>
#include <string>

namespace factor {

// Base class of every error caused by bad input data or arguments. The CLI
// maps these to exit status 1; anything else is an internal error.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define FACTOR_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(what) {}        \
    const char* kind() const noexcept override { return #Name; }   \
  }

FACTOR_DEFINE_ERROR(DimensionMismatch);
FACTOR_DEFINE_ERROR(DegenerateVector);
FACTOR_DEFINE_ERROR(NonFiniteValue);
FACTOR_DEFINE_ERROR(FormatError);
FACTOR_DEFINE_ERROR(ManifestError);
FACTOR_DEFINE_ERROR(DuplicateRecord);
FACTOR_DEFINE_ERROR(MissingRecord);
FACTOR_DEFINE_ERROR(EmptyReferenceSet);
FACTOR_DEFINE_ERROR(UnknownIdentity);
FACTOR_DEFINE_ERROR(InsufficientVideos);
FACTOR_DEFINE_ERROR(EmptySequence);
FACTOR_DEFINE_ERROR(LengthMismatch);
FACTOR_DEFINE_ERROR(DegenerateLabels);
FACTOR_DEFINE_ERROR(InvalidArgument);
FACTOR_DEFINE_ERROR(IoError);

#undef FACTOR_DEFINE_ERROR

}  // namespace factor

#endif  // FACTOR_ERRORS_H_
