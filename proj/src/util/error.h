// util/error.h

// Copyright 2026  TinyASR Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABILITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef TINYASR_UTIL_ERROR_H_
#define TINYASR_UTIL_ERROR_H_

#include <sstream>
#include <stdexcept>
#include <string>

namespace tinyasr {

// Bad options, mismatched components, invalid parameter combinations.
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (files, corpora, targets).
// The CLI maps this to exit code 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace internal {

class ErrorMessage {
 public:
  template <typename T>
  ErrorMessage &operator<<(const T &value) {
    stream_ << value;
    return *this;
  }
  std::string str() const { return stream_.str(); }

 private:
  std::ostringstream stream_;
};

}  // namespace internal
}  // namespace tinyasr

// Internal invariant check; failures indicate a bug, not bad user input.
#define TASR_CHECK(cond)                                                  \
  do {                                                                    \
    if (!(cond)) {                                                        \
      throw std::logic_error(std::string("check failed: " #cond " at ") + \
                             __FILE__ + ":" + std::to_string(__LINE__));  \
    }                                                                     \
  } while (0)

#define TASR_CONFIG_ERROR(msg) \
  throw ::tinyasr::ConfigError((::tinyasr::internal::ErrorMessage() << msg).str())

#define TASR_DATA_ERROR(msg) \
  throw ::tinyasr::DataError((::tinyasr::internal::ErrorMessage() << msg).str())

#endif  // TINYASR_UTIL_ERROR_H_
