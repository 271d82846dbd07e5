// Copyright 2026 The fimon Authors. All Rights Reserved.
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

#ifndef FIMON_ERROR_HPP_
#define FIMON_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace fimon {

  //! Base class of every exception thrown by fimon.
  class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed word, term, or presentation text.
  class parse_error : public error {
   public:
    using error::error;
  };

  //! Arguments that belong to different groups, contexts or modes.
  class mismatch_error : public error {
   public:
    using error::error;
  };

}  // namespace fimon

#endif  // FIMON_ERROR_HPP_
