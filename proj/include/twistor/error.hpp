/*
   Copyright 2026 The twistor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TWISTOR_ERROR_HPP
#define TWISTOR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace twistor {

/// Contract violation by the caller: malformed input, failed precondition.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A structural theorem failed on concrete data (image != coimage, degeneration
/// failure, ...). Either the input slipped past validation or there is a bug.
class TheoremViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace twistor

#endif
