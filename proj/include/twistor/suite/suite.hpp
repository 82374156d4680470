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

#ifndef TWISTOR_SUITE_SUITE_HPP
#define TWISTOR_SUITE_SUITE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace twistor {

/// Randomized property suites. Case k draws from its own generator seeded by
/// (seed, k), so results do not depend on the number of jobs.
struct SuiteOutcome {
    std::string name;
    std::size_t cases = 0;
    /// (case index, message), ascending by index.
    std::vector<std::pair<std::size_t, std::string>> failures;
    bool passed() const { return failures.empty(); }
};

/// abelian, rees, birkhoff, degen, ext, moduli.
std::vector<std::string> suite_names();
std::size_t default_cases(const std::string& name);
/// Throws Error on an unknown name. ext and moduli are exhaustive and ignore
/// cases and seed.
SuiteOutcome run_suite(const std::string& name, std::size_t cases, std::uint64_t seed, unsigned jobs = 1);

}  // namespace twistor

#endif
