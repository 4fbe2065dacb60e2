// Copyright 2026 The mwkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include "mwk/acceptance.hpp"

int main() {
    auto results = mw::run_acceptance(std::cout);
    size_t passed = 0;
    for (const auto& r : results)
        if (r.pass) passed++;
    std::cout << passed << "/" << results.size() << " criteria passed\n";
    return mw::all_passed(results) ? 0 : 1;
}
