/* Copyright 2026 The asimcheck Authors. All Rights Reserved.

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


// Small models shared by the tests.

#ifndef ASIMCHECK_TESTS_FIXTURES_HPP_
#define ASIMCHECK_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "asimcheck/kripke.hpp"

namespace fixtures {

using asimcheck::KripkeModel;
using asimcheck::RawModel;

inline KripkeModel build(RawModel raw, asimcheck::Closure mode = asimcheck::Closure::kReflexiveTransitive) {
  auto v = asimcheck::close_and_validate(std::move(raw), mode);
  return *v.model;
}

// a R b, p true at b only.
inline KripkeModel chain2() { return build({{"a", "b"}, {{"a", "b"}}, {{"p", {"b"}}}, std::nullopt}); }

// One reflexive world c, p nowhere.
inline KripkeModel singleton_c() { return build({{"c"}, {}, {{"p", {}}}, std::nullopt}); }

// a and b see each other.
inline KripkeModel cluster2() {
  return build({{"a", "b"}, {{"a", "b"}, {"b", "a"}}, {{"p", {"a", "b"}}}, std::nullopt});
}

}  // namespace fixtures

#endif  // ASIMCHECK_TESTS_FIXTURES_HPP_
