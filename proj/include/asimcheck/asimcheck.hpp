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

#ifndef ASIMCHECK_ASIMCHECK_HPP_
#define ASIMCHECK_ASIMCHECK_HPP_

#include "asimcheck/distinguish.hpp"
#include "asimcheck/enumerate.hpp"
#include "asimcheck/formula.hpp"
#include "asimcheck/generate.hpp"
#include "asimcheck/io.hpp"
#include "asimcheck/kripke.hpp"
#include "asimcheck/relations.hpp"
#include "asimcheck/semantics.hpp"
#include "asimcheck/suite.hpp"
#include "asimcheck/unravel.hpp"

#endif  // ASIMCHECK_ASIMCHECK_HPP_
