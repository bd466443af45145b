// Copyright 2026 The bidi Authors
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

#ifndef BIDI_BIDI_HPP
#define BIDI_BIDI_HPP

#include "bidi/sign.hpp"
#include "bidi/graph.hpp"
#include "bidi/structures.hpp"
#include "bidi/convert.hpp"
#include "bidi/balance.hpp"
#include "bidi/uniform.hpp"
#include "bidi/io.hpp"

#endif  // BIDI_BIDI_HPP
