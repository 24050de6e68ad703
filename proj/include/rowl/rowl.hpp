// Copyright 2026 The rowl Authors
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

// Umbrella header: rules in, ontology out, and back again.

#pragma once

#include "rowl/diagnostics.hpp"  // IWYU pragma: export
#include "rowl/extract.hpp"      // IWYU pragma: export
#include "rowl/lexer.hpp"        // IWYU pragma: export
#include "rowl/ontology.hpp"     // IWYU pragma: export
#include "rowl/parser.hpp"       // IWYU pragma: export
#include "rowl/rule.hpp"         // IWYU pragma: export
#include "rowl/serializer.hpp"   // IWYU pragma: export
#include "rowl/transform.hpp"    // IWYU pragma: export
