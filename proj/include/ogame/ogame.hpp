// Copyright 2026 The ogame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Umbrella header. The JSON report needs vendor/json.hpp and is left out;
// include ogame/report.hpp for it.

#include "ogame/base.hpp"
#include "ogame/builders.hpp"
#include "ogame/context.hpp"
#include "ogame/gamedsl.hpp"
#include "ogame/intcat.hpp"
#include "ogame/laws.hpp"
#include "ogame/lens.hpp"
#include "ogame/opengame.hpp"
#include "ogame/random.hpp"
