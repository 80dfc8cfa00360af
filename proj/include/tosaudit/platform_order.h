// Copyright 2026 The tosaudit Authors.
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

#ifndef TOSAUDIT_PLATFORM_ORDER_H_
#define TOSAUDIT_PLATFORM_ORDER_H_

#include <string_view>

#include "tosaudit/textprep.h"

namespace tosaudit {

// Alphabetical, ignoring ASCII case; exact bytes break ties.
inline bool platform_less(std::string_view a, std::string_view b) {
  std::string fa = fold_case(a);
  std::string fb = fold_case(b);
  if (fa != fb) return fa < fb;
  return a < b;
}

}  // namespace tosaudit

#endif  // TOSAUDIT_PLATFORM_ORDER_H_
