/*
 * Copyright 2026 The g2orbit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "g2orbit/family.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace g2orbit {

std::string to_string(Family f) {
  switch (f) {
    case Family::C: return "C";
    case Family::S: return "S";
    case Family::SL: return "SL";
    case Family::SS: return "SS";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c == '^') continue;
    key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  if (key == "C") return Family::C;
  if (key == "S") return Family::S;
  if (key == "SL") return Family::SL;
  if (key == "SS") return Family::SS;
  throw std::invalid_argument("unknown family '" + std::string(text) + "'");
}

}  // namespace g2orbit
