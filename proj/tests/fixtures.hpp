// Copyright 2026 The brkmin Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

// The 4-team mirrored schedule used as a worked example throughout the tests,
// with its home/away grid. Team ids are 1-based here, as printed.

#include <cstdint>
#include <vector>

#include "brkmin/brkmin.hpp"

namespace fixture {

inline brkmin::Timetable four_team_mdrrt() {
  const int table[4][6] = {
      {2, 3, 4, 2, 3, 4},
      {1, 4, 3, 1, 4, 3},
      {4, 1, 2, 4, 1, 2},
      {3, 2, 1, 3, 2, 1},
  };
  std::vector<int> opp;
  for (const auto& row : table)
    for (int o : row) opp.push_back(o - 1);
  return brkmin::Timetable(brkmin::TournamentKind::MDRRT, 4, 6, opp);
}

inline brkmin::HAAssignment four_team_assignment() {
  const std::uint8_t table[4][6] = {
      {1, 0, 1, 0, 1, 0},
      {0, 0, 1, 1, 1, 0},
      {1, 1, 0, 0, 0, 1},
      {0, 1, 0, 1, 0, 1},
  };
  std::vector<std::uint8_t> bits;
  for (const auto& row : table) bits.insert(bits.end(), row, row + 6);
  return brkmin::HAAssignment(four_team_mdrrt(), bits);
}

}  // namespace fixture
