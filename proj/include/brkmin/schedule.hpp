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

// Round-robin timetables, home/away assignments and break counting.
//
// Teams and slots are 0-based internally. Everything that leaves the library
// (validation messages, JSON, CSV) uses 1-based ids.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "brkmin/report.hpp"
#include "brkmin/rng.hpp"

namespace brkmin {

enum class TournamentKind { RRT, DRRT, MDRRT };

inline std::string to_string(TournamentKind kind) {
  switch (kind) {
    case TournamentKind::RRT: return "RRT";
    case TournamentKind::DRRT: return "DRRT";
    case TournamentKind::MDRRT: return "MDRRT";
  }
  return "?";
}

inline TournamentKind parse_kind(std::string text) {
  std::transform(text.begin(), text.end(), text.begin(), [](unsigned char c) { return std::toupper(c); });
  if (text == "RRT") return TournamentKind::RRT;
  if (text == "DRRT") return TournamentKind::DRRT;
  if (text == "MDRRT") return TournamentKind::MDRRT;
  throw std::invalid_argument("unknown tournament kind: " + text);
}

/// Slots required by a tournament of the given kind.
constexpr std::size_t slots_for(TournamentKind kind, std::size_t num_teams) noexcept {
  return kind == TournamentKind::RRT ? num_teams - 1 : 2 * (num_teams - 1);
}

inline void require_team_count(std::size_t num_teams) {
  if (num_teams < 4 || num_teams % 2 != 0)
    throw std::invalid_argument("team count must be even and at least 4, got " + std::to_string(num_teams));
}

/// Opponent table tau(t, s). Holds whatever it is given; use validate() to
/// check the tournament invariants.
class Timetable {
 public:
  Timetable() = default;

  Timetable(TournamentKind kind, std::size_t num_teams, std::size_t num_slots, std::vector<int> opponents)
      : kind_(kind), num_teams_(num_teams), num_slots_(num_slots), opponents_(std::move(opponents)) {
    if (opponents_.size() != num_teams_ * num_slots_)
      throw std::invalid_argument("opponent table size does not match teams x slots");
  }

  TournamentKind kind() const noexcept { return kind_; }
  std::size_t num_teams() const noexcept { return num_teams_; }
  std::size_t num_slots() const noexcept { return num_slots_; }
  /// Half the team count, written n in the bounds below.
  std::size_t half_teams() const noexcept { return num_teams_ / 2; }

  int opponent(std::size_t team, std::size_t slot) const { return opponents_[team * num_slots_ + slot]; }
  const std::vector<int>& opponents() const noexcept { return opponents_; }

  /// Slot columns reordered so that output slot s is input slot order[s].
  Timetable with_slot_order(const std::vector<std::size_t>& order) const {
    std::vector<int> out(opponents_.size());
    for (std::size_t t = 0; t < num_teams_; ++t)
      for (std::size_t s = 0; s < order.size(); ++s) out[t * num_slots_ + s] = opponent(t, order[s]);
    return Timetable(kind_, num_teams_, num_slots_, std::move(out));
  }

  friend bool operator==(const Timetable&, const Timetable&) = default;

 private:
  TournamentKind kind_ = TournamentKind::RRT;
  std::size_t num_teams_ = 0;
  std::size_t num_slots_ = 0;
  std::vector<int> opponents_;
};

namespace detail {

inline std::string cell_name(std::size_t team, std::size_t slot) {
  return "team " + std::to_string(team + 1) + ", slot " + std::to_string(slot + 1);
}

inline std::string pair_name(std::size_t a, std::size_t b) {
  return "teams " + std::to_string(a + 1) + "-" + std::to_string(b + 1);
}

}  // namespace detail

/// Every invariant appropriate to tt.kind(); all violations are reported.
inline ValidationReport validate(const Timetable& tt) {
  ValidationReport report;
  const std::size_t teams = tt.num_teams();
  const std::size_t slots = tt.num_slots();
  if (teams < 4 || teams % 2 != 0) report.add("team-count", std::to_string(teams) + " teams");
  if (slots != slots_for(tt.kind(), teams))
    report.add("slot-count", std::to_string(slots) + " slots for " + to_string(tt.kind()));
  if (teams == 0) return report;

  bool in_range = true;
  for (std::size_t t = 0; t < teams; ++t) {
    for (std::size_t s = 0; s < slots; ++s) {
      const int o = tt.opponent(t, s);
      if (o < 0 || static_cast<std::size_t>(o) >= teams) {
        report.add("opponent-range", detail::cell_name(t, s));
        in_range = false;
      } else if (static_cast<std::size_t>(o) == t) {
        report.add("self-play", detail::cell_name(t, s));
      }
    }
  }
  if (!in_range) return report;

  for (std::size_t s = 0; s < slots; ++s)
    for (std::size_t t = 0; t < teams; ++t) {
      const auto o = static_cast<std::size_t>(tt.opponent(t, s));
      if (o != t && static_cast<std::size_t>(tt.opponent(o, s)) != t)
        report.add("involution", detail::cell_name(t, s));
    }

  const std::size_t required = tt.kind() == TournamentKind::RRT ? 1 : 2;
  std::vector<std::size_t> meetings(teams * teams, 0);
  for (std::size_t t = 0; t < teams; ++t)
    for (std::size_t s = 0; s < slots; ++s) ++meetings[t * teams + static_cast<std::size_t>(tt.opponent(t, s))];
  for (std::size_t a = 0; a < teams; ++a)
    for (std::size_t b = a + 1; b < teams; ++b)
      if (meetings[a * teams + b] != required || meetings[b * teams + a] != required)
        report.add("pair-count", detail::pair_name(a, b));

  if (tt.kind() == TournamentKind::MDRRT && slots == slots_for(TournamentKind::MDRRT, teams)) {
    const std::size_t half = slots / 2;
    for (std::size_t t = 0; t < teams; ++t)
      for (std::size_t s = 0; s < half; ++s)
        if (tt.opponent(t, s) != tt.opponent(t, s + half)) report.add("mirror", detail::cell_name(t, s));
  }
  return report;
}

/// Circle-method single round robin. Team 2n-1 (0-based) stays fixed; in round
/// r it meets team r, and teams (r+i) and (r-i) mod (2n-1) meet for i = 1..n-1.
inline Timetable kirkman_rrt(std::size_t num_teams) {
  require_team_count(num_teams);
  const std::size_t wheel = num_teams - 1;
  const std::size_t fixed = num_teams - 1;
  std::vector<int> opp(num_teams * wheel);
  auto set = [&](std::size_t a, std::size_t b, std::size_t slot) {
    opp[a * wheel + slot] = static_cast<int>(b);
    opp[b * wheel + slot] = static_cast<int>(a);
  };
  for (std::size_t r = 0; r < wheel; ++r) {
    set(r, fixed, r);
    for (std::size_t i = 1; i < num_teams / 2; ++i) set((r + i) % wheel, (r + wheel - i) % wheel, r);
  }
  return Timetable(TournamentKind::RRT, num_teams, wheel, std::move(opp));
}

inline void require_valid(const Timetable& tt, TournamentKind kind, const char* op) {
  if (tt.kind() != kind) throw std::invalid_argument(std::string(op) + ": expected " + to_string(kind) + " input");
  const auto report = validate(tt);
  if (!report.ok())
    throw std::invalid_argument(std::string(op) + ": invalid timetable (" + report.violations.front().rule + " at " +
                                report.violations.front().location + ")");
}

/// Uniformly random slot permutation drawn by Fisher-Yates from Rng(seed).
inline std::vector<std::size_t> random_slot_order(std::size_t num_slots, std::uint64_t seed) {
  std::vector<std::size_t> order(num_slots);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(order));
  return order;
}

inline Timetable shuffle_slots(const Timetable& tt, std::uint64_t seed) {
  require_valid(tt, TournamentKind::RRT, "shuffle_slots");
  return tt.with_slot_order(random_slot_order(tt.num_slots(), seed));
}

/// Second half repeats the first half's pairings (venues swap via the
/// assignment, not the opponent table).
inline Timetable mirror(const Timetable& tt) {
  require_valid(tt, TournamentKind::RRT, "mirror");
  const std::size_t half = tt.num_slots();
  std::vector<int> opp(tt.num_teams() * half * 2);
  for (std::size_t t = 0; t < tt.num_teams(); ++t)
    for (std::size_t s = 0; s < half; ++s) {
      opp[t * 2 * half + s] = tt.opponent(t, s);
      opp[t * 2 * half + s + half] = tt.opponent(t, s);
    }
  return Timetable(TournamentKind::MDRRT, tt.num_teams(), 2 * half, std::move(opp));
}

inline Timetable random_mdrrt(std::size_t num_teams, std::uint64_t seed) {
  return mirror(shuffle_slots(kirkman_rrt(num_teams), seed));
}

/// Two independently shuffled Kirkman halves; the second half uses seed + 1.
inline Timetable random_drrt(std::size_t num_teams, std::uint64_t seed) {
  const Timetable base = kirkman_rrt(num_teams);
  const Timetable first = shuffle_slots(base, seed);
  const Timetable second = shuffle_slots(base, seed + 1);
  const std::size_t half = base.num_slots();
  std::vector<int> opp(num_teams * half * 2);
  for (std::size_t t = 0; t < num_teams; ++t)
    for (std::size_t s = 0; s < half; ++s) {
      opp[t * 2 * half + s] = first.opponent(t, s);
      opp[t * 2 * half + s + half] = second.opponent(t, s);
    }
  return Timetable(TournamentKind::DRRT, num_teams, 2 * half, std::move(opp));
}

inline Timetable random_timetable(TournamentKind kind, std::size_t num_teams, std::uint64_t seed) {
  switch (kind) {
    case TournamentKind::RRT: return shuffle_slots(kirkman_rrt(num_teams), seed);
    case TournamentKind::DRRT: return random_drrt(num_teams, seed);
    case TournamentKind::MDRRT: return random_mdrrt(num_teams, seed);
  }
  throw std::invalid_argument("unknown tournament kind");
}

/// Slots of the first and second meeting of every unordered pair a < b,
/// indexed a * num_teams + b. Slots are ascending.
inline std::vector<std::vector<std::size_t>> meeting_slots(const Timetable& tt) {
  const std::size_t teams = tt.num_teams();
  std::vector<std::vector<std::size_t>> out(teams * teams);
  for (std::size_t t = 0; t < teams; ++t)
    for (std::size_t s = 0; s < tt.num_slots(); ++s) {
      const auto o = static_cast<std::size_t>(tt.opponent(t, s));
      if (t < o) out[t * teams + o].push_back(s);
    }
  return out;
}

/// Home/away bits a(t, s): 1 when team t hosts its slot-s game.
class HAAssignment {
 public:
  HAAssignment() = default;

  HAAssignment(Timetable tt, std::vector<std::uint8_t> home_bits)
      : timetable_(std::move(tt)), home_(std::move(home_bits)) {
    if (home_.size() != timetable_.num_teams() * timetable_.num_slots())
      throw std::invalid_argument("home bit table size does not match teams x slots");
  }

  const Timetable& timetable() const noexcept { return timetable_; }
  bool home(std::size_t team, std::size_t slot) const { return home_[team * timetable_.num_slots() + slot] != 0; }
  void set_home(std::size_t team, std::size_t slot, bool value) {
    home_[team * timetable_.num_slots() + slot] = value ? 1 : 0;
  }
  const std::vector<std::uint8_t>& bits() const noexcept { return home_; }

  friend bool operator==(const HAAssignment&, const HAAssignment&) = default;

 private:
  Timetable timetable_;
  std::vector<std::uint8_t> home_;
};

/// Complementarity for every cell and, for double round robins, the
/// venue swap between the two meetings of each pair.
inline ValidationReport validate_assignment(const HAAssignment& ha) {
  ValidationReport report;
  const Timetable& tt = ha.timetable();
  for (std::size_t t = 0; t < tt.num_teams(); ++t)
    for (std::size_t s = 0; s < tt.num_slots(); ++s) {
      const auto o = static_cast<std::size_t>(tt.opponent(t, s));
      if (ha.home(t, s) == ha.home(o, s)) report.add("complementarity", detail::cell_name(t, s));
    }
  if (tt.kind() == TournamentKind::RRT) return report;

  const auto meetings = meeting_slots(tt);
  const std::size_t teams = tt.num_teams();
  for (std::size_t a = 0; a < teams; ++a)
    for (std::size_t b = a + 1; b < teams; ++b) {
      const auto& slots = meetings[a * teams + b];
      if (slots.size() != 2) continue;
      const std::size_t first = slots[0];
      const std::size_t second = slots[1];
      if (ha.home(a, first) == ha.home(a, second))
        report.add("venue-swap", detail::pair_name(a, b) + ", slots " + std::to_string(first + 1) + "/" +
                                     std::to_string(second + 1));
      if (ha.home(b, second) != ha.home(a, first))
        report.add("venue-mirror", detail::pair_name(a, b) + ", slots " + std::to_string(first + 1) + "/" +
                                       std::to_string(second + 1));
    }
  return report;
}

/// Breaks of one team: adjacent slots with equal home bits.
inline std::size_t count_team_breaks(const HAAssignment& ha, std::size_t team) {
  std::size_t breaks = 0;
  for (std::size_t s = 0; s + 1 < ha.timetable().num_slots(); ++s)
    if (ha.home(team, s) == ha.home(team, s + 1)) ++breaks;
  return breaks;
}

inline std::size_t count_breaks(const HAAssignment& ha) {
  std::size_t breaks = 0;
  for (std::size_t t = 0; t < ha.timetable().num_teams(); ++t) breaks += count_team_breaks(ha, t);
  return breaks;
}

/// De Werra's break bounds, inclusive: 2n-2 for RRT, 6n-6 for MDRRT, 0 for DRRT.
inline std::size_t lower_bound(TournamentKind kind, std::size_t num_teams) {
  const std::size_t n = num_teams / 2;
  switch (kind) {
    case TournamentKind::RRT: return 2 * n - 2;
    case TournamentKind::MDRRT: return 6 * n - 6;
    case TournamentKind::DRRT: return 0;
  }
  return 0;
}

}  // namespace brkmin
