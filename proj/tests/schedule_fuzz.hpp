#pragma once

// Random schedule generator used by the unit and acceptance suites. Ops are
// drawn against a shadow occupancy map that applies the same legality rules
// as the engine, so every emitted schedule should run clean; the run then
// cross-checks the engine against the shadow.

#include <random>
#include <vector>

#include "scgame/game.hpp"

namespace scg {

struct FuzzSchedule {
  Schedule ops;
  std::vector<Mode> final_modes;  // shadow, row-major Empty/Idle
};

inline FuzzSchedule random_legal_schedule(int cols, int rows, int op_count,
                                          std::mt19937& rng) {
  FuzzSchedule out;
  std::vector<Mode> occ(static_cast<std::size_t>(cols) * rows, Mode::Empty);
  auto at = [&](int c, int r) -> Mode& { return occ[static_cast<std::size_t>(r) * cols + c]; };
  std::uniform_int_distribution<int> col_pick(0, cols - 1);
  std::uniform_int_distribution<int> row_pick(0, rows - 1);
  std::uniform_int_distribution<int> action(0, 11);

  auto pick_cell = [&](Mode want, int& c, int& r) {
    for (int tries = 0; tries < 30; ++tries) {
      c = col_pick(rng);
      r = row_pick(rng);
      if (at(c, r) == want) return true;
    }
    return false;
  };

  auto push = [&](OpKind kind, int c, int r, int c2 = 0, int r2 = 0,
                  PrepState st = PrepState::Zero) {
    Op op;
    op.kind = kind;
    op.col = c;
    op.row = r;
    op.col2 = c2;
    op.row2 = r2;
    op.state = st;
    out.ops.push_back(op);
  };

  for (int i = 0; i < op_count; ++i) {
    int c = 0, r = 0;
    switch (action(rng)) {
      case 0:
      case 1:
      case 2:
        if (pick_cell(Mode::Empty, c, r)) {
          push(OpKind::Prep, c, r, 0, 0,
               (rng() & 1u) ? PrepState::Zero : PrepState::Plus);
          at(c, r) = Mode::Idle;
        }
        break;
      case 3:
      case 4:
        if (pick_cell(Mode::Idle, c, r)) push(OpKind::H, c, r);
        break;
      case 5:
      case 6: {  // adjacent Idle pair
        if (!pick_cell(Mode::Idle, c, r)) break;
        const int dc[4] = {1, -1, 0, 0}, dr[4] = {0, 0, 1, -1};
        int k = static_cast<int>(rng() % 4u);
        for (int j = 0; j < 4; ++j) {
          int c2 = c + dc[(k + j) % 4], r2 = r + dr[(k + j) % 4];
          if (c2 >= 0 && c2 < cols && r2 >= 0 && r2 < rows &&
              at(c2, r2) == Mode::Idle) {
            push(OpKind::Cx, c, r, c2, r2);
            break;
          }
        }
        break;
      }
      case 7:
        if (pick_cell(Mode::Idle, c, r)) push(OpKind::Se, c, r);
        break;
      case 8:
        if (pick_cell(Mode::Idle, c, r)) {
          push((rng() & 1u) ? OpKind::Mx : OpKind::Mz, c, r);
          at(c, r) = Mode::Empty;
        }
        break;
      default: {  // route along a clear x-then-y path
        if (!pick_cell(Mode::Idle, c, r)) break;
        for (int tries = 0; tries < 10; ++tries) {
          int c2 = col_pick(rng), r2 = row_pick(rng);
          if (c2 == c && r2 == r) continue;
          bool clear = true;
          int cc = c;
          while (clear && cc != c2) {
            cc += c2 > cc ? 1 : -1;
            clear = at(cc, r) == Mode::Empty;
          }
          int rr = r;
          while (clear && rr != r2) {
            rr += r2 > rr ? 1 : -1;
            clear = at(c2, rr) == Mode::Empty;
          }
          if (!clear) continue;
          push(OpKind::Route, c, r, c2, r2);
          at(c, r) = Mode::Empty;
          at(c2, r2) = Mode::Idle;
          break;
        }
        break;
      }
    }
  }
  out.final_modes = occ;
  return out;
}

}  // namespace scg
