#pragma once

// Tame frieze patterns generated from quiddity cycles, and verification of
// finite staircase windows.
//
// Row i of the pattern holds c_{i,j} for j = i .. i+m:
//
//   c_{i,i} = 0, c_{i,i+1} = 1, c_{i,i+2} = c_i, ..., c_{i,i+m-1} = 1, c_{i,i+m} = 0
//
// with c_{i,j+2} = (M_{i,j})_{1,1}. The interior entries are
// i+2 <= j <= i+m-2 (n = m-3 of them). Rows are periodic: c_{i+m,j+m} = c_{i,j}.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quiddity/cycle.hpp"

namespace quiddity {

class FriezePattern {
 public:
  FriezePattern(Cycle cycle, std::vector<std::vector<RingElement>> rows)
      : cycle_(std::move(cycle)), rows_(std::move(rows)) {}

  const Cycle& cycle() const { return cycle_; }
  long period() const { return static_cast<long>(cycle_.size()); }
  long height() const { return period() - 3; }
  // rows()[i-1][j-i] = c_{i,j}
  const std::vector<std::vector<RingElement>>& rows() const { return rows_; }

  // c_{i,j} for any i and i <= j <= i+m.
  const RingElement& entry(long i, long j) const {
    const long m = period();
    if (j < i || j > i + m)
      throw error(errc::usage, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is outside the pattern");
    return rows_[cycle_.slot(i)][static_cast<std::size_t>(j - i)];
  }

 private:
  Cycle cycle_;
  std::vector<std::vector<RingElement>> rows_;
};

// Row i computed by the recurrence c_{i,l} = c_{l-2} c_{i,l-1} - c_{i,l-2};
// no quiddity check.
inline std::vector<RingElement> frieze_row(const Cycle& cycle, long i) {
  const long m = static_cast<long>(cycle.size());
  std::vector<RingElement> row{RingElement::zero(cycle.ring()), RingElement::one(cycle.ring())};
  for (long l = i + 2; l <= i + m; ++l) {
    const std::size_t s = row.size();
    row.push_back(cycle.at(l - 2) * row[s - 1] - row[s - 2]);
  }
  return row;
}

inline FriezePattern frieze_from_cycle(const Cycle& cycle) {
  if (cycle.size() < 2 || !is_quiddity(cycle)) throw error(errc::invalid_cycle, to_string(cycle) + " is not a quiddity cycle");
  const long m = static_cast<long>(cycle.size());
  std::vector<std::vector<RingElement>> rows;
  for (long i = 1; i <= m; ++i) {
    rows.push_back(frieze_row(cycle, i));
    // The closing 1 and 0 come out of the recurrence; they are not imposed.
    if (!rows.back()[m - 1].is_one() || !rows.back()[m].is_zero())
      throw invariant_violation("frieze border of " + to_string(cycle) + " does not close");
  }
  return FriezePattern(cycle, std::move(rows));
}

// Interior zeros (i, j), 1 <= i <= m, i+2 <= j <= i+m-2.
inline std::set<std::pair<long, long>> zero_positions(const FriezePattern& f) {
  std::set<std::pair<long, long>> out;
  const long m = f.period();
  for (long i = 1; i <= m; ++i)
    for (long j = i + 2; j <= i + m - 2; ++j)
      if (f.entry(i, j).is_zero()) out.emplace(i, j);
  return out;
}

inline bool is_nonzero(const FriezePattern& f) { return zero_positions(f).empty(); }

// A finite staircase window. Row r is placed from column `start` onwards;
// entries of different rows sharing a column are vertically adjacent, so an
// adjacent 2x2 block is rows (r, r+1) x columns (j, j+1).
struct FriezeWindow {
  struct Row {
    long start = 0;
    std::vector<RingElement> entries;
  };

  RingDescriptor ring{};
  std::vector<Row> rows;

  const RingElement* get(std::size_t r, long col) const {
    if (r >= rows.size()) return nullptr;
    const Row& row = rows[r];
    if (col < row.start || col >= row.start + static_cast<long>(row.entries.size())) return nullptr;
    return &row.entries[static_cast<std::size_t>(col - row.start)];
  }
};

// The first `count` rows of f: row i starts at column i.
inline FriezeWindow window_from_frieze(const FriezePattern& f, long count) {
  FriezeWindow w;
  w.ring = f.cycle().ring();
  for (long i = 1; i <= count; ++i) {
    FriezeWindow::Row row;
    row.start = i;
    for (long j = i; j <= i + f.period(); ++j) row.entries.push_back(f.entry(i, j));
    w.rows.push_back(std::move(row));
  }
  return w;
}

struct VerifyReport {
  struct Failure {
    int size;  // 2 or 3
    std::size_t row;
    long col;
    friend bool operator==(const Failure&, const Failure&) = default;
  };
  bool sl2_ok = true;
  bool tame_ok = true;
  std::vector<Failure> failures;  // top-left corners of offending blocks
};

inline VerifyReport verify(const FriezeWindow& w) {
  VerifyReport report;
  const RingElement one = RingElement::one(w.ring);
  for (std::size_t r = 0; r + 1 < w.rows.size(); ++r) {
    const auto& row = w.rows[r];
    for (long col = row.start; col < row.start + static_cast<long>(row.entries.size()); ++col) {
      const RingElement* x[3][3] = {};
      bool full2 = true;
      bool full3 = true;
      for (int dr = 0; dr < 3; ++dr)
        for (int dc = 0; dc < 3; ++dc) {
          x[dr][dc] = w.get(r + dr, col + dc);
          if (!x[dr][dc]) {
            if (dr < 2 && dc < 2) full2 = false;
            full3 = false;
          }
        }
      if (full2) {
        RingElement d = *x[0][0] * *x[1][1] - *x[0][1] * *x[1][0];
        if (!(d == one)) {
          report.sl2_ok = false;
          report.failures.push_back({2, r, col});
        }
      }
      if (full3) {
        RingElement d = *x[0][0] * (*x[1][1] * *x[2][2] - *x[1][2] * *x[2][1]) -
                        *x[0][1] * (*x[1][0] * *x[2][2] - *x[1][2] * *x[2][0]) +
                        *x[0][2] * (*x[1][0] * *x[2][1] - *x[1][1] * *x[2][0]);
        if (!d.is_zero()) {
          report.tame_ok = false;
          report.failures.push_back({3, r, col});
        }
      }
    }
  }
  return report;
}

// ASCII staircase with right-aligned columns.
inline std::string render_staircase(const FriezeWindow& w) {
  if (w.rows.empty()) return "";
  long first = w.rows.front().start;
  std::size_t width = 1;
  for (const auto& row : w.rows) {
    first = std::min(first, row.start);
    for (const auto& e : row.entries) width = std::max(width, to_string(e).size());
  }
  std::string out;
  for (const auto& row : w.rows) {
    std::string line(static_cast<std::size_t>(row.start - first) * (width + 1), ' ');
    for (const auto& e : row.entries) {
      std::string s = to_string(e);
      line += std::string(width + 1 - s.size(), ' ') + s;
    }
    out += line + "\n";
  }
  return out;
}

inline std::string render_staircase(const FriezePattern& f) { return render_staircase(window_from_frieze(f, f.period())); }

}  // namespace quiddity
