#include "wiremono/render.hpp"

#include <algorithm>
#include <sstream>

namespace wiremono {

namespace {

void merge_char(char& cell, char ch) {
  if (cell == ' ') {
    cell = ch;
  } else if (cell != ch) {
    cell = '+';
  }
}

}  // namespace

std::string render_diagram(const SetPartition& p) {
  const int n = p.n();
  const auto blocks = p.blocks();

  std::vector<int> lane_of(blocks.size(), -1);
  int lanes = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].size() > 1) lane_of[b] = lanes++;
  }
  const int width = 2 * lanes + 1;
  std::vector<std::string> grid(static_cast<size_t>(n), std::string(static_cast<size_t>(width), ' '));

  auto vline = [&](int col, int r1, int r2) {
    for (int r = r1; r <= r2; ++r) merge_char(grid[static_cast<size_t>(r)][static_cast<size_t>(col)], '|');
  };
  auto hline = [&](int row, int c1, int c2) {
    for (int c = c1; c <= c2; ++c) merge_char(grid[static_cast<size_t>(row)][static_cast<size_t>(c)], '-');
  };

  for (size_t b = 0; b < blocks.size(); ++b) {
    if (lane_of[b] < 0) continue;
    const int col = 2 * lane_of[b] + 1;
    int lo = n, hi = -1;
    for (int q : blocks[b]) {
      const int row = q < n ? q : q - n;
      lo = std::min(lo, row);
      hi = std::max(hi, row);
    }
    vline(col, lo, hi);
    for (int q : blocks[b]) {
      if (q < n) {
        hline(q, 0, col);
      } else {
        hline(q - n, col, width - 1);
      }
      merge_char(grid[static_cast<size_t>(q < n ? q : q - n)][static_cast<size_t>(col)], '+');
    }
  }

  const size_t label_width = std::to_string(n).size();
  std::ostringstream os;
  for (int row = 0; row < n; ++row) {
    std::string label = std::to_string(row + 1);
    os << std::string(label_width - label.size(), ' ') << label << " o" << grid[static_cast<size_t>(row)]
       << "o " << label << "'\n";
  }
  return os.str();
}

std::string render_diagram(const Matching& m) { return render_diagram(SetPartition::of(m)); }

std::string render_element(const TwistedElement& x) {
  std::string out = render_diagram(x.as_partition());
  if (x.twist() != 0) {
    out += "o x" + std::to_string(x.twist()) + "\n";
  }
  return out;
}

}  // namespace wiremono
