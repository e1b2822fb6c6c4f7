// PG(2,4), its hyperovals, and the Steiner system S(3,6,22) built from them.

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include <fmt/format.h>

#include "trifree/constructions.hpp"

namespace trifree::constructions {

namespace {

// GF(4) = {0, 1, w, w^2} encoded 0, 1, 2, 3 with w^2 = w + 1; addition is XOR.
constexpr std::array<int, 4> kLog = {-1, 0, 1, 2};
constexpr std::array<int, 3> kExp = {1, 2, 3};

constexpr int gf4_mul(int x, int y) { return x == 0 || y == 0 ? 0 : kExp[(kLog[x] + kLog[y]) % 3]; }

using Triple = std::array<int, 3>;

struct ProjectivePlane {
  std::vector<Triple> points;  // normalised: first non-zero coordinate is 1
  std::vector<std::vector<int>> lines;
  std::vector<std::vector<int>> line_through;  // [p][q] = index of line pq, p != q
};

std::vector<Triple> normalised_triples() {
  std::vector<Triple> out;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z) {
        const Triple t{x, y, z};
        const auto lead = std::find_if(t.begin(), t.end(), [](int c) { return c != 0; });
        if (lead != t.end() && *lead == 1) out.push_back(t);
      }
  return out;
}

ProjectivePlane pg_2_4() {
  ProjectivePlane plane;
  plane.points = normalised_triples();
  const auto duals = normalised_triples();
  const int np = static_cast<int>(plane.points.size());
  for (const auto& l : duals) {
    std::vector<int> line;
    for (int p = 0; p < np; ++p) {
      const auto& x = plane.points[p];
      if ((gf4_mul(x[0], l[0]) ^ gf4_mul(x[1], l[1]) ^ gf4_mul(x[2], l[2])) == 0) line.push_back(p);
    }
    plane.lines.push_back(std::move(line));
  }
  plane.line_through.assign(np, std::vector<int>(np, -1));
  for (int li = 0; li < static_cast<int>(plane.lines.size()); ++li)
    for (int p : plane.lines[li])
      for (int q : plane.lines[li])
        if (p != q) plane.line_through[p][q] = li;
  if (np != 21 || plane.lines.size() != 21 ||
      std::any_of(plane.lines.begin(), plane.lines.end(), [](const auto& l) { return l.size() != 5; }))
    throw std::logic_error("PG(2,4) construction produced the wrong incidence structure");
  return plane;
}

bool on_line(const ProjectivePlane& plane, int line, int p) {
  const auto& l = plane.lines[line];
  return std::find(l.begin(), l.end(), p) != l.end();
}

void extend_arcs(const ProjectivePlane& plane, std::vector<int>& arc, int next, std::vector<Block>& out) {
  if (arc.size() == 6) {
    Block b;
    std::copy(arc.begin(), arc.end(), b.begin());
    out.push_back(b);
    return;
  }
  for (int p = next; p < static_cast<int>(plane.points.size()); ++p) {
    bool ok = true;
    for (std::size_t i = 0; i < arc.size() && ok; ++i)
      for (std::size_t j = i + 1; j < arc.size() && ok; ++j)
        if (on_line(plane, plane.line_through[arc[i]][arc[j]], p)) ok = false;
    if (!ok) continue;
    arc.push_back(p);
    extend_arcs(plane, arc, p + 1, out);
    arc.pop_back();
  }
}

int intersection(const Block& x, const Block& y) {
  int c = 0;
  for (int p : x) c += std::find(y.begin(), y.end(), p) != y.end() ? 1 : 0;
  return c;
}

std::vector<Block> all_hyperovals(const ProjectivePlane& plane) {
  std::vector<Block> out;
  std::vector<int> arc;
  extend_arcs(plane, arc, 0, out);
  if (out.size() != 168) throw std::logic_error(fmt::format("PG(2,4) has 168 hyperovals, found {}", out.size()));
  return out;
}

// Classes of the even-intersection relation; expects 3 classes of 56.
std::vector<std::vector<Block>> hyperoval_classes(const std::vector<Block>& ovals) {
  const int n = static_cast<int>(ovals.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersection(ovals[i], ovals[j]) % 2 == 0) parent[find(i)] = find(j);

  std::vector<std::vector<Block>> classes;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    const int root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[slot[root]].push_back(ovals[i]);
  }
  if (classes.size() != 3 ||
      std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() != 56; }))
    throw std::logic_error("hyperovals of PG(2,4) did not split into 3 classes of 56");
  for (const auto& c : classes)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (intersection(c[i], c[j]) % 2 != 0) throw std::logic_error("even-intersection relation is not transitive");
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

void validate(const SteinerSystem& s) {
  if (s.blocks.size() != 77) throw std::logic_error("S(3,6,22) must have 77 blocks");
  std::vector<int> per_point(s.points, 0);
  for (const auto& b : s.blocks)
    for (int p : b) ++per_point[p];
  if (std::any_of(per_point.begin(), per_point.end(), [](int c) { return c != 21; }))
    throw std::logic_error("S(3,6,22) point not on exactly 21 blocks");
  std::vector<int> cover(s.points * s.points * s.points, 0);
  for (const auto& b : s.blocks)
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) ++cover[(b[i] * s.points + b[j]) * s.points + b[k]];
  for (int x = 0; x < s.points; ++x)
    for (int y = x + 1; y < s.points; ++y)
      for (int z = y + 1; z < s.points; ++z)
        if (cover[(x * s.points + y) * s.points + z] != 1)
          throw std::logic_error(fmt::format("triple {{{},{},{}}} is not covered exactly once", x, y, z));
  for (std::size_t i = 0; i < s.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < s.blocks.size(); ++j)
      if (const int m = intersection(s.blocks[i], s.blocks[j]); m != 0 && m != 2)
        throw std::logic_error("two blocks of S(3,6,22) meet in neither 0 nor 2 points");
}

}  // namespace

std::vector<Block> hyperoval_class() {
  const auto plane = pg_2_4();
  // Lowest class in lexicographic order of its sorted member list.
  return hyperoval_classes(all_hyperovals(plane)).front();
}

SteinerSystem steiner_s3_6_22() {
  const auto plane = pg_2_4();
  SteinerSystem s;
  constexpr int infinity = 21;
  for (const auto& line : plane.lines) {
    Block b;
    std::copy(line.begin(), line.end(), b.begin());
    b[5] = infinity;
    std::sort(b.begin(), b.end());
    s.blocks.push_back(b);
  }
  const auto classes = hyperoval_classes(all_hyperovals(plane));
  for (const auto& oval : classes.front()) s.blocks.push_back(oval);
  std::sort(s.blocks.begin(), s.blocks.end());
  validate(s);
  return s;
}

}  // namespace trifree::constructions
