#include "cablejones/pd_code.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "cablejones/errors.hpp"
#include "cablejones/rational.hpp"

namespace cj {

namespace {

long over_in(const PDCrossing& x) { return x.sign > 0 ? x.arcs[3] : x.arcs[1]; }
long over_out(const PDCrossing& x) { return x.sign > 0 ? x.arcs[1] : x.arcs[3]; }

struct DisjointSets {
  std::vector<size_t> parent;
  explicit DisjointSets(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  size_t find(size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

PDCode::PDCode(std::vector<PDCrossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  validate();
}

void PDCode::validate() const {
  if (free_loops_ < 0) throw StructureError("negative free loop count");
  if (crossings_.empty()) return;
  if (free_loops_ > 0) throw StructureError("diagram is not connected: free loops beside crossings");
  std::map<long, std::vector<std::pair<size_t, int>>> slots;
  std::map<long, int> ins, outs;
  for (size_t x = 0; x < crossings_.size(); ++x) {
    const auto& c = crossings_[x];
    if (c.sign != 1 && c.sign != -1) throw StructureError("crossing sign must be +1 or -1");
    for (int k = 0; k < 4; ++k) slots[c.arcs[static_cast<size_t>(k)]].push_back({x, k});
    ++ins[c.arcs[0]];
    ++ins[over_in(c)];
    ++outs[c.arcs[2]];
    ++outs[over_out(c)];
  }
  for (const auto& [label, where] : slots) {
    if (where.size() != 2)
      throw StructureError("arc label " + std::to_string(label) + " occurs " +
                           std::to_string(where.size()) + " times");
    if (ins[label] != 1 || outs[label] != 1)
      throw StructureError("arc label " + std::to_string(label) + " has inconsistent orientation");
  }
  size_t n = crossings_.size();
  DisjointSets ds(n);
  for (const auto& [label, where] : slots) ds.unite(where[0].first, where[1].first);
  for (size_t x = 1; x < n; ++x)
    if (ds.find(x) != ds.find(0)) throw StructureError("diagram is not connected");

  // Faces of the ribbon graph: a planar connected 4-valent graph with c vertices has c+2 faces.
  auto other_slot = [&](size_t x, int k) {
    const auto& w = slots[crossings_[x].arcs[static_cast<size_t>(k)]];
    return (w[0].first == x && w[0].second == k) ? w[1] : w[0];
  };
  std::vector<bool> seen(4 * n, false);
  size_t faces = 0;
  for (size_t start = 0; start < 4 * n; ++start) {
    if (seen[start]) continue;
    ++faces;
    size_t cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      size_t x = cur / 4;
      int j = static_cast<int>(cur % 4);
      auto [y, k] = other_slot(x, (j + 1) % 4);
      cur = y * 4 + static_cast<size_t>(k);
    }
  }
  if (faces != n + 2)
    throw StructureError("PD code is not planar (" + std::to_string(faces) + " faces for " +
                         std::to_string(n) + " crossings)");
}

PDCode PDCode::from_braid(const BraidWord& b) {
  int s = b.strands();
  std::vector<long> cur(static_cast<size_t>(s));
  std::iota(cur.begin(), cur.end(), 0L);
  long next = s;
  std::vector<PDCrossing> xs;
  for (int l : b.letters()) {
    size_t i = static_cast<size_t>(std::abs(l) - 1);
    long bl = cur[i], br = cur[i + 1];
    long tl = next++, tr = next++;
    if (l > 0)
      xs.push_back({{br, tr, tl, bl}, 1});
    else
      xs.push_back({{bl, br, tr, tl}, -1});
    cur[i] = tl;
    cur[i + 1] = tr;
  }
  int loops = 0;
  std::map<long, long> closing;
  for (int p = 0; p < s; ++p) {
    if (cur[static_cast<size_t>(p)] == p)
      ++loops;
    else
      closing[cur[static_cast<size_t>(p)]] = p;
  }
  for (auto& x : xs)
    for (auto& a : x.arcs)
      if (auto it = closing.find(a); it != closing.end()) a = it->second;
  if (!xs.empty() && loops > 0) throw StructureError("braid closure is a split diagram");
  return PDCode(std::move(xs), loops).normalized();
}

PDCode PDCode::normalized() const {
  std::map<long, long> relabel;
  std::vector<PDCrossing> xs = crossings_;
  for (auto& x : xs)
    for (auto& a : x.arcs) {
      auto [it, fresh] = relabel.try_emplace(a, static_cast<long>(relabel.size()));
      a = it->second;
    }
  PDCode r;
  r.crossings_ = std::move(xs);
  r.free_loops_ = free_loops_;
  return r;
}

PDCode PDCode::parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("PD code is not valid JSON: ") + e.what());
  }
  int loops = 0;
  if (j.is_object()) {
    loops = j.value("free_loops", 0);
    j = j.value("crossings", nlohmann::json::array());
  }
  if (!j.is_array()) throw ParseError("PD code must be a JSON list");
  std::vector<PDCrossing> xs;
  std::vector<bool> inferred;
  std::map<long, int> labels;
  try {
    for (const auto& item : j) {
      PDCrossing x;
      nlohmann::json arcs;
      bool has_sign = true;
      if (item.is_object()) {
        arcs = item.at("arcs");
        if (item.contains("sign"))
          x.sign = item.at("sign").get<int>();
        else
          has_sign = false;
      } else {
        arcs = item;
      }
      if (!arcs.is_array() || (arcs.size() != 4 && arcs.size() != 5))
        throw ParseError("PD crossing must list four arc labels");
      for (size_t k = 0; k < 4; ++k) x.arcs[k] = arcs[k].get<long>();
      if (arcs.size() == 5) x.sign = arcs[4].get<int>();
      else if (!item.is_object()) has_sign = false;
      for (long a : x.arcs) labels[a] = 1;
      xs.push_back(x);
      inferred.push_back(!has_sign);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed PD code: ") + e.what());
  }
  long n = static_cast<long>(labels.size());
  long lo = labels.empty() ? 0 : labels.begin()->first;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (!inferred[i]) continue;
    long b = xs[i].arcs[1] - lo, d = xs[i].arcs[3] - lo;
    bool pos = mod_floor(d + 1, n) == b;
    bool neg = mod_floor(b + 1, n) == d;
    if (pos == neg) throw ParseError("cannot infer crossing sign; give it explicitly");
    xs[i].sign = pos ? 1 : -1;
  }
  return PDCode(std::move(xs), loops);
}

std::string PDCode::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& x : crossings_)
    list.push_back({{"arcs", {x.arcs[0], x.arcs[1], x.arcs[2], x.arcs[3]}}, {"sign", x.sign}});
  if (free_loops_ == 0) return list.dump();
  return nlohmann::json{{"crossings", list}, {"free_loops", free_loops_}}.dump();
}

int PDCode::writhe() const { return positive_crossings() - negative_crossings(); }

int PDCode::positive_crossings() const {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(),
                                        [](const PDCrossing& x) { return x.sign > 0; }));
}

int PDCode::negative_crossings() const { return crossing_count() - positive_crossings(); }

int PDCode::components() const {
  std::map<long, long> next;
  for (const auto& x : crossings_) {
    next[x.arcs[0]] = x.arcs[2];
    next[over_in(x)] = over_out(x);
  }
  std::map<long, bool> seen;
  int cycles = 0;
  for (const auto& [start, unused] : next) {
    if (seen[start]) continue;
    ++cycles;
    for (long a = start; !seen[a]; a = next[a]) seen[a] = true;
  }
  return cycles + free_loops_;
}

void PDCode::require_knot() const {
  int c = components();
  if (c != 1)
    throw StructureError("diagram has " + std::to_string(c) + " components, expected a knot");
}

PDCode PDCode::mirrored() const {
  std::vector<PDCrossing> xs;
  for (const auto& x : crossings_) {
    const auto& a = x.arcs;
    if (x.sign > 0)
      xs.push_back({{a[3], a[0], a[1], a[2]}, -1});
    else
      xs.push_back({{a[1], a[2], a[3], a[0]}, 1});
  }
  PDCode r;
  r.crossings_ = std::move(xs);
  r.free_loops_ = free_loops_;
  return r;
}

PDCode PDCode::cabled(int m) const {
  if (m < 1) throw DomainError("cable multiplicity must be positive");
  if (m == 1) return *this;
  PDCode base = normalized();
  long next = 2L * base.crossing_count() * m;
  std::vector<PDCrossing> xs;
  xs.reserve(base.crossings_.size() * static_cast<size_t>(m * m));
  for (const auto& x : base.crossings_) {
    const bool pos = x.sign > 0;
    // seg[t] labels of copy i along its strand: t = 0 incoming, t = m outgoing
    std::vector<std::vector<long>> under(static_cast<size_t>(m)), over(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      auto& u = under[static_cast<size_t>(i)];
      auto& o = over[static_cast<size_t>(i)];
      u.push_back(x.arcs[0] * m + i);
      o.push_back(over_in(x) * m + i);
      for (int t = 1; t < m; ++t) {
        u.push_back(next++);
        o.push_back(next++);
      }
      u.push_back(x.arcs[2] * m + i);
      o.push_back(over_out(x) * m + i);
    }
    // order in which an under copy meets the over copies, and vice versa
    auto under_step = [&](int j) { return pos ? m - 1 - j : j; };
    auto over_step = [&](int i) { return pos ? i : m - 1 - i; };
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        size_t tu = static_cast<size_t>(under_step(j));
        size_t to = static_cast<size_t>(over_step(i));
        long ui = under[static_cast<size_t>(i)][tu], uo = under[static_cast<size_t>(i)][tu + 1];
        long oi = over[static_cast<size_t>(j)][to], oo = over[static_cast<size_t>(j)][to + 1];
        if (pos)
          xs.push_back({{ui, oo, uo, oi}, 1});
        else
          xs.push_back({{ui, oi, uo, oo}, -1});
      }
  }
  if (xs.empty()) return PDCode({}, free_loops_ * m);
  return PDCode(std::move(xs), 0).normalized();
}

}  // namespace cj
