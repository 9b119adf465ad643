#include "hibi/poset.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

#include "hibi/error.hpp"

namespace hibi {

namespace {

void check_size(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::EmptyPoset, "a poset needs at least one element");
  if (n > kMaxElements)
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " elements exceed the limit of " +
                                         std::to_string(kMaxElements));
}

void check_labels(const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error(ErrorKind::DuplicateLabel, "label '" + l + "'");
}

}  // namespace

Poset Poset::from_relations(std::vector<std::string> labels,
                            const std::vector<std::pair<Element, Element>>& relations) {
  check_size(labels.size());
  check_labels(labels);
  const std::size_t n = labels.size();

  Poset p;
  p.labels_ = std::move(labels);
  p.above_.assign(n, 0);
  for (auto [lo, up] : relations) {
    if (lo >= n || up >= n)
      throw Error(ErrorKind::UnknownElement, "relation references index out of range");
    if (lo == up)
      throw Error(ErrorKind::CycleDetected, "self relation on '" + p.labels_[lo] + "'");
    p.above_[lo] |= bit(up);
  }

  // Closure by repeated composition: above(x) |= above(above(x)) until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < n; ++x) {
      Mask next = p.above_[x];
      for (Mask m = p.above_[x]; m; m &= m - 1) next |= p.above_[std::countr_zero(m)];
      if (next != p.above_[x]) {
        p.above_[x] = next;
        changed = true;
      }
    }
  }
  for (Element x = 0; x < n; ++x)
    if (has(p.above_[x], x))
      throw Error(ErrorKind::CycleDetected, "cycle through '" + p.labels_[x] + "'");

  p.finish();
  return p;
}

Poset Poset::build(std::vector<std::string> labels,
                   const std::vector<std::pair<std::string, std::string>>& covers) {
  check_size(labels.size());
  check_labels(labels);
  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

  std::vector<std::pair<Element, Element>> rel;
  rel.reserve(covers.size());
  for (const auto& [lo, up] : covers) {
    auto a = index.find(lo);
    if (a == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + lo + "' in covers");
    auto b = index.find(up);
    if (b == index.end()) throw Error(ErrorKind::UnknownLabel, "'" + up + "' in covers");
    rel.emplace_back(a->second, b->second);
  }
  Poset p = from_relations(std::move(labels), rel);
  std::set<std::pair<Element, Element>> reported;
  for (auto [lo, up] : rel) {
    if (!p.covers(up, lo) && reported.insert({lo, up}).second)
      p.warnings_.push_back("cover (" + p.labels_[lo] + ", " + p.labels_[up] +
                            ") is implied by transitivity and was dropped");
  }
  return p;
}

void Poset::finish() {
  const std::size_t n = labels_.size();
  below_.assign(n, 0);
  for (Element x = 0; x < n; ++x)
    for (Mask m = above_[x]; m; m &= m - 1) below_[std::countr_zero(m)] |= bit(x);

  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  for (Element x = 0; x < n; ++x) {
    for (Mask m = above_[x]; m; m &= m - 1) {
      Element y = std::countr_zero(m);
      // y covers x iff nothing strictly between them.
      if ((above_[x] & below_[y]) == 0) {
        upper_covers_[x].push_back(y);
        lower_covers_[y].push_back(x);
      }
    }
  }
  for (auto& v : lower_covers_) std::sort(v.begin(), v.end());

  // Kahn's algorithm, smallest available index first.
  std::vector<int> indeg(n);
  for (Element x = 0; x < n; ++x) indeg[x] = static_cast<int>(lower_covers_[x].size());
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push(x);
  linear_extension_.clear();
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    linear_extension_.push_back(x);
    for (Element y : upper_covers_[x])
      if (--indeg[y] == 0) ready.push(y);
  }

  height_.assign(n, 0);
  for (Element x : linear_extension_)
    for (Element y : lower_covers_[x]) height_[x] = std::max(height_[x], height_[y] + 1);
  depth_.assign(n, 0);
  for (auto it = linear_extension_.rbegin(); it != linear_extension_.rend(); ++it)
    for (Element y : upper_covers_[*it]) depth_[*it] = std::max(depth_[*it], depth_[y] + 1);
  rank_ = *std::max_element(height_.begin(), height_.end());
}

const std::string& Poset::label(Element x) const {
  if (x >= size()) throw Error(ErrorKind::UnknownElement, "index " + std::to_string(x));
  return labels_[x];
}

std::optional<Element> Poset::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

Element Poset::index_of(const std::string& label) const {
  if (auto x = find(label)) return *x;
  throw Error(ErrorKind::UnknownLabel, "'" + label + "'");
}

bool Poset::covers(Element upper, Element lower) const {
  const auto& lc = lower_covers_.at(upper);
  return std::binary_search(lc.begin(), lc.end(), lower);
}

std::vector<CoverPair> Poset::cover_pairs() const {
  std::vector<CoverPair> out;
  for (Element lo = 0; lo < size(); ++lo)
    for (Element up : upper_covers_[lo]) out.push_back({up, lo});
  std::sort(out.begin(), out.end(), [](const CoverPair& a, const CoverPair& b) {
    return std::pair(a.lower, a.upper) < std::pair(b.lower, b.upper);
  });
  return out;
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (is_minimal(x)) out.push_back(x);
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (is_maximal(x)) out.push_back(x);
  return out;
}

int Poset::height(Element x) const {
  if (x >= size()) throw Error(ErrorKind::UnknownElement, "index " + std::to_string(x));
  return height_[x];
}

int Poset::depth(Element x) const {
  if (x >= size()) throw Error(ErrorKind::UnknownElement, "index " + std::to_string(x));
  return depth_[x];
}

ExtendedPoset::ExtendedPoset(Poset base) : base_(std::move(base)) {}

bool ExtendedPoset::less(Node a, Node b) const {
  const std::size_t n = base_.size();
  if (a >= n + 2 || b >= n + 2) throw Error(ErrorKind::UnknownElement, "node out of range");
  if (a == b) return false;
  if (a == bottom() || b == top()) return true;
  if (a == top() || b == bottom()) return false;
  return base_.less(a, b);
}

int ExtendedPoset::height(Node a) const {
  if (a == bottom()) return 0;
  if (a == top()) return rank();
  return base_.height(a) + 1;
}

int ExtendedPoset::depth(Node a) const {
  if (a == top()) return 0;
  if (a == bottom()) return rank();
  return base_.depth(a) + 1;
}

}  // namespace hibi
