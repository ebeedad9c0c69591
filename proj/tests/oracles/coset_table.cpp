#include "coset_table.hpp"

#include <algorithm>
#include <set>

namespace oracle {

CosetTable::CosetTable(std::size_t generators, std::vector<Relator> relators,
                       std::size_t depth_cap)
    : letters_(2 * generators), relators_(std::move(relators)), depth_cap_(depth_cap) {
  table_.assign(letters_, -1);
  parent_.push_back(0);
  depth_.push_back(0);
}

int CosetTable::find(int c) {
  int root = c;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[c] != root) {
    int next = parent_[c];
    parent_[c] = root;
    c = next;
  }
  return root;
}

int CosetTable::rep(int c) const {
  while (parent_[c] != c) c = parent_[c];
  return c;
}

int CosetTable::define(int c, int x) {
  int const d = static_cast<int>(parent_.size());
  parent_.push_back(d);
  depth_.push_back(depth_[c] + 1);
  table_.resize(table_.size() + letters_, -1);
  entry(c, x) = d;
  entry(d, inv_letter(x)) = c;
  return d;
}

void CosetTable::merge(int a, int b, std::vector<int>& queue) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (b < a) std::swap(a, b);
  parent_[b] = a;
  depth_[a] = std::min(depth_[a], depth_[b]);
  queue.push_back(b);
}

void CosetTable::coincidence(int a, int b) {
  std::vector<int> queue;
  merge(a, b, queue);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int const e = queue[qi];
    for (std::size_t x = 0; x < letters_; ++x) {
      int const f = entry(e, static_cast<int>(x));
      if (f < 0) continue;
      int const xi = inv_letter(static_cast<int>(x));
      if (entry(f, xi) == e) entry(f, xi) = -1;
      int const e1 = find(e);
      int const f1 = find(f);
      if (entry(e1, static_cast<int>(x)) >= 0) {
        merge(f1, entry(e1, static_cast<int>(x)), queue);
      } else if (entry(f1, xi) >= 0) {
        merge(e1, entry(f1, xi), queue);
      } else {
        entry(e1, static_cast<int>(x)) = f1;
        entry(f1, xi) = e1;
      }
    }
  }
}

bool CosetTable::scan(int c, Relator const& r) {
  int f = c;
  std::size_t i = 0;
  std::size_t j = r.size();
  while (i < j && entry(f, r[i]) >= 0) f = entry(f, r[i++]);
  if (i == j) {
    if (f != c) {
      coincidence(f, c);
      return true;
    }
    return false;
  }
  int b = c;
  while (j > i && entry(b, inv_letter(r[j - 1])) >= 0) b = entry(b, inv_letter(r[--j]));
  if (j < i) {
    coincidence(f, b);
    return true;
  }
  if (i == j) {
    if (f != b) {
      coincidence(f, b);
      return true;
    }
    return false;
  }
  if (j == i + 1) {
    entry(f, r[i]) = b;
    entry(b, inv_letter(r[i])) = f;
    return true;
  }
  return false;
}

void CosetTable::enumerate() {
  for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
    if (find(c) != c) continue;
    if (depth_[c] < depth_cap_) {
      for (std::size_t x = 0; x < letters_ && find(c) == c; ++x) {
        if (entry(c, static_cast<int>(x)) < 0) define(c, static_cast<int>(x));
      }
    }
    for (auto const& r : relators_) {
      if (find(c) != c) break;
      scan(c, r);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < static_cast<int>(parent_.size()); ++c) {
      for (auto const& r : relators_) {
        if (find(c) != c) break;
        changed = scan(c, r) || changed;
      }
    }
  }
}

int CosetTable::step(int c, int x) const {
  int const d = entry(rep(c), x);
  return d < 0 ? -1 : rep(d);
}

int CosetTable::trace(std::vector<int> const& word) const {
  int c = 0;
  for (int x : word) {
    c = step(c, x);
    if (c < 0) return -1;
  }
  return c;
}

std::size_t CosetTable::live_count() const {
  std::size_t n = 0;
  for (std::size_t c = 0; c < parent_.size(); ++c) n += parent_[c] == static_cast<int>(c);
  return n;
}

std::vector<Relator> triangle_relators(std::vector<std::vector<int>> const& triples) {
  std::set<Relator> out;
  for (auto const& t : triples) {
    for (std::size_t k = 0; k < t.size(); ++k) {
      Relator r;
      for (std::size_t s = 0; s < t.size(); ++s) r.push_back(2 * t[(k + s) % t.size()]);
      Relator inv;
      for (auto it = r.rbegin(); it != r.rend(); ++it) inv.push_back(inv_letter(*it));
      out.insert(r);
      out.insert(inv);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace oracle
