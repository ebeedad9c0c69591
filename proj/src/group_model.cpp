#include "haagerup/group_model.hpp"

#include <charconv>
#include <sstream>

namespace haagerup {

Word GroupElement::word() const {
  Word w = first;
  w.insert(w.end(), second.begin(), second.end());
  return w;
}

std::string format_word(std::span<Letter const> word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '.';
    if (word[i].inverse) out += '-';
    out += std::to_string(word[i].generator);
  }
  return out;
}

std::string format_element(GroupElement const& x) { return format_word(x.word()); }

Word parse_word(std::string_view text) {
  Word word;
  if (text.empty()) return word;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t const dot = text.find('.', start);
    std::string_view token =
        text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    bool const inverse = !token.empty() && token.front() == '-';
    if (inverse) token.remove_prefix(1);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
        value > 0xffff) {
      throw std::invalid_argument("malformed word '" + std::string(text) + "'");
    }
    word.push_back({static_cast<std::uint16_t>(value), inverse});
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return word;
}

void GroupModel::init_letters() {
  letters_.clear();
  n1_.clear();
  n2_.clear();
  for (std::size_t i = 0; i < generator_count_; ++i) {
    letters_.push_back(pos(i));
    letters_.push_back(neg(i));
  }
  if (kind_ == Case::a2) {
    for (std::size_t i = 0; i < generator_count_; ++i) {
      n1_.push_back(pos(i));
      n2_.push_back(neg(i));
    }
  } else {
    for (auto a : letters_) (a.generator < rank1_ ? n1_ : n2_).push_back(a);
  }
}

bool GroupModel::valid_letter(Letter a) const noexcept { return a.generator < generator_count_; }

GroupElement GroupModel::generator(Letter a) const {
  if (!valid_letter(a)) throw PreconditionError("generator index out of range");
  return multiply(identity(), a);
}

std::optional<std::size_t> GroupModel::third(std::size_t x, std::size_t y) const {
  int const z = third_.at(x * generator_count_ + y);
  if (z < 0) return std::nullopt;
  return static_cast<std::size_t>(z);
}

std::pair<std::size_t, std::size_t> GroupModel::mixed(std::size_t i, std::size_t j) const {
  auto const [k, l] = mixed_.at(i * generator_count_ + j);
  return {k, l};
}

void GroupModel::push_a1(GroupElement& x, Letter a) const {
  Word& w = a.generator < rank1_ ? x.first : x.second;
  if (!w.empty() && w.back() == a.inverted()) {
    w.pop_back();
  } else {
    w.push_back(a);
  }
}

// Right multiplication of p q (positive part p, negative part q) by a_j.
void GroupModel::push_positive(Word& p, Word& q, std::size_t j) const {
  if (!q.empty()) {
    std::size_t const last = q.back().generator;
    q.pop_back();
    if (last == j) return;
    // a_last^{-1} a_j = a_k a_l^{-1}
    auto const [k, l] = mixed(last, j);
    push_positive(p, q, k);
    push_negative(p, q, l);
    return;
  }
  if (!p.empty()) {
    // a_x a_j = a_z^{-1} when (x, j, z) is in T
    if (auto z = third(p.back().generator, j)) {
      p.pop_back();
      push_negative(p, q, *z);
      return;
    }
  }
  p.push_back(pos(j));
}

// Right multiplication of p q by a_j^{-1}.
void GroupModel::push_negative(Word& p, Word& q, std::size_t j) const {
  if (!q.empty()) {
    // a_y^{-1} a_j^{-1} = a_z when (j, y, z) is in T
    if (auto z = third(j, q.back().generator)) {
      q.pop_back();
      push_positive(p, q, *z);
      return;
    }
    q.push_back(neg(j));
    return;
  }
  if (!p.empty() && p.back().generator == j) {
    p.pop_back();
    return;
  }
  q.push_back(neg(j));
}

GroupElement GroupModel::multiply(GroupElement const& x, Letter a) const {
  if (!valid_letter(a)) throw PreconditionError("generator index out of range");
  GroupElement out = x;
  if (kind_ == Case::a1xa1) {
    push_a1(out, a);
  } else if (a.inverse) {
    push_negative(out.first, out.second, a.generator);
  } else {
    push_positive(out.first, out.second, a.generator);
  }
  return out;
}

GroupElement GroupModel::multiply(GroupElement const& x, GroupElement const& y) const {
  GroupElement out = x;
  auto apply = [&](Letter a) {
    if (kind_ == Case::a1xa1) {
      push_a1(out, a);
    } else if (a.inverse) {
      push_negative(out.first, out.second, a.generator);
    } else {
      push_positive(out.first, out.second, a.generator);
    }
  };
  for (Letter a : y.first) apply(a);
  for (Letter a : y.second) apply(a);
  return out;
}

GroupElement GroupModel::inverse(GroupElement const& x) const {
  GroupElement out;
  auto invert_word = [](Word const& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverted());
    return r;
  };
  if (kind_ == Case::a1xa1) {
    out.first = invert_word(x.first);
    out.second = invert_word(x.second);
  } else {
    out.first = invert_word(x.second);
    out.second = invert_word(x.first);
  }
  return out;
}

GroupElement GroupModel::canonical_form(std::span<Letter const> word) const {
  GroupElement out;
  for (Letter a : word) {
    if (!valid_letter(a)) throw PreconditionError("generator index out of range");
    if (kind_ == Case::a1xa1) {
      push_a1(out, a);
    } else if (a.inverse) {
      push_negative(out.first, out.second, a.generator);
    } else {
      push_positive(out.first, out.second, a.generator);
    }
  }
  return out;
}

bool GroupModel::is_canonical(GroupElement const& x) const {
  for (auto const& w : {std::cref(x.first), std::cref(x.second)}) {
    for (Letter a : w.get()) {
      if (!valid_letter(a)) return false;
    }
  }
  if (kind_ == Case::a1xa1) {
    auto reduced_in = [](Word const& w, auto in_factor) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (!in_factor(w[i])) return false;
        if (i > 0 && w[i] == w[i - 1].inverted()) return false;
      }
      return true;
    };
    return reduced_in(x.first, [&](Letter a) { return a.generator < rank1_; }) &&
           reduced_in(x.second, [&](Letter a) { return a.generator >= rank1_; });
  }
  auto const& p = x.first;
  auto const& q = x.second;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].inverse) return false;
    if (i > 0 && third(p[i - 1].generator, p[i].generator)) return false;
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!q[i].inverse) return false;
    if (i > 0 && third(q[i].generator, q[i - 1].generator)) return false;
  }
  return p.empty() || q.empty() || p.back().generator != q.front().generator;
}

std::vector<Word> GroupModel::relators() const {
  std::vector<Word> out;
  if (kind_ == Case::a2) {
    for (auto const& t : pres_.triples) out.push_back({pos(t[0]), pos(t[1]), pos(t[2])});
  } else {
    for (std::size_t i = 0; i < rank1_; ++i) {
      for (std::size_t j = rank1_; j < generator_count_; ++j) {
        out.push_back({pos(i), pos(j), neg(i), neg(j)});
      }
    }
  }
  return out;
}

GroupModel make_a1xa1_group(std::size_t rank1, std::size_t rank2) {
  if (rank1 == 0 || rank2 == 0) throw PreconditionError("free factor ranks must be at least 1");
  GroupModel model;
  model.kind_ = Case::a1xa1;
  model.rank1_ = rank1;
  model.rank2_ = rank2;
  model.generator_count_ = rank1 + rank2;
  model.init_letters();
  return model;
}

GroupModel make_a2_group(TrianglePresentation const& pres) {
  auto const report = validate_triangle_presentation(pres);
  if (auto const* failure = report.first_failure()) {
    throw InvalidPresentation(failure->name + " violated: " + failure->detail);
  }
  GroupModel model;
  model.kind_ = Case::a2;
  model.pres_ = pres;
  std::size_t const n = pres.generator_count;
  model.generator_count_ = n;
  model.third_.assign(n * n, -1);
  for (auto const& t : pres.triples) model.third_[t[0] * n + t[1]] = static_cast<int>(t[2]);

  // a_i^{-1} a_j = a_k a_l^{-1} holds whenever (m, i, k) and (m, j, l) are in
  // T for a common m: then a_k = a_i^{-1} a_m^{-1} and a_l^{-1} = a_m a_j.
  // Search all triples for such pairs; exactly one must exist.
  model.mixed_.assign(n * n, {0, 0});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      std::size_t found = 0;
      for (auto const& ti : pres.triples) {
        if (ti[1] != i) continue;
        for (auto const& tj : pres.triples) {
          if (tj[0] != ti[0] || tj[1] != j) continue;
          model.mixed_[i * n + j] = {static_cast<std::uint16_t>(ti[2]),
                                     static_cast<std::uint16_t>(tj[2])};
          ++found;
        }
      }
      if (found != 1) {
        throw InvalidPresentation("link condition violated: a_" + std::to_string(i) +
                                  "^-1 a_" + std::to_string(j) + " has " +
                                  std::to_string(found) + " rewritings of shape (1,1)");
      }
    }
  }
  model.init_letters();
  return model;
}

}  // namespace haagerup

std::size_t std::hash<haagerup::GroupElement>::operator()(
    haagerup::GroupElement const& x) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ x.first.size();
  auto mix = [&h](haagerup::Letter a) {
    std::size_t const v = (static_cast<std::size_t>(a.generator) << 1) | (a.inverse ? 1u : 0u);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (auto a : x.first) mix(a);
  h ^= 0xff51afd7ed558ccdULL;
  for (auto a : x.second) mix(a);
  return h;
}
