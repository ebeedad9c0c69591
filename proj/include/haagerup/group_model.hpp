#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "haagerup/shape.hpp"
#include "haagerup/triangle_presentation.hpp"

namespace haagerup {

/// A generator a_i or its inverse a_i^{-1}.
struct Letter {
  std::uint16_t generator = 0;
  bool inverse = false;

  constexpr Letter inverted() const noexcept { return {generator, !inverse}; }
  friend constexpr auto operator<=>(Letter const&, Letter const&) = default;
};

constexpr Letter pos(std::size_t i) noexcept {
  return {static_cast<std::uint16_t>(i), false};
}
constexpr Letter neg(std::size_t i) noexcept {
  return {static_cast<std::uint16_t>(i), true};
}

using Word = std::vector<Letter>;

/// An element in canonical form.
///
/// For an A2 model `first` is the positive part a_{i1}...a_{im} and `second`
/// the negative part a^{-1}_{i(m+1)}...a^{-1}_{i(m+n)}. For an A1xA1 model
/// they are the freely reduced words of the two tree factors. In both cases
/// the shape is (first.size(), second.size()).
struct GroupElement {
  Word first;
  Word second;

  Shape shape() const noexcept { return {first.size(), second.size()}; }
  std::size_t length() const noexcept { return first.size() + second.size(); }
  bool is_identity() const noexcept { return first.empty() && second.empty(); }
  Word word() const;

  friend auto operator<=>(GroupElement const&, GroupElement const&) = default;
  friend bool operator==(GroupElement const&, GroupElement const&) = default;
};

/// Letters as signed decimal indices joined by '.', e.g. "0.3.-2"; an
/// inverse of generator 0 is written "-0". The identity is the empty string.
std::string format_word(std::span<Letter const> word);
std::string format_element(GroupElement const& x);
Word parse_word(std::string_view text);

/// Immutable model of an A1xA1 group (direct product of two free groups) or
/// an A2 group given by a triangle presentation.
class GroupModel {
 public:
  Case kind() const noexcept { return kind_; }
  std::size_t generator_count() const noexcept { return generator_count_; }
  std::size_t rank1() const noexcept { return rank1_; }
  std::size_t rank2() const noexcept { return rank2_; }
  TrianglePresentation const& presentation() const noexcept { return pres_; }

  /// All letters in index order: a_0, a_0^{-1}, a_1, a_1^{-1}, ...
  std::vector<Letter> const& letters() const noexcept { return letters_; }
  /// Shape-(1,0) letters: N for A2, N_1 for A1xA1.
  std::vector<Letter> const& first_generators() const noexcept { return n1_; }
  /// Shape-(0,1) letters: N^{-1} for A2, N_2 for A1xA1.
  std::vector<Letter> const& second_generators() const noexcept { return n2_; }

  GroupElement identity() const { return {}; }
  GroupElement generator(Letter a) const;

  GroupElement multiply(GroupElement const& x, GroupElement const& y) const;
  GroupElement multiply(GroupElement const& x, Letter a) const;
  GroupElement inverse(GroupElement const& x) const;
  Shape shape(GroupElement const& x) const noexcept { return x.shape(); }
  GroupElement canonical_form(std::span<Letter const> word) const;

  /// True when x satisfies the syntactic canonical-form conditions.
  bool is_canonical(GroupElement const& x) const;

  /// z with (x, y, z) in T, if any (A2 only).
  std::optional<std::size_t> third(std::size_t x, std::size_t y) const;
  /// (k, l) with a_i^{-1} a_j = a_k a_l^{-1} (A2 only, i != j).
  std::pair<std::size_t, std::size_t> mixed(std::size_t i, std::size_t j) const;

  /// The relators of the presentation as words equal to the identity:
  /// a_x a_y a_z for A2, commutators a b a^{-1} b^{-1} across factors for
  /// A1xA1.
  std::vector<Word> relators() const;

 private:
  friend GroupModel make_a1xa1_group(std::size_t, std::size_t);
  friend GroupModel make_a2_group(TrianglePresentation const&);

  GroupModel() = default;
  void init_letters();
  bool valid_letter(Letter a) const noexcept;

  void push_a1(GroupElement& x, Letter a) const;
  void push_positive(Word& p, Word& q, std::size_t j) const;
  void push_negative(Word& p, Word& q, std::size_t j) const;

  Case kind_ = Case::a1xa1;
  std::size_t generator_count_ = 0;
  std::size_t rank1_ = 0;
  std::size_t rank2_ = 0;
  TrianglePresentation pres_;
  std::vector<Letter> letters_;
  std::vector<Letter> n1_;
  std::vector<Letter> n2_;
  // A2 tables, indexed x * N + y.
  std::vector<int> third_;
  std::vector<std::pair<std::uint16_t, std::uint16_t>> mixed_;
};

/// F_{rank1} x F_{rank2}. Generators 0..rank1-1 belong to the first factor,
/// rank1..rank1+rank2-1 to the second.
GroupModel make_a1xa1_group(std::size_t rank1, std::size_t rank2);

/// Throws InvalidPresentation naming the violated axiom.
GroupModel make_a2_group(TrianglePresentation const& pres);

class InvalidPresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace haagerup

template <>
struct std::hash<haagerup::GroupElement> {
  std::size_t operator()(haagerup::GroupElement const& x) const noexcept;
};
