#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slh/errors.hpp"

namespace slh {

// Letters of the free group F<a, b> = pi_1 of the three-holed sphere:
// +1 = a, -1 = a^{-1}, +2 = b, -2 = b^{-1}.
using Letter = std::int8_t;

/// Freely reduced word in {a, b}.  ASCII syntax: `a b A B` with uppercase
/// meaning inverse; whitespace optional.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> letters);  // freely reduces

  // Throws WordSyntaxError (with the offset of the bad character) on
  // anything other than [abAB] and whitespace.
  static GroupWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  GroupWord inverse() const;
  GroupWord operator*(const GroupWord& o) const;  // concatenation + reduction
  GroupWord pow(long n) const;                    // negative n uses the inverse
  GroupWord cyclic_reduction() const;

  bool operator==(const GroupWord& o) const { return letters_ == o.letters_; }

  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

// True iff the cyclic reduction of w is, up to inversion, a nonzero power of
// a, of b, or of ab -- the boundary classes of the three-holed sphere.
// The identity is not simple.
bool is_simple(const GroupWord& w);

}  // namespace slh
