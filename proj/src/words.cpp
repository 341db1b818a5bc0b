#include "slh/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace slh {

namespace {

std::vector<Letter> free_reduce(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (Letter x : in) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

}  // namespace

GroupWord::GroupWord(std::vector<Letter> letters) : letters_(free_reduce(letters)) {}

GroupWord GroupWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    switch (ch) {
      case 'a': letters.push_back(1); break;
      case 'A': letters.push_back(-1); break;
      case 'b': letters.push_back(2); break;
      case 'B': letters.push_back(-2); break;
      default:
        if (std::isspace(static_cast<unsigned char>(ch))) break;
        throw WordSyntaxError(
            std::string("bad word token '") + ch + "' at position " + std::to_string(i), i);
    }
  }
  return GroupWord(std::move(letters));
}

GroupWord GroupWord::inverse() const {
  std::vector<Letter> r(letters_.rbegin(), letters_.rend());
  for (Letter& x : r) x = static_cast<Letter>(-x);
  GroupWord w;
  w.letters_ = std::move(r);  // reversal of a reduced word is reduced
  return w;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  std::vector<Letter> cat = letters_;
  cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
  return GroupWord(std::move(cat));
}

GroupWord GroupWord::pow(long n) const {
  GroupWord base = n < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
  GroupWord acc;
  for (unsigned long i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

GroupWord GroupWord::cyclic_reduction() const {
  std::vector<Letter> w = letters_;
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
  }
  GroupWord r;
  r.letters_ = std::move(w);
  return r;
}

std::string GroupWord::str() const {
  std::string s;
  for (Letter x : letters_) {
    switch (x) {
      case 1: s += 'a'; break;
      case -1: s += 'A'; break;
      case 2: s += 'b'; break;
      case -2: s += 'B'; break;
    }
  }
  return s;
}

bool is_simple(const GroupWord& w) {
  const GroupWord reduced = w.cyclic_reduction();
  const auto& c = reduced.letters();
  if (c.empty()) return false;
  // power of a single generator (or its inverse)
  if (std::all_of(c.begin(), c.end(), [&](Letter x) { return x == c[0]; })) return true;
  // power of ab up to inversion and cyclic rotation: letters alternate
  // between the two generators with a single common sign
  if (c.size() % 2 != 0) return false;
  int sign = c[0] > 0 ? 1 : -1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Letter x = c[i];
    if ((x > 0 ? 1 : -1) != sign) return false;
    if (std::abs(x) == std::abs(c[(i + 1) % c.size()])) return false;
  }
  return true;
}

}  // namespace slh
