#pragma once

#include <vector>

namespace vbt {

// A freely reduced word in a free group: signed 1-based generator indices.
using Word = std::vector<int>;

// Push one letter onto a reduced word, cancelling with the top if inverse.
inline void push_reduced(Word& w, int letter) {
  if (!w.empty() && w.back() == -letter)
    w.pop_back();
  else
    w.push_back(letter);
}

inline Word reduced(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int s : w) push_reduced(out, s);
  return out;
}

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  for (int s : b) push_reduced(out, s);
  return out;
}

} // namespace vbt
