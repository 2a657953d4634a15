#include "negbeta/oracle/oracle.hpp"

#include "negbeta/error.hpp"

#include <numeric>

namespace negbeta::oracle {

namespace {

// -1: s below bound, 0: tie over the compared range, +1: s above bound.
// `unknown` is set when the tie runs past the known part of the bound.
int compare_to_bound(WordView s, const BoundSequence& bound, bool& unknown) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (!bound.knows(j)) {
      unknown = true;
      return 0;
    }
    const Digit b = bound.at(j);
    if (s[j] == b) continue;
    const bool odd_position = (j + 1) % 2 == 1;
    const bool bigger_digit = s[j] > b;
    return (odd_position == bigger_digit) ? 1 : -1;
  }
  return 0;
}

int compare_to_seq(WordView s, const EvPeriodicSeq& bound) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Digit b = bound.at(j);
    if (s[j] == b) continue;
    const bool odd_position = (j + 1) % 2 == 1;
    return (odd_position == (s[j] > b)) ? 1 : -1;
  }
  return 0;
}

bool next_word(Word& w, Digit top) {
  for (std::size_t i = w.size(); i-- > 0;) {
    if (w[i] < top) {
      ++w[i];
      return true;
    }
    w[i] = 1;
  }
  return false;
}

}  // namespace

Admissibility naive_admissible(const ShiftSpec& spec, WordView w) {
  const Digit top = spec.upper().at(0);
  for (Digit d : w)
    if (d < 1 || d > top) return Admissibility::No;
  bool undetermined = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const WordView suffix = w.subspan(i);
    bool unknown = false;
    if (compare_to_bound(suffix, spec.upper(), unknown) > 0) return Admissibility::No;
    if (unknown) undetermined = true;
    if (spec.lower() && compare_to_seq(suffix, *spec.lower()) < 0) return Admissibility::No;
  }
  return undetermined ? Admissibility::Undetermined : Admissibility::Yes;
}

std::size_t naive_k(WordView b, WordView w) {
  for (std::size_t k = std::min(b.size(), w.size()); k > 0; --k) {
    bool match = true;
    for (std::size_t j = 0; j < k && match; ++j) match = w[w.size() - k + j] == b[j];
    if (match) return k;
  }
  return 0;
}

std::vector<Word> naive_words(const ShiftSpec& spec, std::size_t n) {
  const Digit top = spec.upper().at(0);
  std::vector<Word> out;
  Word w(n, 1);
  do {
    const auto v = naive_admissible(spec, w);
    if (v == Admissibility::Undetermined) throw Error(ErrorKind::SpecPrefixTooShort, "oracle cannot decide");
    if (v == Admissibility::Yes) out.push_back(w);
  } while (next_word(w, top));
  return out;
}

std::vector<Word> naive_per(const ShiftSpec& spec, std::size_t n) {
  const Digit top = spec.upper().at(0);
  std::size_t horizon = 0;
  if (const auto* up = spec.upper().periodic())
    horizon = up->preperiod().size() + n * up->period().size();
  else
    horizon = *spec.upper().known_length();
  if (spec.lower()) horizon = std::max(horizon, spec.lower()->preperiod().size() + n * spec.lower()->period().size());
  std::vector<Word> out;
  Word w(n, 1);
  do {
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r) {
      Word seq(horizon);
      for (std::size_t j = 0; j < horizon; ++j) seq[j] = w[(r + j) % n];
      bool unknown = false;
      const int c = compare_to_bound(seq, spec.upper(), unknown);
      if (c > 0) ok = false;
      if (ok && unknown) throw Error(ErrorKind::HorizonExhausted, "oracle ran out of bound symbols");
      if (ok && spec.lower() && compare_to_seq(seq, *spec.lower()) < 0) ok = false;
    }
    if (ok) out.push_back(w);
  } while (next_word(w, top));
  return out;
}

std::set<Word> naive_followers(const ShiftSpec& spec, WordView w, std::size_t depth) {
  const Digit top = spec.upper().at(0);
  std::set<Word> out;
  Word u(depth, 1);
  do {
    Word full(w.begin(), w.end());
    full.insert(full.end(), u.begin(), u.end());
    if (naive_admissible(spec, full) == Admissibility::Yes) out.insert(u);
  } while (next_word(u, top));
  return out;
}

bool naive_extendable(const ShiftSpec& spec, WordView w, std::size_t extension) {
  Word cur(w.begin(), w.end());
  if (naive_admissible(spec, cur) != Admissibility::Yes) return false;
  if (extension == 0) return true;
  const Digit top = spec.upper().at(0);
  for (Digit a = 1; a <= top; ++a) {
    cur.push_back(a);
    if (naive_extendable(spec, cur, extension - 1)) return true;
    cur.pop_back();
  }
  return false;
}

bool naive_in_c(const ShiftSpec& spec, std::size_t L, WordView x) {
  if (x.empty() || L == 0) return false;
  const Word b = spec.upper().prefix(L + x.size());
  if (x[0] != b[L - 1]) return false;
  Word y(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(L - 1));
  y.insert(y.end(), x.begin(), x.end());
  if (naive_admissible(spec, y) != Admissibility::Yes) return false;
  for (std::size_t j = L; j <= y.size(); ++j)
    if (naive_k(b, WordView(y).first(j)) < L) return false;
  return true;
}

std::pair<Word, Word> naive_split(const ShiftSpec& spec, std::size_t L, WordView w) {
  const Word b = spec.upper().prefix(w.size() + 1);
  std::size_t cut = 0;
  for (std::size_t j = 0; j <= w.size(); ++j)
    if (naive_k(b, w.first(j)) < L) cut = j;
  return {Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut)),
          Word(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end())};
}

}  // namespace negbeta::oracle
