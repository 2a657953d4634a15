#include "negbeta/word.hpp"

#include "negbeta/error.hpp"

#include <algorithm>
#include <cctype>

namespace negbeta {

std::string format_word(WordView w) {
  const bool wide = std::any_of(w.begin(), w.end(), [](Digit d) { return d > 9 || d < 0; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));

  Word out;
  auto digit_token = [&](const std::string& t) {
    if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw Error(ErrorKind::InvalidInput, "bad symbol '" + t + "' in word '" + std::string(text) + "'");
  };
  if (tokens.size() == 1) {
    digit_token(tokens[0]);
    for (char c : tokens[0]) out.push_back(c - '0');
    return out;
  }
  for (const auto& t : tokens) {
    digit_token(t);
    out.push_back(std::stoi(t));
  }
  return out;
}

Word repeat(WordView w, std::size_t times) {
  Word out;
  out.reserve(w.size() * times);
  for (std::size_t i = 0; i < times; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Word constant_word(Digit d, std::size_t length) { return Word(length, d); }

Word concat(WordView a, WordView b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool is_constant(WordView w, Digit d) {
  return std::all_of(w.begin(), w.end(), [d](Digit x) { return x == d; });
}

EvPeriodicSeq::EvPeriodicSeq(Word preperiod, Word period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw Error(ErrorKind::InvalidInput, "eventually periodic sequence needs a nonempty period");
  // primitive root of the period
  const std::size_t p = period_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < p && ok; ++i) ok = period_[i] == period_[i - d];
    if (ok) {
      period_.resize(d);
      break;
    }
  }
  // absorb the tail of the preperiod into a rotated period
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    preperiod_.pop_back();
  }
}

Digit EvPeriodicSeq::at(std::size_t i) const {
  if (i < preperiod_.size()) return preperiod_[i];
  return period_[(i - preperiod_.size()) % period_.size()];
}

Word EvPeriodicSeq::prefix(std::size_t n) const {
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

Digit EvPeriodicSeq::max_digit() const {
  Digit m = *std::max_element(period_.begin(), period_.end());
  for (Digit d : preperiod_) m = std::max(m, d);
  return m;
}

std::string EvPeriodicSeq::str() const { return format_word(preperiod_) + "|" + format_word(period_); }

}  // namespace negbeta
