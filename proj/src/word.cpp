#include "pellwalk/word.hpp"

#include <stdexcept>

namespace pellwalk {

namespace {

[[noreturn]] void bad_word(std::string_view text) {
  throw std::invalid_argument("invalid step word: '" + std::string(text) + "'");
}

}  // namespace

StepWord StepWord::parse(std::string_view text) {
  StepWord word;
  if (text.empty()) {
    return word;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view token = text.substr(pos, end - pos);
    if (token.empty()) {
      bad_word(text);  // leading, trailing, or doubled space
    }
    StepDir dir;
    if (token[0] == 'R') {
      dir = StepDir::R;
    } else if (token[0] == 'L') {
      dir = StepDir::L;
    } else {
      bad_word(text);
    }
    BigInt len = 1;
    if (token.size() > 1) {
      if (token[1] != '^' || token.size() == 2) {
        bad_word(text);
      }
      std::string_view digits = token.substr(2);
      for (char ch : digits) {
        if (ch < '0' || ch > '9') {
          bad_word(text);
        }
      }
      len = BigInt(std::string(digits), 10);
      if (len < 2) {
        bad_word(text);  // exponent 1 must be written as a bare letter
      }
    }
    word.append(dir, len);
    pos = end + 1;
  }
  return word;
}

void StepWord::append(StepDir dir, const BigInt& len) {
  if (len < 1) {
    throw std::invalid_argument("StepWord::append: run length must be >= 1");
  }
  if (!runs_.empty() && runs_.back().dir == dir) {
    runs_.back().len += len;
  } else {
    runs_.push_back(Run{dir, len});
  }
}

void StepWord::append(const Run& r) {
  append(r.dir, r.len);
}

void StepWord::append(const StepWord& w) {
  for (const Run& r : w.runs_) {
    append(r);
  }
}

BigInt StepWord::letters() const {
  BigInt n = 0;
  for (const Run& r : runs_) {
    n += r.len;
  }
  return n;
}

std::string StepWord::str() const {
  std::string out;
  for (const Run& r : runs_) {
    if (!out.empty()) {
      out += ' ';
    }
    out += letter_of(r.dir);
    if (r.len > 1) {
      out += '^';
      out += r.len.get_str();
    }
  }
  return out;
}

bool StepWord::is_run_palindrome() const {
  std::size_t i = 0;
  std::size_t j = runs_.size();
  while (i + 1 < j) {
    if (runs_[i] != runs_[j - 1]) {
      return false;
    }
    ++i;
    --j;
  }
  return true;
}

StepWord StepWord::reversed_interchanged() const {
  StepWord out;
  for (auto it = runs_.rbegin(); it != runs_.rend(); ++it) {
    out.append(opposite(it->dir), it->len);
  }
  return out;
}

std::vector<StepDir> StepWord::expand(std::size_t cap) const {
  if (letters() > static_cast<unsigned long>(cap)) {
    throw std::length_error("StepWord::expand: word has more than " +
                            std::to_string(cap) + " letters");
  }
  std::vector<StepDir> out;
  for (const Run& r : runs_) {
    for (BigInt i = 0; i < r.len; ++i) {
      out.push_back(r.dir);
    }
  }
  return out;
}

}  // namespace pellwalk
