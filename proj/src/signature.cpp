/*
 * Copyright 2026 The propr Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "propr/signature.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "propr/errors.hpp"

namespace propr {

std::string signature_to_string(const StarSignature& s) {
  std::map<int, std::size_t> counts;
  for (int j : s.sizes()) ++counts[j];
  std::string out;
  for (const auto& [j, m] : counts) {
    if (!out.empty()) out += ' ';
    out += 'S';
    out += std::to_string(j);
    if (m > 1) {
      out += '^';
      out += std::to_string(m);
    }
  }
  return out;
}

namespace {

class SignatureParser {
 public:
  explicit SignatureParser(std::string_view text) : text_(text) {}

  std::vector<int> parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty signature", pos_);
    std::vector<int> out = product();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  bool at_factor_start() const { return at('S') || at('s') || at('('); }

  std::vector<int> product() {
    std::vector<int> out;
    if (!at_factor_start()) fail("expected S<j> or '('");
    while (at_factor_start()) {
      std::vector<int> f = factor();
      out.insert(out.end(), f.begin(), f.end());
      skip_space();
    }
    return out;
  }

  std::vector<int> factor() {
    std::vector<int> base;
    if (at('(')) {
      ++pos_;
      skip_space();
      base = product();
      if (!at(')')) fail("expected ')'");
      ++pos_;
    } else {
      ++pos_;  // 'S'
      if (at('_')) ++pos_;
      bool negative = false;
      if (at('-')) {
        negative = true;
        ++pos_;
      }
      const long j = integer();
      if (negative && j != 1) fail("star size must be at least -1");
      base.push_back(negative ? -1 : static_cast<int>(j));
    }
    skip_space();
    if (!at('^')) return base;
    ++pos_;
    skip_space();
    if (at('-')) fail("negative exponent");
    const long m = integer();
    std::vector<int> out;
    out.reserve(base.size() * static_cast<std::size_t>(m));
    for (long r = 0; r < m; ++r) out.insert(out.end(), base.begin(), base.end());
    return out;
  }

  long integer() {
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

StarSignature parse_signature(std::string_view text) {
  return StarSignature(SignatureParser(text).parse());
}

}  // namespace propr
