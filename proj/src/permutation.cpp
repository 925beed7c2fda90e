// SPDX-License-Identifier: Apache-2.0
#include "killing/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "killing/errors.hpp"

namespace killing {

Permutation::Permutation(std::size_t d) : images_(d) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size() || seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidArgument("permutation images are not a bijection of 1..d");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t d) {
  Permutation p(d);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (text.substr(pos) == "e" || pos == text.size()) return p;
  while (pos < text.size()) {
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '(') throw InvalidArgument("expected '(' in cycle notation");
    const auto close = text.find(')', pos);
    if (close == std::string_view::npos) throw InvalidArgument("unterminated cycle");
    std::string_view body = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    const bool separated = body.find_first_of(" ,") != std::string_view::npos;
    std::vector<int> cycle;
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] == ' ' || body[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(body[i]))) throw InvalidArgument("bad label in cycle");
      std::size_t j = i + 1;
      if (separated) {
        while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
      }
      cycle.push_back(std::stoi(std::string(body.substr(i, j - i))));
      i = j;
    }
    std::vector<bool> used(d, false);
    Permutation c(d);
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int label = cycle[k];
      if (label < 1 || static_cast<std::size_t>(label) > d || used[static_cast<std::size_t>(label - 1)]) {
        throw InvalidArgument("cycle label out of range or repeated");
      }
      used[static_cast<std::size_t>(label - 1)] = true;
      c.images_[static_cast<std::size_t>(label - 1)] = cycle[(k + 1) % cycle.size()];
    }
    // Products of cycles are read right to left, as function composition.
    p = p * c;
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    r.images_[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
  }
  return r;
}

int Permutation::sign() const {
  std::vector<bool> seen(images_.size(), false);
  int s = 1;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (seen[k]) continue;
    std::size_t len = 0;
    for (std::size_t j = k; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k + 1)) return false;
  }
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  const bool wide = images_.size() > 9;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (seen[k] || images_[k] == static_cast<int>(k + 1)) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = k; !seen[j]; j = static_cast<std::size_t>(images_[j] - 1)) {
      seen[j] = true;
      if (!first && wide) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("composing permutations of different degree");
  Permutation r(a.degree());
  for (std::size_t k = 0; k < a.degree(); ++k) r.images_[k] = a.images_[static_cast<std::size_t>(b.images_[k] - 1)];
  return r;
}

std::vector<Permutation> all_permutations(std::size_t d) {
  std::vector<Permutation> out;
  std::vector<int> images(d);
  std::iota(images.begin(), images.end(), 1);
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace killing
