#include "descpoly/descent_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace descpoly {

DescentSet::DescentSet(std::vector<int> elements) : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1) throw std::invalid_argument("descent set entries must be >= 1");
    if (i > 0 && elements_[i] <= elements_[i - 1])
      throw std::invalid_argument("descent set entries must be strictly increasing");
  }
}

DescentSet DescentSet::parse(std::string_view text) {
  std::vector<int> elems;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    const std::string tok(text.substr(pos, next - pos));
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad descent set encoding: '" + std::string(text) + "'");
    }
    if (used != tok.size())
      throw std::invalid_argument("bad descent set encoding: '" + std::string(text) + "'");
    elems.push_back(value);
    pos = next + 1;
    if (pos == text.size() && next != text.size())
      throw std::invalid_argument("trailing comma in descent set encoding");
  }
  return DescentSet(std::move(elems));
}

std::string DescentSet::encode() const {
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

int DescentSet::at(int t) const {
  if (t < 1 || t > size()) throw std::out_of_range("descent set index out of range");
  return elements_[t - 1];
}

bool DescentSet::contains(int x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

DescentSet DescentSet::minus_last() const {
  if (empty()) throw std::invalid_argument("minus_last of empty set");
  return DescentSet(std::vector<int>(elements_.begin(), elements_.end() - 1));
}

DescentSet DescentSet::shifted(int t) const {
  if (empty()) throw std::invalid_argument("shifted of empty set");
  if (t < 1 || t > size()) throw std::out_of_range("shifted: index out of range");
  std::vector<int> out;
  for (int j = 0; j < t - 1; ++j) out.push_back(elements_[j]);
  for (int j = t - 1; j < size(); ++j)
    if (elements_[j] - 1 > 0) out.push_back(elements_[j] - 1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return DescentSet(std::move(out));
}

DescentSet DescentSet::drop_shifted(int t) const {
  if (empty()) throw std::invalid_argument("drop_shifted of empty set");
  if (t < 1 || t > size()) throw std::out_of_range("drop_shifted: index out of range");
  std::vector<int> out;
  for (int j = 0; j < t - 1; ++j) out.push_back(elements_[j]);
  for (int j = t; j < size(); ++j) out.push_back(elements_[j] - 1);
  return DescentSet(std::move(out));
}

DescentSet DescentSet::prime() const {
  std::vector<int> out;
  for (int e : elements_)
    if (!contains(e - 1)) out.push_back(e);
  return DescentSet(std::move(out));
}

DescentSet DescentSet::double_prime() const {
  const DescentSet p = prime();
  std::vector<int> out;
  for (int e : p.elements())
    if (e != 1) out.push_back(e);
  return DescentSet(std::move(out));
}

DescentSet DescentSet::complement() const {
  std::vector<int> out;
  for (int x = 1; x <= m(); ++x)
    if (!contains(x)) out.push_back(x);
  return DescentSet(std::move(out));
}

DescentSet DescentSet::extended(int t) const {
  if (t < 0) throw std::invalid_argument("extended: negative run length");
  std::vector<int> out = elements_;
  for (int j = 1; j <= t; ++j) out.push_back(m() + j);
  return DescentSet(std::move(out));
}

std::vector<DescentSet> all_descent_sets(int max_m) {
  std::vector<DescentSet> out;
  for (int m = 1; m <= max_m; ++m) {
    // Subsets of [1, m-1], each together with the forced maximum m.
    const int bits = m - 1;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
      std::vector<int> elems;
      for (int b = 0; b < bits; ++b)
        if (mask & (1u << b)) elems.push_back(b + 1);
      elems.push_back(m);
      out.emplace_back(std::move(elems));
    }
  }
  std::sort(out.begin(), out.end(), [](const DescentSet& a, const DescentSet& b) {
    if (a.m() != b.m()) return a.m() < b.m();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace descpoly
