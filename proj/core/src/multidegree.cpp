#include "tate/multidegree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace tate {

int Multidegree::total() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool Multidegree::isZero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

Multidegree& Multidegree::operator+=(const Multidegree& o) {
  if (o.size() != size())
    throw std::invalid_argument("multidegree length mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] += o.c_[i];
  return *this;
}

Multidegree& Multidegree::operator-=(const Multidegree& o) {
  if (o.size() != size())
    throw std::invalid_argument("multidegree length mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] -= o.c_[i];
  return *this;
}

Multidegree operator-(Multidegree a) {
  for (auto& x : a.c_)
    x = -x;
  return a;
}

std::string Multidegree::toString() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

bool leq(const Multidegree& a, const Multidegree& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("multidegree length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

Multidegree componentwiseMax(const Multidegree& a, const Multidegree& b) {
  Multidegree r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = std::max(a[i], b[i]);
  return r;
}

Multidegree componentwiseMin(const Multidegree& a, const Multidegree& b) {
  Multidegree r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = std::min(a[i], b[i]);
  return r;
}

std::vector<Multidegree> degreeBox(const Multidegree& low, const Multidegree& high) {
  std::vector<Multidegree> out;
  if (low.size() != high.size() || !leq(low, high))
    return out;
  Multidegree d = low;
  const std::size_t t = low.size();
  while (true) {
    out.push_back(d);
    std::size_t i = t;
    while (i > 0) {
      --i;
      if (d[i] < high[i]) {
        ++d[i];
        break;
      }
      d[i] = low[i];
      if (i == 0)
        return out;
    }
    if (t == 0)
      return out;
  }
}

Multidegree parseMultidegree(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw std::invalid_argument("malformed multidegree '" + std::string(text) + "'");
    values.push_back(v);
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return Multidegree(std::move(values));
}

std::ostream& operator<<(std::ostream& os, const Multidegree& d) {
  return os << d.toString();
}

} // namespace tate
