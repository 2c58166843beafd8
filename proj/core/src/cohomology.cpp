#include "tate/cohomology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tate {

EulerPolynomial::EulerPolynomial(std::vector<std::uint64_t> coefficients)
    : c_(std::move(coefficients)) {
  trim();
}

void EulerPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

void EulerPolynomial::add(std::size_t i, std::uint64_t amount) {
  if (amount == 0)
    return;
  if (c_.size() <= i)
    c_.resize(i + 1, 0);
  c_[i] += amount;
}

std::size_t EulerPolynomial::termCount() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(),
                                                [](std::uint64_t x) { return x != 0; }));
}

EulerPolynomial operator*(const EulerPolynomial& a, const EulerPolynomial& b) {
  if (a.isZero() || b.isZero())
    return {};
  std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return EulerPolynomial(std::move(c));
}

std::string EulerPolynomial::toString() const {
  if (c_.empty())
    return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    if (!s.empty())
      s += "+";
    if (i == 0 || c_[i] != 1)
      s += std::to_string(c_[i]);
    if (i >= 1)
      s += "h";
    if (i >= 2)
      s += std::to_string(i);
  }
  return s;
}

const EulerPolynomial& CohomologyTable::at(const Multidegree& a) const {
  auto it = entries.find(a);
  if (it == entries.end())
    throw std::out_of_range("degree " + a.toString() + " is outside the table");
  return it->second;
}

CohomologyTable decodeCohomology(const LabeledFreeComplex& window, const Multidegree& low,
                                 const Multidegree& high) {
  CohomologyTable table{low, high, {}};
  for (const auto& a : degreeBox(low, high))
    table.entries[a];
  for (const auto& [d, term] : window.terms())
    for (const auto& s : term) {
      if (s.padding || !leq(low, s.label) || !leq(s.label, high))
        continue;
      int i = d - s.label.total();
      if (i < 0)
        throw std::logic_error("summand below its cohomological anchor");
      table.entries[s.label].add(static_cast<std::size_t>(i), 1);
    }
  return table;
}

CohomologyTable eulerPolynomialTable(const PresentedModule& m, const Multidegree& low,
                                     const Multidegree& high, TateOptions opts) {
  return decodeCohomology(tateResolution(m, low, high, opts), low, high);
}

std::string cohomologyMatrix(const CohomologyTable& table) {
  if (table.low.size() != 2)
    throw std::invalid_argument("cohomologyMatrix needs a product of two projective spaces");
  const int lo1 = table.low[0], hi1 = table.high[0];
  const int lo2 = table.low[1], hi2 = table.high[1];
  std::vector<std::vector<std::string>> cells;
  for (int j = hi2; j >= lo2; --j) {
    std::vector<std::string> row;
    for (int i = lo1; i <= hi1; ++i)
      row.push_back(table.at(Multidegree{i, j}).toString());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(hi1 - lo1 + 1), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    os << "|";
    for (std::size_t c = 0; c < row.size(); ++c)
      os << " " << row[c] << std::string(width[c] - row[c].size(), ' ');
    os << " |\n";
  }
  return os.str();
}

std::string cohomologyMatrix(const PresentedModule& m, const Multidegree& low,
                             const Multidegree& high, TateOptions opts) {
  if (m.space().factors() != 2)
    throw std::invalid_argument("cohomologyMatrix needs a product of two projective spaces");
  return cohomologyMatrix(eulerPolynomialTable(m, low, high, opts));
}

EulerPolynomial kunnethLineBundle(const std::vector<int>& dims, const Multidegree& a) {
  if (dims.size() != a.size())
    throw std::invalid_argument("kunnethLineBundle: degree has wrong length");
  EulerPolynomial acc({1});
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const int n = dims[i];
    std::vector<std::uint64_t> f;
    if (a[i] >= 0)
      f = {binomial(a[i] + n, n)};
    else if (a[i] <= -n - 1) {
      f.assign(static_cast<std::size_t>(n) + 1, 0);
      f[static_cast<std::size_t>(n)] = binomial(-a[i] - 1, n);
    }
    acc = acc * EulerPolynomial(std::move(f));
  }
  return acc;
}

} // namespace tate
