#include "tate/exterior.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tate {

namespace {

bool termLess(const ExteriorElement::Term& a, const ExteriorElement::Term& b) {
  return a.first < b.first;
}

} // namespace

ExteriorElement ExteriorElement::one(const ProductSpace& space) {
  return monomial(space, 0, 1);
}

ExteriorElement ExteriorElement::variable(const ProductSpace& space, std::size_t var) {
  if (var >= space.numVariables())
    throw std::out_of_range("exterior variable index out of range");
  return monomial(space, ExtMask{1} << var, 1);
}

ExteriorElement ExteriorElement::monomial(const ProductSpace& space, ExtMask m, Coeff c) {
  ExteriorElement e(space.exteriorDegree(m));
  c %= space.field().characteristic();
  if (c != 0)
    e.terms_.push_back({m, c});
  return e;
}

ExteriorElement ExteriorElement::wedgeOf(const ProductSpace& space,
                                         const std::vector<std::size_t>& vars) {
  ExteriorElement acc = one(space);
  for (std::size_t v : vars)
    acc = extMultiply(acc, variable(space, v), space.field());
  return acc;
}

Coeff ExteriorElement::coefficient(ExtMask m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, termLess);
  return (it != terms_.end() && it->first == m) ? it->second : 0;
}

void ExteriorElement::addTerm(ExtMask m, Coeff c, const PrimeField& field) {
  if (c == 0)
    return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, termLess);
  if (it != terms_.end() && it->first == m) {
    it->second = field.add(it->second, c);
    if (it->second == 0)
      terms_.erase(it);
  } else {
    terms_.insert(it, {m, c});
  }
}

ExteriorElement& ExteriorElement::addScaled(const ExteriorElement& o, Coeff c,
                                            const PrimeField& field) {
  if (degree_.size() == 0)
    degree_ = o.degree_;
  else if (!o.isZero() && !(o.degree_ == degree_))
    throw std::invalid_argument("adding exterior elements of different degrees");
  for (const auto& [m, v] : o.terms_)
    addTerm(m, field.mul(c, v), field);
  return *this;
}

ExteriorElement ExteriorElement::scaled(Coeff c, const PrimeField& field) const {
  ExteriorElement r(degree_);
  if (c == 0)
    return r;
  for (const auto& [m, v] : terms_)
    r.terms_.push_back({m, field.mul(c, v)});
  return r;
}

std::string ExteriorElement::toString(const ProductSpace& space) const {
  if (terms_.empty())
    return "0";
  std::string s;
  const auto& F = space.field();
  for (const auto& [m, c] : terms_) {
    std::int64_t v = F.lift(c);
    if (!s.empty())
      s += v < 0 ? " - " : " + ";
    else if (v < 0)
      s += "-";
    std::int64_t a = v < 0 ? -v : v;
    if (a != 1 || m == 0)
      s += std::to_string(a);
    bool first = (a == 1 && m != 0);
    for (std::size_t k = 0; k < space.numVariables(); ++k)
      if (m & (ExtMask{1} << k)) {
        if (!first)
          s += "*";
        first = false;
        std::size_t g = space.groupOf(k);
        s += "e_(" + std::to_string(g) + "," + std::to_string(k - space.groupOffset(g)) + ")";
      }
  }
  return s;
}

ExteriorElement extMultiply(const ExteriorElement& u, const ExteriorElement& v,
                            const PrimeField& field) {
  ExteriorElement r(u.degree() + v.degree());
  std::vector<ExteriorElement::Term> raw;
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mv, cv] : v.terms()) {
      if (mu & mv)
        continue;
      Coeff c = field.mul(cu, cv);
      if (wedgeSign(mu, mv) < 0)
        c = field.neg(c);
      raw.push_back({mu | mv, c});
    }
  std::sort(raw.begin(), raw.end(), termLess);
  for (std::size_t i = 0; i < raw.size();) {
    ExtMask m = raw[i].first;
    Coeff acc = 0;
    for (; i < raw.size() && raw[i].first == m; ++i)
      acc = field.add(acc, raw[i].second);
    if (acc != 0)
      r.addTerm(m, acc, field);
  }
  return r;
}

SparseMatrix multiplicationMatrixE(const ExteriorElement& g, const Multidegree& source,
                                   const ProductSpace& space) {
  const auto& F = space.field();
  const auto& src = space.exteriorBasis(source);
  Multidegree target = source + g.degree();
  const auto& tgt = space.exteriorBasis(target);
  SparseMatrix m(tgt.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    SparseVector v;
    for (const auto& [mg, c] : g.terms()) {
      if (mg & src[col])
        continue;
      Coeff val = wedgeSign(mg, src[col]) < 0 ? F.neg(c) : c;
      v.push_back({space.exteriorIndex(mg | src[col]), val});
    }
    canonicalize(v, F);
    m.setColumn(col, std::move(v));
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const ExteriorElement& e) {
  os << "[";
  for (const auto& [m, c] : e.terms())
    os << " " << c << "*" << m;
  return os << " ]";
}

} // namespace tate
