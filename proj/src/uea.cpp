#include "solenoid/uea.hpp"

#include <algorithm>
#include <utility>

#include "solenoid/errors.hpp"

namespace solenoid {

UEAElement UEAElement::unit(int n) {
  UEAElement e(n);
  e.add(Word{}, Scalar(1));
  return e;
}

UEAElement UEAElement::generator(const LatticePoint& p, const Scalar& c) {
  UEAElement e(p.dim());
  e.add(Word{p}, c);
  return e;
}

Scalar UEAElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void UEAElement::add(const Word& sorted_word, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(sorted_word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

UEAElement UEAElement::operator-() const {
  UEAElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

UEAElement& UEAElement::operator+=(const UEAElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& rhs) { return *this += -rhs; }

UEAElement operator*(const Scalar& c, const UEAElement& x) {
  UEAElement r(x.n_);
  for (const auto& [w, v] : x.terms_) r.add(w, c * v);
  return r;
}

std::string UEAElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (w.empty()) {
      out += "*1";
    } else {
      for (const auto& p : w) out += "*E[" + p.str() + "]";
    }
  }
  return out;
}

UEAElement pbw_normalize(int n, const Word& word) {
  UEAElement result(n);
  // Worklist of pending (word, coefficient) pairs.  Each rewrite either
  // removes one lex inversion at fixed length or shortens the word, so
  // the loop terminates.
  std::vector<std::pair<Word, Scalar>> work;
  work.emplace_back(word, Scalar(1));
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    size_t i = 0;
    while (i + 1 < w.size() && !(w[i + 1] < w[i])) ++i;
    if (i + 1 >= w.size()) {
      result.add(w, c);
      continue;
    }
    Word swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    const Scalar factor = c * mu_dot(w[i + 1] - w[i]);
    Word merged;
    merged.reserve(w.size() - 1);
    merged.insert(merged.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    merged.push_back(w[i] + w[i + 1]);
    merged.insert(merged.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
    work.emplace_back(std::move(swapped), std::move(c));
    if (!factor.is_zero()) work.emplace_back(std::move(merged), factor);
  }
  return result;
}

UEAElement uea_mul(const UEAElement& a, const UEAElement& b) {
  UEAElement out(a.context());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word joined = wa;
      joined.insert(joined.end(), wb.begin(), wb.end());
      out += (ca * cb) * pbw_normalize(a.context(), joined);
    }
  }
  return out;
}

UEAElement anticommutator(const UEAElement& a, const UEAElement& b) {
  return uea_mul(a, b) + uea_mul(b, a);
}

UEAElement differentiator(int m, const LatticePoint& h, const LatticePoint& k,
                          const LatticePoint& s) {
  if (m < 0) throw InvalidOrder("differentiator order must be non-negative");
  const int n = h.dim();
  UEAElement out(n);
  for (int i = 0; i <= m; ++i) {
    const Rational coeff = (i % 2 == 0) ? binomial(m, i) : -binomial(m, i);
    const Word w{k - static_cast<std::int64_t>(i) * h, s + static_cast<std::int64_t>(i) * h};
    out += Scalar(coeff) * pbw_normalize(n, w);
  }
  return out;
}

OmegaIdentityReport verify_omega_identity(int r, const LatticePoint& k, const LatticePoint& s,
                                          const LatticePoint& p, const LatticePoint& q,
                                          const LatticePoint& h) {
  if (r < 2) throw InvalidOrder("the differentiator product identity requires order r >= 2");
  const int n = h.dim();

  UEAElement lhs(n);
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j <= r; ++j) {
      Rational coeff = binomial(r, i) * binomial(r, j);
      if ((i + j) % 2 == 1) coeff = -coeff;
      const auto ih = static_cast<std::int64_t>(i) * h;
      const auto jh = static_cast<std::int64_t>(j) * h;
      const UEAElement first = anticommutator(differentiator(r, h, k - ih, s - jh),
                                              differentiator(r, h, q + ih, p + jh));
      const UEAElement second = anticommutator(differentiator(r, h, k - ih, q - jh),
                                               differentiator(r, h, s + ih, p + jh));
      lhs += Scalar(coeff) * (first - second);
    }
  }

  const LatticePoint two_rh = static_cast<std::int64_t>(2 * r) * h;
  const Scalar factor = mu_dot(q - s) * mu_dot(p - k + two_rh);
  const UEAElement rhs = factor * differentiator(4 * r, h, k + p + two_rh, s + q - two_rh);

  OmegaIdentityReport report;
  report.equal = (lhs == rhs);
  report.lhs_terms = lhs.size();
  report.rhs_terms = rhs.size();
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  return report;
}

}  // namespace solenoid
