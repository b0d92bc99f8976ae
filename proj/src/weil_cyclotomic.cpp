#include <cassert>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "triality/weil.hpp"

namespace triality::weil {

namespace {

using Poly = std::vector<Int>;  // ascending coefficients

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; remainder must vanish.
Poly poly_div(Poly num, const Poly& den) {
  Poly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, 0);
  while (num.size() >= den.size()) {
    Int lead = num.back() / den.back();
    assert(lead * den.back() == num.back());
    std::size_t shift = num.size() - den.size();
    q[shift] = lead;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= lead * den[i];
    poly_trim(num);
    if (num.empty()) break;
  }
  assert(num.empty());
  return q;
}

Poly cyclotomic_poly(long m) {
  // x^m - 1 divided by the product of Phi_d over proper divisors d | m.
  Poly p(m + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    p = poly_div(std::move(p), cyclotomic_poly(d));
  }
  return p;
}

}  // namespace

CycField::CycField(long m) : m_(m) {
  if (m < 1) throw std::runtime_error("CycField: positive order expected");
  phi_ = cyclotomic_poly(m);
  std::size_t deg = phi_.size() - 1;
  // powers_[k] = zeta^k reduced, for k in [0, 2*deg) and [0, m).
  std::size_t need = std::max<std::size_t>(static_cast<std::size_t>(m), 2 * deg + 1);
  powers_.resize(need);
  std::vector<Rat> cur(deg, Rat(0));
  if (deg > 0) cur[0] = 1;  // zeta^0
  for (std::size_t k = 0; k < need; ++k) {
    powers_[k] = cur;
    // Multiply by zeta: shift and reduce by phi.
    std::vector<Rat> next(deg, Rat(0));
    Rat top = deg > 0 ? cur[deg - 1] : Rat(0);
    for (std::size_t i = deg; i-- > 1;) next[i] = cur[i - 1];
    if (deg > 0) next[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i) next[i] -= top * Rat(phi_[i]);
    cur = std::move(next);
  }
}

std::shared_ptr<const CycField> CycField::get(long m) {
  static std::map<long, std::shared_ptr<const CycField>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto f = std::shared_ptr<const CycField>(new CycField(m));
  cache.emplace(m, f);
  return f;
}

const std::vector<Rat>& CycField::power_reduced(long k) const {
  long r = k % m_;
  if (r < 0) r += m_;
  return powers_[static_cast<std::size_t>(r)];
}

Cyc Cyc::rational(std::shared_ptr<const CycField> f, const Rat& r) {
  Cyc c(std::move(f));
  if (!c.c_.empty()) c.c_[0] = r;
  else if (r != 0)
    throw std::runtime_error("Cyc: degenerate field");
  return c;
}

Cyc Cyc::zeta_pow(std::shared_ptr<const CycField> f, long k) {
  Cyc c(f);
  c.c_ = f->power_reduced(k);
  return c;
}

bool Cyc::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

bool Cyc::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rat Cyc::rational_part() const {
  if (!is_rational()) throw std::runtime_error("Cyc: not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

Cyc Cyc::operator+(const Cyc& o) const {
  Cyc r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyc Cyc::operator-(const Cyc& o) const {
  Cyc r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Cyc Cyc::operator*(const Cyc& o) const {
  std::size_t deg = c_.size();
  // Fast path: both operands are scaled basis powers (the common case in
  // monomial matrices and root-of-unity character values).
  long k1 = -1, k2 = -1;
  for (std::size_t i = 0; i < deg; ++i) {
    if (!c_[i].is_zero()) {
      if (k1 >= 0) { k1 = -2; break; }
      k1 = static_cast<long>(i);
    }
  }
  if (k1 == -1) return Cyc(f_);  // zero
  for (std::size_t i = 0; i < deg; ++i) {
    if (!o.c_[i].is_zero()) {
      if (k2 >= 0) { k2 = -2; break; }
      k2 = static_cast<long>(i);
    }
  }
  if (k2 == -1) return Cyc(f_);
  if (k1 >= 0 && k2 >= 0) {
    Rat scale = c_[static_cast<std::size_t>(k1)] * o.c_[static_cast<std::size_t>(k2)];
    const auto& red = f_->power_reduced(k1 + k2);
    Cyc r(f_);
    for (std::size_t i = 0; i < deg; ++i)
      if (!red[i].is_zero()) r.c_[i] = scale * red[i];
    return r;
  }
  if (k1 >= 0 || k2 >= 0) {
    // One factor is a scaled basis power: shift the other through the
    // reduction table (unit rows below the degree threshold).
    long k = k1 >= 0 ? k1 : k2;
    const Cyc& dense = k1 >= 0 ? o : *this;
    Rat scale = k1 >= 0 ? c_[static_cast<std::size_t>(k1)] : o.c_[static_cast<std::size_t>(k2)];
    Cyc r(f_);
    for (std::size_t j = 0; j < deg; ++j) {
      if (dense.c_[j].is_zero()) continue;
      Rat cj = scale * dense.c_[j];
      long kk = k + static_cast<long>(j);
      if (kk < static_cast<long>(deg)) {
        r.c_[static_cast<std::size_t>(kk)] += cj;
      } else {
        const auto& red = f_->power_reduced(kk);
        for (std::size_t i = 0; i < deg; ++i)
          if (!red[i].is_zero()) r.c_[i] += cj * red[i];
      }
    }
    return r;
  }
  std::vector<Rat> prod(2 * deg, Rat(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (o.c_[j].is_zero()) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  Cyc r(f_);
  for (std::size_t k = 0; k < 2 * deg; ++k) {
    if (prod[k].is_zero()) continue;
    if (k < deg) {
      r.c_[k] += prod[k];
    } else {
      const auto& red = f_->power_reduced(static_cast<long>(k));
      for (std::size_t i = 0; i < deg; ++i) r.c_[i] += prod[k] * red[i];
    }
  }
  return r;
}

Cyc Cyc::conj() const {
  // zeta^k -> zeta^{m-k}: rebuild through the power table.
  Cyc r(f_);
  std::size_t deg = c_.size();
  for (std::size_t k = 0; k < deg; ++k) {
    if (c_[k].is_zero()) continue;
    const auto& red = f_->power_reduced(-static_cast<long>(k));
    for (std::size_t i = 0; i < deg; ++i) r.c_[i] += c_[k] * red[i];
  }
  return r;
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw std::runtime_error("Cyc: inverse of zero");
  // Extended Euclid in Q[x] against the cyclotomic polynomial.
  using QP = std::vector<Rat>;
  auto trim = [](QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  auto divmod = [&](QP a, const QP& b, QP& q) {
    q.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
      Rat lead = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      q[shift] = lead;
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= lead * b[i];
      trim(a);
    }
    return a;
  };
  QP r0;
  for (const auto& v : f_->cyclotomic_polynomial()) r0.push_back(Rat(v));
  QP r1(c_.begin(), c_.end());
  trim(r1);
  QP s0{}, s1{Rat(1)};
  while (!r1.empty() && r1.size() > 1) {
    QP q;
    QP r2 = divmod(r0, r1, q);
    // s2 = s0 - q*s1
    QP qs(q.size() + s1.size(), Rat(0));
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    QP s2(std::max(s0.size(), qs.size()), Rat(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw std::runtime_error("Cyc: not invertible (zero divisor?)");
  // r1 is a nonzero constant c: inverse = s1 / c.
  Cyc out(f_);
  for (std::size_t i = 0; i < s1.size() && i < out.c_.size(); ++i) out.c_[i] = s1[i] / r1[0];
  // Reduce possible overflow degree (s1 may reach deg) via multiplication identity.
  Cyc check = (*this) * out;
  if (!(check == Cyc::rational(f_, 1))) throw std::runtime_error("Cyc: inverse failed");
  return out;
}

bool Cyc::operator==(const Cyc& o) const { return c_ == o.c_; }

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << rat_str(c_[i]);
    if (i > 0) os << "*z^" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace triality::weil
