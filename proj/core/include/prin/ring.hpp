#ifndef PRIN_RING_HPP
#define PRIN_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace prin {

// An ordered list of variable names. Rings are compared by content, so a
// renamed or restricted ring is a genuinely different ring.
class Ring {
public:
  explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {}

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  // Index of a declared variable, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return npos;
  }

  bool operator==(const Ring& other) const { return names_ == other.names_; }
  bool operator!=(const Ring& other) const { return !(*this == other); }

private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const Ring>(std::move(names));
}

// Exponent vector, one entry per ring variable.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exp) : exp_(std::move(exp)) {}

  std::size_t nvars() const { return exp_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exp_[i]; }

  long degree() const {
    long d = 0;
    for (auto e : exp_) d += e;
    return d;
  }

  bool is_one() const {
    for (auto e : exp_)
      if (e) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += o.exp_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < exp_.size(); ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }

  // Quotient o / *this; caller ensures divisibility.
  Monomial quotient_of(const Monomial& o) const {
    Monomial r(o);
    for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] -= exp_[i];
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exp_.size(); ++i)
      if (o.exp_[i] > r.exp_[i]) r.exp_[i] = o.exp_[i];
    return r;
  }

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }

  const std::vector<std::uint32_t>& exponents() const { return exp_; }

private:
  std::vector<std::uint32_t> exp_;
};

// Graded reverse lexicographic, x_0 > x_1 > ... First by total degree, then
// the last position where the exponents differ decides: smaller exponent
// there wins.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  long da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_cmp(a, b) > 0;
  }
};

} // namespace prin

#endif
