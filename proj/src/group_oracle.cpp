#include "kerovkit/group_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kerovkit {

namespace {

void check_degree(int q)
{
  if (q < 0 || q > kMaxDegree) throw std::invalid_argument("degree must lie in 0.." + std::to_string(kMaxDegree));
}

std::uint32_t mask_of(int x) { return std::uint32_t{1} << (x - 1); }

}  // namespace

PartialPerm::PartialPerm(int q) : q_(q)
{
  check_degree(q);
  for (int x = 1; x <= q; ++x) perm_[static_cast<std::size_t>(x - 1)] = static_cast<std::uint8_t>(x);
}

PartialPerm::PartialPerm(const std::vector<int>& perm, const std::vector<int>& support) : PartialPerm(static_cast<int>(perm.size()))
{
  std::vector<bool> hit(static_cast<std::size_t>(q_ + 1), false);
  for (int x : support) {
    if (x < 1 || x > q_) throw std::invalid_argument("support point out of range");
    support_ |= mask_of(x);
  }
  for (int x = 1; x <= q_; ++x) {
    const int y = perm[static_cast<std::size_t>(x - 1)];
    if (y < 1 || y > q_ || hit[static_cast<std::size_t>(y)]) throw std::invalid_argument("not a permutation");
    hit[static_cast<std::size_t>(y)] = true;
    if (y != x && !in_support(x)) throw std::invalid_argument("permutation moves a point outside the support");
    perm_[static_cast<std::size_t>(x - 1)] = static_cast<std::uint8_t>(y);
  }
}

std::vector<int> PartialPerm::support() const
{
  std::vector<int> out;
  for (int x = 1; x <= q_; ++x)
    if (in_support(x)) out.push_back(x);
  return out;
}

std::vector<int> PartialPerm::one_line() const { return std::vector<int>(perm_.begin(), perm_.begin() + q_); }

PartialPerm PartialPerm::inverse() const
{
  PartialPerm out(*this);
  for (int x = 1; x <= q_; ++x) out.perm_[static_cast<std::size_t>((*this)(x) - 1)] = static_cast<std::uint8_t>(x);
  return out;
}

std::vector<int> PartialPerm::cycle_type() const
{
  std::vector<int> out;
  std::uint32_t seen = 0;
  for (int x = 1; x <= q_; ++x) {
    if (!in_support(x) || (seen & mask_of(x))) continue;
    int len = 0;
    for (int y = x; !(seen & mask_of(y)); y = (*this)(y)) {
      seen |= mask_of(y);
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

PartialPerm operator*(const PartialPerm& a, const PartialPerm& b)
{
  if (a.q_ != b.q_) throw std::invalid_argument("multiplying partial permutations of different degrees");
  PartialPerm out(a.q_);
  out.support_ = a.support_ | b.support_;
  for (int x = 1; x <= a.q_; ++x) out.perm_[static_cast<std::size_t>(x - 1)] = static_cast<std::uint8_t>(a(b(x)));
  return out;
}

std::size_t PartialPermHash::operator()(const PartialPerm& p) const
{
  std::uint64_t lo = 0, hi = 0;
  std::memcpy(&lo, p.perm_.data(), 8);
  std::memcpy(&hi, p.perm_.data() + 8, 8);
  std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL;
  h ^= hi + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
  h ^= (static_cast<std::uint64_t>(p.support_) << 5) + static_cast<std::uint64_t>(p.q_);
  return static_cast<std::size_t>(h * 0xbf58476d1ce4e5b9ULL);
}

std::string to_string(const PartialPerm& p)
{
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree() + 1), false);
  for (int x : p.support()) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    out += '(';
    for (int y = x; !seen[static_cast<std::size_t>(y)]; y = p(y)) {
      if (y != x) out += ',';
      out += std::to_string(y);
      seen[static_cast<std::size_t>(y)] = true;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Rational AlgebraElement::coefficient(const PartialPerm& p) const
{
  const auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(const PartialPerm& p, const Rational& coefficient)
{
  if (p.degree() != q_) throw std::invalid_argument("term has the wrong degree");
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(p, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) terms_.erase(it);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other)
{
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other)
{
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coeff] : terms_) coeff *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b)
{
  if (a.q_ != b.q_) throw std::invalid_argument("multiplying elements of different degrees");
  AlgebraElement out(a.q_);
  for (const auto& [pa, ca] : a.terms_)
    for (const auto& [pb, cb] : b.terms_) out.add(pa * pb, ca * cb);
  return out;
}

GroupElement project(const AlgebraElement& e)
{
  GroupElement out;
  for (const auto& [p, c] : e.terms()) {
    auto& slot = out[p.one_line()];
    slot += c;
  }
  std::erase_if(out, [](const auto& entry) { return entry.second == 0; });
  return out;
}

AlgebraElement theta(const AlgebraElement& e, std::span<const int> a)
{
  const int q = e.degree();
  std::vector<int> label(static_cast<std::size_t>(q + 1), 0);
  std::uint32_t inside = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1 || a[i] > q || (i && a[i] <= a[i - 1])) throw std::invalid_argument("theta needs a sorted subset of {1..q}");
    label[static_cast<std::size_t>(a[i])] = static_cast<int>(i) + 1;
    inside |= mask_of(a[i]);
  }
  const int m = static_cast<int>(a.size());
  AlgebraElement out(m);
  for (const auto& [p, c] : e.terms()) {
    if (p.support_mask() & ~inside) continue;
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::vector<int> support;
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = label[static_cast<std::size_t>(p(a[static_cast<std::size_t>(i)]))];
    for (int x : p.support()) support.push_back(label[static_cast<std::size_t>(x)]);
    out.add(PartialPerm(perm, support), c);
  }
  return out;
}

AlgebraElement sigma_expand(const SigmaSymbol& s, int q)
{
  check_degree(q);
  AlgebraElement out(q);
  const int w = s.weight();
  if (w > q) return out;
  std::vector<int> filling;
  std::vector<bool> used(static_cast<std::size_t>(q + 1), false);
  std::function<void()> rec = [&]() {
    if (static_cast<int>(filling.size()) == w) {
      std::vector<int> perm(static_cast<std::size_t>(q));
      std::iota(perm.begin(), perm.end(), 1);
      std::size_t pos = 0;
      for (int k : s.ks()) {
        for (int i = 0; i < k; ++i)
          perm[static_cast<std::size_t>(filling[pos + static_cast<std::size_t>(i)] - 1)] = filling[pos + static_cast<std::size_t>((i + 1) % k)];
        pos += static_cast<std::size_t>(k);
      }
      out.add(PartialPerm(perm, filling), 1);
      return;
    }
    for (int x = 1; x <= q; ++x) {
      if (used[static_cast<std::size_t>(x)]) continue;
      used[static_cast<std::size_t>(x)] = true;
      filling.push_back(x);
      rec();
      filling.pop_back();
      used[static_cast<std::size_t>(x)] = false;
    }
  };
  rec();
  return out;
}

AlgebraElement sigma_expand(const SigmaCombo& c, int q)
{
  AlgebraElement out(q);
  for (const auto& [s, coeff] : c.terms()) out += sigma_expand(s, q) * coeff;
  return out;
}

AlgebraElement jm_power_expectation(int k, int q)
{
  check_degree(q);
  if (k < 0) throw std::invalid_argument("negative power");
  AlgebraElement out(q);
  if (k > 0 && q == 0) return out;
  std::vector<int> a(static_cast<std::size_t>(k), 1);
  // points 0..q with 0 the distinguished point
  std::vector<int> image(static_cast<std::size_t>(q + 1));
  while (true) {
    std::iota(image.begin(), image.end(), 0);
    // apply (a_k *) first, (a_1 *) last
    for (int i = k - 1; i >= 0; --i) {
      const int t = a[static_cast<std::size_t>(i)];
      for (auto& y : image) {
        if (y == 0) y = t;
        else if (y == t) y = 0;
      }
    }
    if (image[0] == 0) {
      std::vector<int> perm(image.begin() + 1, image.end());
      out.add(PartialPerm(perm, a), 1);
    }
    int pos = k - 1;
    while (pos >= 0 && a[static_cast<std::size_t>(pos)] == q) a[static_cast<std::size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++a[static_cast<std::size_t>(pos)];
  }
  return out;
}

Integer sigma_multiplicity(const SigmaSymbol& s)
{
  Integer z = 1;
  std::map<int, int> mult;
  for (int k : s.ks()) {
    z *= k;
    ++mult[k];
  }
  for (const auto& [k, m] : mult) z *= factorial(m);
  return z;
}

namespace {

PartialPerm representative(const SigmaSymbol& s, int q)
{
  std::vector<int> perm(static_cast<std::size_t>(q));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> support;
  int start = 1;
  for (int k : s.ks()) {
    for (int i = 0; i < k; ++i) {
      perm[static_cast<std::size_t>(start + i - 1)] = start + (i + 1) % k;
      support.push_back(start + i);
    }
    start += k;
  }
  return PartialPerm(perm, support);
}

void for_each_symbol_up_to(int q, const std::function<void(const SigmaSymbol&)>& visit)
{
  for (int w = 0; w <= q; ++w)
    for (const auto& d : young_diagrams(w)) visit(SigmaSymbol(d.rows));
}

}  // namespace

SigmaCombo decompose_sigma_basis(const AlgebraElement& e)
{
  const int q = e.degree();
  std::map<SigmaSymbol, std::pair<Rational, Integer>> classes;  // coefficient, members seen
  for (const auto& [p, c] : e.terms()) {
    const SigmaSymbol s(p.cycle_type());
    auto [it, inserted] = classes.try_emplace(s, c, 0);
    if (!inserted && it->second.first != c) throw std::invalid_argument("element is not central: coefficients differ within " + to_string(s));
    ++it->second.second;
  }
  SigmaCombo out;
  for (const auto& [s, entry] : classes) {
    const int w = s.weight();
    const Integer class_size = binomial(q, w) * factorial(w) / sigma_multiplicity(s);
    if (entry.second != class_size) throw std::invalid_argument("element is not central: class " + to_string(s) + " is incomplete");
    out.add(s, entry.first / Rational(sigma_multiplicity(s)));
  }
  // residual check
  if (!(sigma_expand(out, q) == e)) throw std::logic_error("nonzero residual in Sigma decomposition");
  return out;
}

SigmaCombo central_product(const AlgebraElement& a, const AlgebraElement& b)
{
  const int q = a.degree();
  if (b.degree() != q) throw std::invalid_argument("multiplying elements of different degrees");
  SigmaCombo out;
  for_each_symbol_up_to(q, [&](const SigmaSymbol& s) {
    const PartialPerm g = representative(s, q);
    const std::uint32_t full = g.support_mask();
    Rational total = 0;
    for (const auto& [h, ch] : a.terms()) {
      const std::uint32_t dh = h.support_mask();
      if (dh & ~full) continue;
      const PartialPerm k = h.inverse() * g;
      std::uint32_t moved = 0;
      for (int x = 1; x <= q; ++x)
        if (k(x) != x) moved |= mask_of(x);
      const std::uint32_t forced = (full & ~dh) | moved;
      const std::uint32_t free = full & ~forced;
      const auto perm = k.one_line();
      // every subset of the free points may be added to the support of the b-term
      for (std::uint32_t extra = free;; extra = (extra - 1) & free) {
        std::vector<int> support;
        const std::uint32_t t = forced | extra;
        for (int x = 1; x <= q; ++x)
          if (t & mask_of(x)) support.push_back(x);
        total += ch * b.coefficient(PartialPerm(perm, support));
        if (extra == 0) break;
      }
    }
    out.add(s, total / Rational(sigma_multiplicity(s)));
  });
  return out;
}

YoungDiagram::YoungDiagram(std::vector<int> r) : rows(std::move(r))
{
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i] < 1 || (i && rows[i] > rows[i - 1])) throw std::invalid_argument("Young diagram rows must be positive and weakly decreasing");
}

int YoungDiagram::size() const { return std::accumulate(rows.begin(), rows.end(), 0); }

std::string to_string(const YoungDiagram& lambda)
{
  std::string out;
  for (std::size_t i = 0; i < lambda.rows.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda.rows[i]);
  }
  return out;
}

std::vector<YoungDiagram> young_diagrams(int q)
{
  std::vector<YoungDiagram> out;
  std::vector<int> rows;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(rows);
      return;
    }
    for (int r = std::min(left, cap); r >= 1; --r) {
      rows.push_back(r);
      rec(left - r, r);
      rows.pop_back();
    }
  };
  rec(q, q);
  return out;
}

namespace {

// beta numbers lambda_i + (l - i), as a sorted set
Integer mn_recursive(std::vector<int> beta, std::span<const int> parts, std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo, std::size_t depth)
{
  if (depth == parts.size()) return 1;
  const auto key = std::pair(beta, depth);
  if (const auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = parts[depth];
  Integer total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int from = beta[i];
    const int to = from - r;
    if (to < 0 || std::binary_search(beta.begin(), beta.end(), to)) continue;
    int between = 0;
    for (int b : beta)
      if (b > to && b < from) ++between;
    auto next = beta;
    next[i] = to;
    std::sort(next.begin(), next.end());
    const Integer sub = mn_recursive(next, parts, memo, depth + 1);
    total += between % 2 ? Integer(-sub) : sub;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

Integer character(const YoungDiagram& lambda, std::span<const int> cycle_type)
{
  std::vector<int> parts(cycle_type.begin(), cycle_type.end());
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("cycle lengths must be positive");
  if (std::accumulate(parts.begin(), parts.end(), 0) != lambda.size())
    throw std::invalid_argument("cycle type size does not match the diagram");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  const int l = static_cast<int>(lambda.rows.size());
  std::vector<int> beta;
  for (int i = 0; i < l; ++i) beta.push_back(lambda.rows[static_cast<std::size_t>(i)] + (l - 1 - i));
  std::sort(beta.begin(), beta.end());
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
  return mn_recursive(beta, parts, memo, 0);
}

Integer hook_length_dimension(const YoungDiagram& lambda)
{
  const auto& rows = lambda.rows;
  Integer hooks = 1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < rows[i]; ++j) {
      int below = 0;
      for (std::size_t k = i + 1; k < rows.size() && rows[k] > j; ++k) ++below;
      hooks *= rows[i] - j + below;
    }
  return factorial(lambda.size()) / hooks;
}

Rational central_value(const SigmaSymbol& s, const YoungDiagram& lambda)
{
  const int q = lambda.size();
  const int w = s.weight();
  if (w > q) return 0;
  std::vector<int> type = s.ks();
  type.insert(type.end(), static_cast<std::size_t>(q - w), 1);
  const std::vector<int> identity(static_cast<std::size_t>(q), 1);
  return ratio(falling_factorial(q, w) * character(lambda, type), character(lambda, identity));
}

Rational central_value(const SigmaCombo& c, const YoungDiagram& lambda)
{
  Rational total = 0;
  for (const auto& [s, coeff] : c.terms()) total += coeff * central_value(s, lambda);
  total.canonicalize();
  return total;
}

Rational normalized_trace(const GroupElement& e, const YoungDiagram& lambda)
{
  const int q = lambda.size();
  const std::vector<int> identity(static_cast<std::size_t>(q), 1);
  const Integer dim = character(lambda, identity);
  Rational total = 0;
  for (const auto& [perm, c] : e) {
    if (static_cast<int>(perm.size()) != q) throw std::invalid_argument("permutation degree does not match the diagram");
    std::vector<int> type;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t x = 0; x < perm.size(); ++x) {
      if (seen[x]) continue;
      int len = 0;
      for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(perm[y] - 1)) {
        seen[y] = true;
        ++len;
      }
      type.push_back(len);
    }
    total += c * ratio(character(lambda, type), dim);
  }
  total.canonicalize();
  return total;
}

Interlacing interlacing(const YoungDiagram& lambda)
{
  Interlacing out;
  const auto& rows = lambda.rows;
  const int l = static_cast<int>(rows.size());
  auto row = [&](int i) { return i < l ? rows[static_cast<std::size_t>(i)] : 0; };
  for (int i = 0; i <= l; ++i) {
    // addable box at (i, row(i)) when the row above is longer
    if (i == 0 || row(i - 1) > row(i)) out.minima.push_back(row(i) - i);
    // removable box at the end of row i when the row below is shorter
    if (i < l && row(i + 1) < row(i)) out.maxima.push_back(row(i) - 1 - i);
  }
  std::sort(out.minima.begin(), out.minima.end());
  std::sort(out.maxima.begin(), out.maxima.end());
  return out;
}

AtomicMeasure transition_measure(const YoungDiagram& lambda)
{
  const auto [x, y] = interlacing(lambda);
  AtomicMeasure mu;
  for (std::size_t k = 0; k < x.size(); ++k) {
    Rational w = 1;
    for (int yi : y) w *= x[k] - yi;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (i != k) w /= x[k] - x[i];
    w.canonicalize();
    mu.atoms.emplace_back(Rational(x[k]), w);
  }
  return mu;
}

std::vector<Rational> measure_moments(const AtomicMeasure& mu, int upto)
{
  if (upto < 0) throw std::invalid_argument("negative moment order");
  std::vector<Rational> out(static_cast<std::size_t>(upto + 1), Rational(0));
  for (const auto& [x, w] : mu.atoms) {
    Rational power = 1;
    for (int i = 0; i <= upto; ++i) {
      out[static_cast<std::size_t>(i)] += w * power;
      power *= x;
    }
  }
  for (auto& m : out) m.canonicalize();
  return out;
}

AtomicMeasure dilate(const AtomicMeasure& mu, const Rational& p)
{
  if (p == 0) throw std::invalid_argument("dilation by zero");
  AtomicMeasure out;
  for (const auto& [x, w] : mu.atoms) out.atoms.emplace_back(Rational(x * p), w);
  std::sort(out.atoms.begin(), out.atoms.end());
  return out;
}

}  // namespace kerovkit
