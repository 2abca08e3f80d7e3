#pragma once

// Moment <-> free cumulant transforms over the lattice of non-crossing
// partitions, for any commutative coefficient type T supporting T + T,
// T * T and T * Rational.

#include "kerovkit/rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace kerovkit {

/// Entries indexed 1..N.
template <class T>
class ValueSequence {
public:
  ValueSequence() = default;
  explicit ValueSequence(std::vector<T> entries) : entries_(std::move(entries)) {}

  int size() const { return static_cast<int>(entries_.size()); }
  const T& operator[](int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
  T& operator[](int i) { return entries_.at(static_cast<std::size_t>(i - 1)); }
  void push_back(T value) { entries_.push_back(std::move(value)); }
  const std::vector<T>& entries() const { return entries_; }

  bool operator==(const ValueSequence&) const = default;

private:
  std::vector<T> entries_;
};

/// Sorted block sizes of a non-crossing partition with the summed coefficients
/// of all partitions of that shape.
struct NcShape {
  std::vector<int> block_sizes;
  Integer count;          // number of non-crossing partitions of this shape
  Integer moebius_total;  // sum of Moeb(rho_comp) over them
};

/// Shapes of NC(n), built once per n and cached. Throws std::out_of_range above nc_cap().
const std::vector<NcShape>& nc_shapes(int n);
int nc_cap();
/// Raises or lowers the largest n for which tables may be built (default 12).
void set_nc_cap(int cap);

namespace detail {

template <class T>
T block_product(const ValueSequence<T>& values, const std::vector<int>& sizes)
{
  T out = values[sizes.front()];
  for (std::size_t i = 1; i < sizes.size(); ++i) out = out * values[sizes[i]];
  return out;
}

}  // namespace detail

template <class T>
ValueSequence<T> cumulants_from_moments(const ValueSequence<T>& moments)
{
  ValueSequence<T> out;
  for (int n = 1; n <= moments.size(); ++n) {
    T total = moments[1] * Rational(0);
    for (const auto& shape : nc_shapes(n))
      if (shape.moebius_total != 0) total = total + detail::block_product(moments, shape.block_sizes) * Rational(shape.moebius_total);
    out.push_back(std::move(total));
  }
  return out;
}

template <class T>
ValueSequence<T> moments_from_cumulants(const ValueSequence<T>& cumulants)
{
  ValueSequence<T> out;
  for (int n = 1; n <= cumulants.size(); ++n) {
    T total = cumulants[1] * Rational(0);
    for (const auto& shape : nc_shapes(n)) total = total + detail::block_product(cumulants, shape.block_sizes) * Rational(shape.count);
    out.push_back(std::move(total));
  }
  return out;
}

}  // namespace kerovkit
