#include "kerovkit/nc_transform.hpp"

#include "kerovkit/partition.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

namespace kerovkit {

namespace {

std::atomic<int> cap{12};
std::mutex mutex;
std::map<int, std::vector<NcShape>> tables;

std::vector<NcShape> build(int n)
{
  std::map<std::vector<int>, NcShape> by_shape;
  for (const auto& rho : noncrossing_partitions(n)) {
    std::vector<int> sizes;
    for (const auto& b : rho.blocks()) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.begin(), sizes.end());
    auto& shape = by_shape[sizes];
    shape.block_sizes = sizes;
    shape.count += 1;
    shape.moebius_total += moebius(kreweras(rho));
  }
  std::vector<NcShape> out;
  for (auto& [sizes, shape] : by_shape) out.push_back(std::move(shape));
  return out;
}

}  // namespace

int nc_cap() { return cap.load(); }

void set_nc_cap(int value)
{
  if (value < 1) throw std::invalid_argument("the transform cap must be positive");
  cap.store(value);
}

const std::vector<NcShape>& nc_shapes(int n)
{
  if (n < 1 || n > nc_cap()) throw std::out_of_range("non-crossing tables are limited to 1.." + std::to_string(nc_cap()));
  std::lock_guard lock(mutex);
  auto it = tables.find(n);
  if (it == tables.end()) it = tables.emplace(n, build(n)).first;
  return it->second;
}

}  // namespace kerovkit
