#pragma once

#include "partmat/enumerate.hpp"
#include "partmat/errors.hpp"
#include "partmat/maps.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace partmat {

/// Inverse of cdk_eta. The preimage is looked up in a table built once per
/// length from the full enumeration, so the first call at a given n costs
/// one pass over n! matrices.
inline PartitionMatrix cdk_eta_inverse(const InversionSequence& e) {
  static std::mutex mu;
  static std::map<int, std::map<std::vector<int>, PartitionMatrix>> tables;
  const int n = e.length();
  std::lock_guard lock(mu);
  auto it = tables.find(n);
  if (it == tables.end()) {
    std::map<std::vector<int>, PartitionMatrix> table;
    for_each(partition_matrices(n), [&](const PartitionMatrix& p) {
      auto [pos, fresh] = table.emplace(cdk_eta(p).values(), p);
      if (!fresh) throw std::logic_error("cdk_eta_inverse: two matrices share an image");
    });
    it = tables.emplace(n, std::move(table)).first;
  }
  auto hit = it->second.find(e.values());
  if (hit == it->second.end()) throw DomainError("cdk_eta_inverse: sequence has no preimage");
  return hit->second;
}

}  // namespace partmat
