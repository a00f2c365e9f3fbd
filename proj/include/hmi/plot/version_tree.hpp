// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "hmi/plot/table.hpp"

namespace hmi::plot {

enum class LookupSource { branch, root };

struct LookupResult {
  const PlotEntry* entry;
  LookupSource source;
};

struct InstanceRef {
  std::uint32_t version_id;
  std::string task_id;
};

// Root table plus registered branch tables plus instance bindings. Tables are
// immutable once registered; registration is single-writer, lookups are
// unrestricted-concurrent.
class VersionTree {
 public:
  explicit VersionTree(PlotTable root);

  const PlotTable& root() const { return *root_; }

  // Assigns the next version id; parent defaults to the root.
  std::uint32_t add_branch(PlotTable branch);

  const PlotTable* version(std::uint32_t id) const;
  std::vector<std::uint32_t> branch_ids() const;

  // Branch table first, then the parent chain down to the root.
  std::optional<LookupResult> lookup(std::uint32_t version_id,
                                     const NGramKey& key) const;

  void bind_instance(const std::string& instance_id, InstanceRef ref);
  void unbind_instance(const std::string& instance_id);
  std::optional<InstanceRef> instance(const std::string& instance_id) const;
  std::size_t instance_count() const;

 private:
  std::unique_ptr<PlotTable> root_;
  std::unordered_map<std::uint32_t, std::unique_ptr<PlotTable>> branches_;
  std::unordered_map<std::string, InstanceRef> instances_;
  std::uint32_t next_version_ = 1;
  mutable std::shared_mutex mutex_;
};

}  // namespace hmi::plot
