// SPDX-License-Identifier: Apache-2.0

#include "hmi/plot/version_tree.hpp"

#include <utility>

#include "hmi/errors.hpp"

namespace hmi::plot {

VersionTree::VersionTree(PlotTable root)
    : root_(std::make_unique<PlotTable>(std::move(root))) {
  root_->version_id = 0;
  root_->parent_id = kNoParent;
}

std::uint32_t VersionTree::add_branch(PlotTable branch) {
  std::unique_lock lock(mutex_);
  const std::uint32_t id = next_version_++;
  branch.version_id = id;
  if (branch.parent_id == kNoParent) {
    branch.parent_id = root_->version_id;
  } else if (branch.parent_id != root_->version_id &&
             branches_.find(branch.parent_id) == branches_.end()) {
    throw RoutingError("branch parent version " + std::to_string(branch.parent_id) +
                       " does not exist");
  }
  branches_.emplace(id, std::make_unique<PlotTable>(std::move(branch)));
  return id;
}

const PlotTable* VersionTree::version(std::uint32_t id) const {
  std::shared_lock lock(mutex_);
  if (id == root_->version_id) return root_.get();
  auto it = branches_.find(id);
  return it == branches_.end() ? nullptr : it->second.get();
}

std::vector<std::uint32_t> VersionTree::branch_ids() const {
  std::shared_lock lock(mutex_);
  std::vector<std::uint32_t> ids;
  ids.reserve(branches_.size());
  for (const auto& [id, table] : branches_) ids.push_back(id);
  return ids;
}

std::optional<LookupResult> VersionTree::lookup(std::uint32_t version_id,
                                                const NGramKey& key) const {
  const PlotTable* table;
  {
    std::shared_lock lock(mutex_);
    if (version_id == root_->version_id) {
      table = root_.get();
    } else {
      auto it = branches_.find(version_id);
      if (it == branches_.end()) {
        throw RoutingError("version " + std::to_string(version_id) + " does not exist");
      }
      table = it->second.get();
    }
  }
  // Walk the parent chain; tables are immutable so no lock is held while
  // probing entries.
  while (table != nullptr) {
    if (const PlotEntry* e = table->find(key)) {
      const bool is_root = table->parent_id == kNoParent;
      return LookupResult{e, is_root ? LookupSource::root : LookupSource::branch};
    }
    if (table->parent_id == kNoParent) break;
    std::shared_lock lock(mutex_);
    if (table->parent_id == root_->version_id) {
      table = root_.get();
    } else {
      auto it = branches_.find(table->parent_id);
      table = it == branches_.end() ? nullptr : it->second.get();
    }
  }
  return std::nullopt;
}

void VersionTree::bind_instance(const std::string& instance_id, InstanceRef ref) {
  std::unique_lock lock(mutex_);
  if (instances_.find(instance_id) != instances_.end()) {
    throw ConflictError("instance " + instance_id + " already bound");
  }
  if (ref.version_id != root_->version_id &&
      branches_.find(ref.version_id) == branches_.end()) {
    throw RoutingError("version " + std::to_string(ref.version_id) + " does not exist");
  }
  instances_.emplace(instance_id, std::move(ref));
}

void VersionTree::unbind_instance(const std::string& instance_id) {
  std::unique_lock lock(mutex_);
  instances_.erase(instance_id);
}

std::optional<InstanceRef> VersionTree::instance(const std::string& instance_id) const {
  std::shared_lock lock(mutex_);
  auto it = instances_.find(instance_id);
  if (it == instances_.end()) return std::nullopt;
  return it->second;
}

std::size_t VersionTree::instance_count() const {
  std::shared_lock lock(mutex_);
  return instances_.size();
}

}  // namespace hmi::plot
