// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>

#include "hmi/plot/table.hpp"

namespace hmi::plot {

// "PLT1" table file. Reps are stored float32 row-major; a table whose reps
// are float32-exact (every persisted table is) round-trips bit-identically.
void persist(const PlotTable& table, const std::filesystem::path& path);
PlotTable load(const std::filesystem::path& path);

// Token corpus text file: one sequence per line, whitespace-separated ids.
Corpus load_corpus(const std::filesystem::path& path);
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

}  // namespace hmi::plot
