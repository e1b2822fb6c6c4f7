#pragma once

#include <string_view>

// Data files compiled into the library (see data/).
namespace trifree::data {

/// data/srg_existence.txt
std::string_view srg_existence();

/// data/paper_table.csv
std::string_view paper_table_csv();

}  // namespace trifree::data
