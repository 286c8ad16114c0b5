#pragma once

#include <string_view>
#include <vector>

namespace gem {

// Files of data/ compiled into the library, by base name ("t3.gem").
std::string_view data_file(std::string_view name);
std::vector<std::string_view> data_file_names();

}  // namespace gem
