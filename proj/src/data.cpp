#include "gem/data.hpp"

#include <string>
#include <utility>

#include "gem/errors.hpp"

namespace gem::detail {
extern const std::pair<std::string_view, std::string_view> kEmbeddedFiles[];
extern const std::size_t kEmbeddedFileCount;
}  // namespace gem::detail

namespace gem {

std::string_view data_file(std::string_view name) {
  for (std::size_t k = 0; k < detail::kEmbeddedFileCount; ++k)
    if (detail::kEmbeddedFiles[k].first == name) return detail::kEmbeddedFiles[k].second;
  throw Error(ErrorKind::MissingData, "no embedded data file '" + std::string(name) + "'");
}

std::vector<std::string_view> data_file_names() {
  std::vector<std::string_view> out;
  for (std::size_t k = 0; k < detail::kEmbeddedFileCount; ++k) out.push_back(detail::kEmbeddedFiles[k].first);
  return out;
}

}  // namespace gem
