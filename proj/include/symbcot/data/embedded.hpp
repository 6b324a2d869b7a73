#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace symbcot::data {

// Files under data/, compiled into the binary; paths are relative to data/.
std::optional<std::string_view> embedded_file(std::string_view path);
std::vector<std::string_view> embedded_files();

}  // namespace symbcot::data
