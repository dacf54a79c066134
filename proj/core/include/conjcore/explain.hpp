#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace conjtk {

/// The statement a check id verifies, phrased as standalone mathematics.
std::optional<std::string> explain_check(std::string_view check_id);

/// All known check ids, sorted.
std::vector<std::string> known_check_ids();

} // namespace conjtk
