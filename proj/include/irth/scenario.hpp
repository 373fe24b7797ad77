#pragma once

#include "irth/record.hpp"

#include <string>
#include <vector>

namespace irth {

enum class DeceasedGender { male, female };

/// Parsed inheritance scenario: the deceased's surviving relatives as
/// (category, count) mentions, counts merged per category.
struct CaseScenario {
    std::vector<RelativeMention> mentions;   // canonical labels
    std::string source_text;
    DeceasedGender deceased = DeceasedGender::male;
};

}  // namespace irth
