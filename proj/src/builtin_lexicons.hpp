#pragma once

#include <string_view>

#include "sylloprobe/surface.hpp"

namespace sylloprobe::detail {

// Raw text of data/lexicons/<category>.txt, embedded at configure time.
std::string_view builtin_lexicon_text(TermCategory category);

}  // namespace sylloprobe::detail
