#pragma once

#include <string>

#include "ramsey/diaries.hpp"
#include "ramsey/variants.hpp"

namespace ramsey {

// One row per closure level with the event annotation.
std::string render_ascii(const WordSet& diary, const std::vector<Event>& events);

// The closure drawn as a tree; members are highlighted.
std::string render_dot(const WordSet& diary, const std::vector<Event>& events);

std::string render_ascii_devlin(const WordSet& diary, const std::vector<Event>& events);
std::string render_ascii_tri(const std::vector<Bits>& diary, const std::vector<TriEvent>& events);
std::string render_dot_devlin(const WordSet& diary);
std::string render_dot_tri(const std::vector<Bits>& diary);

}  // namespace ramsey
