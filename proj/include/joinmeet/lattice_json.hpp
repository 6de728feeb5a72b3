#pragma once

#include <string>
#include <string_view>

#include "joinmeet/lattice.hpp"
#include "joinmeet/poset.hpp"

namespace joinmeet {

// Format: {"elements": ["1","2",...], "covers": [["1","2"],...]}

Poset poset_from_json(std::string_view text);
Lattice lattice_from_json(std::string_view text);

/// Canonical single-line encoding, covers sorted by element position.
std::string to_json(const Poset& p);
inline std::string to_json(const Lattice& l) { return to_json(l.poset()); }

/// Names: b3, fig2, fig4, fig5 (with or without ".json"; "thin_fig2"
/// also accepted).
std::string builtin_fixture(std::string_view name);
bool has_builtin_fixture(std::string_view name);

}  // namespace joinmeet
