#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "skewpair/peel.hpp"
#include "skewpair/system.hpp"

namespace skewpair::io {

/// A system plus the size caps its file declares.
struct SystemDocument {
    SetPairSystem system;
    std::size_t a_cap = 0;
    std::size_t b_cap = 0;
};

/// Canonical system format: header `setpairs a b m n`, then one line per
/// pair, `i: A = {e,...}; B = {e,...}` with 1-based pair indices, 0-based
/// ascending elements, `{}` for the empty set.
std::string render_system(const SetPairSystem& system, std::size_t a_cap, std::size_t b_cap);

/// Strict parser; throws parse_error (with the offending 1-based line) on
/// malformed syntax, out-of-range labels, non-ascending elements, pairs that
/// are not disjoint, or body sets exceeding the declared caps.
SystemDocument parse_system(std::string_view text);

/// Certificate format: header `peel a b`, the padded input system in the
/// system format, then per level `level j : M = {...}` followed by
/// `removed i -> x`, `B i = {...}` and `repair v : old -> new` lines.
std::string render_certificate(const peel::PeelCertificate& cert);

peel::PeelCertificate parse_certificate(std::string_view text);

} // namespace skewpair::io
