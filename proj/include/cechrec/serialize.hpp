#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

#include "cechrec/homology.hpp"
#include "cechrec/maps.hpp"
#include "cechrec/recover.hpp"

namespace cechrec {

/// [{dim, birth, death}] in (dim, birth, death) order; death null for +∞.
nlohmann::json to_json(const Barcode& barcode);
Barcode barcode_from_json(const nlohmann::json& j, std::uint32_t characteristic = 2);

/// {diagram, alpha: [...], checks: [{name, alpha, pass, counterexample?}], warnings}
nlohmann::json to_json(const DiagramReport& report);

/// {params, betti_claim, barcode, warnings}
nlohmann::json to_json(const RecoveryReport& report);

/// `dim,birth,death` lines with `inf` for essential bars.
void write_barcode_csv(std::ostream& out, const Barcode& barcode);

/// Horizontal bars grouped by dimension with dashed vertical markers.
std::string emit_barcode_svg(const Barcode& barcode, std::span<const double> alpha_markers);

}  // namespace cechrec
