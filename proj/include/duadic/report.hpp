#pragma once

// JSON forms of codes, splitting certificates, existence verdicts and the MDS demo.

#include <optional>
#include <string>

#include <json.hpp>

#include "duadic/codes.hpp"
#include "duadic/mds.hpp"
#include "duadic/splitting.hpp"

namespace duadic {

using nlohmann::json;

/// Prime fields: an integer. Otherwise the coordinate string "c0 c1 ...".
json element_json(const FieldSpec& field, Elem a);
/// Accepts either form; Usage on malformed input.
Elem element_from_json(const FieldSpec& field, const json& j);

json code_report(const ConstaCode& code, const std::optional<Distance>& distance = std::nullopt);

json certificate(const Splitting& sp, const VerificationReport& report);
json verdict_json(const CodeSetting& setting, const ExistenceVerdict& verdict, bool with_witness = true);

struct CertificateCheck {
  SettingPtr setting;
  VerificationReport report;
  json recomputed;  // certificate schema with fresh checks
};

/// Rebuilds the setting and re-verifies; Usage on schema errors.
CertificateCheck verify_certificate(const json& cert);

/// The length q+1 MDS pair for q, with the canonical or a given lambda.
json mds_report(std::uint64_t q, const std::optional<std::string>& lambda_text = std::nullopt);

}  // namespace duadic
