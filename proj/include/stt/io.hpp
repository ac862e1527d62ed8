#pragma once

#include <iosfwd>
#include <map>

#include <json.hpp>

#include "stt/skew.hpp"

namespace stt {

/// Parsed input file: field + bound quiver + optional group action + options.
struct InputDocument {
  FieldSpec field = FieldSpec::rationals();
  QuiverPresentation quiver;
  bool has_group = false;
  std::vector<std::string> group_elements;
  std::vector<std::vector<std::size_t>> group_table;
  std::vector<std::size_t> group_generators;
  // per generator element: vertex permutation + arrow images
  std::map<std::size_t,
           std::pair<std::vector<std::size_t>,
                     std::vector<std::vector<std::pair<Scalar, std::size_t>>>>>
      generator_maps;
  std::size_t max_vertices = 10000;
  std::string seed = "0xA1R";
};

/// `field_override` replaces the document's field before any scalar parses.
InputDocument parse_input(const std::string& json_text,
                          const std::optional<FieldSpec>& field_override = {});
InputDocument load_input_file(const std::string& path,
                              const std::optional<FieldSpec>& field_override = {});

/// Algebra plus validated action (trivial when no group block is present).
struct BuiltInput {
  AlgebraPtr alg;
  GroupAction action;
  bool trivial_group = true;
};
BuiltInput build_input(const InputDocument& doc);

/// Seeds are strings: hex literals parse numerically, anything else hashes
/// (FNV-1a). Recorded verbatim in reports; results never depend on it.
std::uint64_t resolve_seed(const std::string& seed);

/// Radical-filtration composition label of a module ("1/2 2p", "0", ...).
std::string module_label(const Representation& m);

using Json = nlohmann::ordered_json;

Json exchange_report(const ExchangeQuiver& q, const GroupAction& act,
                     const InputDocument& doc);
std::string to_dot(const ExchangeQuiver& q);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The named theorem-level checks run by `verify` (and the acceptance suite).
std::vector<CheckResult> verification_suite(BijectionContext& ctx,
                                            const GroupAction& act);

/// Side-local per-vertex laws of one exchange quiver (sincerity/faithfulness
/// classifications, P-part uniqueness, silting roundtrip, approximation route).
std::vector<CheckResult> quiver_law_checks(const ExchangeQuiver& q,
                                           const std::string& prefix = "");

/// Command entry points; exit codes: 0 pass, 1 check failure, 2 input error,
/// 3 resource abort.
int cmd_enumerate(const InputDocument& doc, const std::string& dot_path,
                  const std::string& json_path, std::ostream& out);
int cmd_skew(const InputDocument& doc, const std::string& json_path, std::ostream& out);
int cmd_verify(const InputDocument& doc, const std::string& json_path, std::ostream& out);

}  // namespace stt
