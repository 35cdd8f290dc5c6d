#include "springer_kit/json_io.hpp"

#include <limits>

namespace springer_kit {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

bool fits_integer(const Json& v) {
  if (v.is_number_unsigned()) {
    return v.get<std::uint64_t>() <=
           static_cast<std::uint64_t>(std::numeric_limits<Integer>::max());
  }
  return v.is_number_integer();
}

std::vector<Integer> integer_array(const Json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array");
  std::vector<Integer> out;
  for (const auto& v : j) {
    if (!fits_integer(v)) {
      parse_error(std::string(what) + " must hold 64-bit integers");
    }
    out.push_back(v.get<Integer>());
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    parse_error(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

Integer integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!fits_integer(v)) {
    parse_error(std::string("field \"") + key + "\" must be a 64-bit integer");
  }
  return v.get<Integer>();
}

std::uint64_t unsigned_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) {
    parse_error(std::string("field \"") + key +
                "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) {
    parse_error(std::string("field \"") + key + "\" must be a string");
  }
  return v.get<std::string>();
}

bool bool_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean()) {
    parse_error(std::string("field \"") + key + "\" must be a boolean");
  }
  return v.get<bool>();
}

void expect_kind(const Json& j, const char* kind) {
  const Json& v = field(j, "kind");
  if (!v.is_string() || v.get<std::string>() != kind) {
    parse_error(std::string("expected a \"") + kind + "\" record");
  }
  if (integer_field(j, "schema_version") != kSchemaVersion) {
    parse_error("unsupported schema_version");
  }
}

Json header(const char* kind) {
  return Json{{"schema_version", kSchemaVersion}, {"kind", kind}};
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    parse_error("malformed bracket list: " + std::string(err.what()));
  }
}

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const Bipartition& bp) {
  return Json::array({to_json(bp.first), to_json(bp.second)});
}

Json to_json(const Symbol& x) {
  return Json{{"r", x.r()},
              {"s", x.s()},
              {"rows", Json::array({Json(x.top()), Json(x.bottom())})}};
}

Partition partition_from_json(const Json& j) {
  return validate_partition(integer_array(j, "partition"));
}

Bipartition bipartition_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    parse_error("bipartition must be a pair of partitions");
  }
  return {partition_from_json(j[0]), partition_from_json(j[1])};
}

Symbol symbol_from_json(const Json& j) {
  const Json& rows = field(j, "rows");
  if (!rows.is_array() || rows.size() != 2) {
    parse_error("symbol rows must be a pair of arrays");
  }
  return make_symbol(integer_field(j, "r"), integer_field(j, "s"),
                     integer_array(rows[0], "symbol row"),
                     integer_array(rows[1], "symbol row"));
}

Partition parse_partition(std::string_view text) {
  return partition_from_json(parse_text(text));
}

Bipartition parse_bipartition(std::string_view text) {
  return bipartition_from_json(parse_text(text));
}

Json class_record(const SymplecticClassLabel& label) {
  const ComponentData data = n_delta(label);
  Json j = header("class");
  j["n"] = label.half_rank();
  j["partition"] = to_json(label.partition());
  j["n_u"] = data.n_u;
  j["delta_u"] = data.delta_u;
  j["component_group_order"] = component_group_order(label);
  return j;
}

Json springer_record(const SpringerImage& image) {
  Json j = header("springer");
  j["bipartition"] = to_json(image.source);
  j["rank"] = image.symbol.rank();
  j["symbol"] = to_json(image.symbol);
  j["display"] = display(image.symbol);
  try {
    j["wavefront"] = to_json(wavefront_partition(image.symbol).partition());
    j["wavefront_error"] = nullptr;
  } catch (const Error& err) {
    if (err.code() != ErrorCode::RepeatedEntries) throw;
    j["wavefront"] = nullptr;
    j["wavefront_error"] = to_string(err.code());
  }
  return j;
}

Json verification_record(const VerificationReport& report) {
  const CuspidalDatum& d = report.datum;
  Json j = header("verification");
  j["e"] = d.e;
  j["f"] = d.f;
  j["a"] = d.a;
  j["b"] = d.b;
  j["n"] = d.n;
  j["cuspidal_exists"] = d.cuspidal_exists;
  j["special_b"] = to_json(d.special_b);
  j["special_d"] = to_json(d.special_d);
  j["n_chi"] = d.n_chi;
  j["j_symbol"] = to_json(report.j_symbol);
  j["springer_symbol"] = to_json(report.springer_symbol);
  j["lambda"] = to_json(report.lambda.partition());
  j["mu"] = to_json(report.mu);
  j["a_order"] = report.a_order;
  j["identity_holds"] = report.identity_holds;
  j["mu_matches_closed_form"] = report.mu_matches_closed_form;
  return j;
}

Json series_label_record(const SeriesLabel& label) {
  Json j = header("series_label");
  j["n"] = label.involution.n;
  j["a"] = label.involution.a;
  j["b"] = label.involution.b;
  j["sign_vector"] = label.involution.sign_vector;
  j["a_order"] = label.a_order;
  j["h1_class"] = label.h1_class;
  return j;
}

Json harish_chandra_record(const HarishChandraDatum& datum) {
  Json j = header("harish_chandra");
  j["n"] = datum.n;
  j["e"] = datum.e;
  j["k"] = datum.k;
  j["gl1_factors"] = datum.gl1_factors;
  j["symplectic_rank"] = datum.symplectic_rank;
  j["relative_weyl_type"] = "B" + std::to_string(datum.relative_weyl_rank);
  j["relative_weyl_rank"] = datum.relative_weyl_rank;
  return j;
}

Json error_record(std::string_view code, std::string_view message) {
  Json j = header("error");
  j["error"] = code;
  j["message"] = message;
  return j;
}

SymplecticClassLabel class_from_record(const Json& j) {
  expect_kind(j, "class");
  SymplecticClassLabel label(partition_from_json(field(j, "partition")));
  const ComponentData data = n_delta(label);
  if (integer_field(j, "n") != label.half_rank() ||
      integer_field(j, "n_u") != data.n_u ||
      integer_field(j, "delta_u") != data.delta_u ||
      unsigned_field(j, "component_group_order") !=
          component_group_order(label)) {
    parse_error("class record fields are inconsistent with its partition");
  }
  return label;
}

VerificationReport verification_from_record(const Json& j) {
  expect_kind(j, "verification");
  CuspidalDatum datum =
      make_cuspidal_datum(integer_field(j, "e"), integer_field(j, "f"));
  if (integer_field(j, "a") != datum.a || integer_field(j, "b") != datum.b ||
      integer_field(j, "n") != datum.n ||
      bool_field(j, "cuspidal_exists") != datum.cuspidal_exists ||
      symbol_from_json(field(j, "special_b")) != datum.special_b ||
      symbol_from_json(field(j, "special_d")) != datum.special_d ||
      unsigned_field(j, "n_chi") != datum.n_chi) {
    parse_error("verification record datum is inconsistent with (e, f)");
  }
  return VerificationReport{
      .datum = std::move(datum),
      .j_symbol = symbol_from_json(field(j, "j_symbol")),
      .springer_symbol = symbol_from_json(field(j, "springer_symbol")),
      .lambda = SymplecticClassLabel(partition_from_json(field(j, "lambda"))),
      .mu = partition_from_json(field(j, "mu")),
      .a_order = unsigned_field(j, "a_order"),
      .identity_holds = bool_field(j, "identity_holds"),
      .mu_matches_closed_form = bool_field(j, "mu_matches_closed_form"),
  };
}

SeriesLabel series_label_from_record(const Json& j) {
  expect_kind(j, "series_label");
  InvolutionDatum s = make_involution(static_cast<int>(integer_field(j, "a")),
                                      static_cast<int>(integer_field(j, "b")));
  if (integer_field(j, "n") != s.n ||
      integer_array(field(j, "sign_vector"), "sign_vector") !=
          std::vector<Integer>(s.sign_vector.begin(), s.sign_vector.end())) {
    parse_error("series label involution is inconsistent");
  }
  return {std::move(s), static_cast<int>(integer_field(j, "a_order")),
          static_cast<int>(integer_field(j, "h1_class"))};
}

HarishChandraDatum harish_chandra_from_record(const Json& j) {
  expect_kind(j, "harish_chandra");
  HarishChandraDatum datum =
      harish_chandra_levi(static_cast<int>(integer_field(j, "n")),
                          static_cast<int>(integer_field(j, "e")));
  if (integer_field(j, "k") != datum.k ||
      integer_field(j, "gl1_factors") != datum.gl1_factors ||
      integer_field(j, "symplectic_rank") != datum.symplectic_rank ||
      integer_field(j, "relative_weyl_rank") != datum.relative_weyl_rank ||
      string_field(j, "relative_weyl_type") !=
          "B" + std::to_string(datum.relative_weyl_rank)) {
    parse_error("Harish-Chandra record is inconsistent with (n, e)");
  }
  return datum;
}

}  // namespace springer_kit
