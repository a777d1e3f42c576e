#include "mnrule/json_codec.hpp"

#include "mnrule/error.hpp"

#include <limits>

namespace mnrule {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidArgument(std::string("missing field '") + name + "'");
  return j.at(name);
}

int small_int(const Json& j) {
  if (!j.is_number_integer()) throw InvalidArgument("expected an integer");
  return j.get<int>();
}

std::vector<int> int_array(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) out.push_back(small_int(v));
  return out;
}

}  // namespace

Json coeff_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(c));
  }
  return Json(c.str());
}

Integer coeff_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw InvalidArgument("malformed integer string");
    }
  }
  throw InvalidArgument("coefficient must be an integer");
}

Json to_json(const Partition& p) { return Json(p.parts()); }

Json to_json(const RimHookRecord& hook) {
  return Json{{"inner", to_json(hook.inner)},
              {"outer", to_json(hook.outer)},
              {"size", hook.size},
              {"height", hook.height}};
}

Json to_json(const CoreResult& core) {
  Json removed = Json::array();
  for (const auto& hook : core.removed) removed.push_back(to_json(hook));
  return Json{{"core", to_json(core.core)},
              {"hooks_removed", core.hooks_removed},
              {"height_sum", core.height_sum},
              {"removed", removed}};
}

Json to_json(const Permutation& w) { return Json(w.one_line()); }

Json to_json(const SchurExpansion& f) {
  Json out = Json::array();
  for (const auto& [lambda, c] : f) out.push_back({{"coeff", coeff_to_json(c)}, {"partition", to_json(lambda)}});
  return out;
}

Json to_json(const SchubertExpansion& f) {
  Json out = Json::array();
  for (const auto& [w, c] : f) out.push_back({{"coeff", coeff_to_json(c)}, {"perm", to_json(w)}});
  return out;
}

Json to_json(const QuantumClass& f) {
  Json out = Json::array();
  for (const auto& [basis, c] : f.terms()) {
    out.push_back({{"coeff", coeff_to_json(c)}, {"q", basis.q_power}, {"partition", to_json(basis.partition)}});
  }
  return out;
}

Json to_json(const CheckReport& report) {
  Json lines = Json::array();
  for (const auto& line : report.lines) {
    lines.push_back({{"name", line.name}, {"pass", line.pass}, {"detail", line.detail}});
  }
  return Json{{"pass", report.all_pass()}, {"checks", lines}};
}

Partition partition_from_json(const Json& j) { return Partition(int_array(j)); }

RimHookRecord rim_hook_from_json(const Json& j) {
  RimHookRecord hook{partition_from_json(field(j, "inner")), partition_from_json(field(j, "outer")),
                     small_int(field(j, "size")), small_int(field(j, "height"))};
  try {
    validate(hook);
  } catch (const std::logic_error& e) {
    throw InvalidArgument(e.what());
  }
  return hook;
}

Permutation permutation_from_json(const Json& j) { return Permutation(int_array(j)); }

SchurExpansion schur_expansion_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("Schur expansion must be an array");
  SchurExpansion out;
  for (const auto& t : j) out.add(partition_from_json(field(t, "partition")), coeff_from_json(field(t, "coeff")));
  return out;
}

SchubertExpansion schubert_expansion_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("Schubert expansion must be an array");
  SchubertExpansion out;
  for (const auto& t : j) out.add(permutation_from_json(field(t, "perm")), coeff_from_json(field(t, "coeff")));
  return out;
}

QuantumClass quantum_class_from_json(const Json& j, const GrContext& ctx) {
  if (!j.is_array()) throw InvalidArgument("quantum class must be an array");
  QuantumClass out(ctx);
  for (const auto& t : j) {
    out.add(small_int(field(t, "q")), partition_from_json(field(t, "partition")), coeff_from_json(field(t, "coeff")));
  }
  return out;
}

}  // namespace mnrule
