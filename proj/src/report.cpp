#include "qalg/report.hpp"

#include <string>

namespace qalg {

void to_json(nlohmann::json& j, const Decomposition& d) {
  j = nlohmann::json{{"rank_m", d.rank_m},
                     {"complement_order", d.complement_order},
                     {"center_order", d.center_order},
                     {"complement_basis", d.complement_basis},
                     {"q8_indices", d.q8_indices}};
}

void from_json(const nlohmann::json& j, Decomposition& d) {
  j.at("rank_m").get_to(d.rank_m);
  j.at("complement_order").get_to(d.complement_order);
  j.at("center_order").get_to(d.center_order);
  j.at("complement_basis").get_to(d.complement_basis);
  j.at("q8_indices").get_to(d.q8_indices);
}

void to_json(nlohmann::json& j, const StructureReport& r) {
  nlohmann::json census = nlohmann::json::object();
  for (const auto& [order, count] : r.order_census) census[std::to_string(order)] = count;
  j = nlohmann::json{{"group_order", r.group_order},
                     {"center_order", r.center_order},
                     {"center_is_elementary_abelian", r.center_is_elementary_abelian},
                     {"exponent", r.exponent},
                     {"order_census", census},
                     {"commutator_subgroup_order", r.commutator_subgroup_order},
                     {"is_hamiltonian", r.is_hamiltonian},
                     {"hamiltonian_mode", r.hamiltonian_sampled ? "sampled" : "exhaustive"},
                     {"decomposition", nullptr}};
  if (r.decomposition) j["decomposition"] = *r.decomposition;
}

void from_json(const nlohmann::json& j, StructureReport& r) {
  j.at("group_order").get_to(r.group_order);
  j.at("center_order").get_to(r.center_order);
  j.at("center_is_elementary_abelian").get_to(r.center_is_elementary_abelian);
  j.at("exponent").get_to(r.exponent);
  r.order_census.clear();
  for (const auto& [order, count] : j.at("order_census").items())
    r.order_census[static_cast<std::uint32_t>(std::stoul(order))] = count.get<std::uint64_t>();
  j.at("commutator_subgroup_order").get_to(r.commutator_subgroup_order);
  j.at("is_hamiltonian").get_to(r.is_hamiltonian);
  const auto mode = j.at("hamiltonian_mode").get<std::string>();
  if (mode != "sampled" && mode != "exhaustive") throw Error("hamiltonian_mode must be sampled or exhaustive");
  r.hamiltonian_sampled = mode == "sampled";
  const auto& d = j.at("decomposition");
  if (d.is_null())
    r.decomposition.reset();
  else
    r.decomposition = d.get<Decomposition>();
}

}  // namespace qalg
