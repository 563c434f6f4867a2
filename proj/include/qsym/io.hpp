#pragma once
#include <json.hpp>
#include <optional>
#include <string>

#include "qsym/qgroup.hpp"

namespace qsym {

struct InputDoc {
    CartanData cartan;
    std::optional<std::vector<long>> weight;
    Variant variant = Variant::Standard;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

InputDoc parse_input(const nlohmann::json& j);
InputDoc load_input(const std::string& path);
std::string variant_name(Variant v);

nlohmann::json to_json(const Element& e);
Element element_from_json(const AlgebraConfig& cfg, const nlohmann::json& j);
nlohmann::json to_json(const Relation& r);
nlohmann::json to_json(const CheckResult& c);
nlohmann::json matrix_json(const std::vector<std::vector<Scalar>>& m);

}  // namespace qsym
