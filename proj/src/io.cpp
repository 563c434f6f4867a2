#include "qsym/io.hpp"

#include <fstream>

namespace qsym {

using nlohmann::json;

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::Standard: return "standard";
        case Variant::HighestWeight: return "highest_weight";
        case Variant::Invariant: return "invariant";
    }
    return "?";
}

namespace {
int as_int(const json& x, const char* what) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + ": integers only");
    return x.get<int>();
}
}  // namespace

InputDoc parse_input(const json& j) {
    if (!j.is_object()) throw InputError("input must be a JSON object");
    for (auto& [k, v] : j.items())
        if (k != "cartan" && k != "symmetrizer" && k != "weight" && k != "variant")
            throw InputError("unknown field " + k);
    if (!j.contains("cartan") || !j["cartan"].is_array()) throw InputError("missing cartan matrix");
    IntMatrix C;
    for (auto& row : j["cartan"]) {
        if (!row.is_array()) throw InputError("cartan rows must be arrays");
        std::vector<int> r;
        for (auto& x : row) r.push_back(as_int(x, "cartan"));
        C.push_back(r);
    }
    std::vector<int> D;
    if (j.contains("symmetrizer")) {
        if (!j["symmetrizer"].is_array()) throw InputError("symmetrizer must be an array");
        for (auto& x : j["symmetrizer"]) D.push_back(as_int(x, "symmetrizer"));
    } else {
        D.assign(C.size(), 1);
    }
    InputDoc doc{build_cartan_data(C, D), std::nullopt, Variant::Standard};
    if (j.contains("weight")) {
        if (!j["weight"].is_array()) throw InputError("weight must be an array");
        std::vector<long> w;
        for (auto& x : j["weight"]) {
            int v = as_int(x, "weight");
            if (v > 0) throw InputError("weight entries must be nonpositive");
            w.push_back(v);
        }
        if (w.size() != C.size()) throw InputError("weight length mismatch");
        doc.weight = w;
    }
    if (j.contains("variant")) {
        if (!j["variant"].is_string()) throw InputError("variant must be a string");
        std::string v = j["variant"];
        if (v == "standard") doc.variant = Variant::Standard;
        else if (v == "highest_weight") doc.variant = Variant::HighestWeight;
        else if (v == "invariant") doc.variant = Variant::Invariant;
        else throw InputError("unknown variant " + v);
    }
    if (doc.variant != Variant::Standard && !doc.weight) throw InputError("weight variant needs a weight");
    return doc;
}

InputDoc load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return parse_input(j);
}

json to_json(const Element& e) {
    json arr = json::array();
    if (!e.config()) return arr;
    for (auto& [t, c] : e.terms()) {
        json w = json::array();
        for (int x : t.w) w.push_back(e.cfg().letter(x).name);
        arr.push_back({{"coeff", c.str()}, {"word", w}, {"torus", t.t}});
    }
    return arr;
}

Element element_from_json(const AlgebraConfig& cfg, const json& j) {
    if (!j.is_array()) throw InputError("element must be an array");
    Element e(&cfg);
    for (auto& x : j) {
        Word w;
        for (auto& l : x.at("word")) w.push_back(cfg.letter_id(l.get<std::string>()));
        Torus t = x.at("torus").get<Torus>();
        if (static_cast<int>(t.size()) != cfg.lattice_dim()) throw InputError("torus length mismatch");
        e.add(Term{w, t}, parse_scalar(x.at("coeff").get<std::string>()));
    }
    return e;
}

json to_json(const Relation& r) {
    json j;
    j["relation"] = r.name;
    j["status"] = r.pass ? "pass" : "fail";
    j["residual"] = r.pass ? json(nullptr) : to_json(r.residual);
    return j;
}

json to_json(const CheckResult& c) {
    json j;
    j["check"] = c.name;
    j["status"] = c.pass ? "pass" : "fail";
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

json matrix_json(const std::vector<std::vector<Scalar>>& m) {
    json a = json::array();
    for (auto& row : m) {
        json r = json::array();
        for (auto& x : row) r.push_back(x.str());
        a.push_back(r);
    }
    return a;
}

}  // namespace qsym
