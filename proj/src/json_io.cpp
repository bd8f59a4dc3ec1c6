#include "setq/json_io.hpp"

namespace setq {

namespace {

Json seed_or_null(const std::optional<std::uint64_t>& seed) {
    return seed ? Json(*seed) : Json(nullptr);
}

std::vector<int> int_array(const Json& j, const char* key) {
    require(j.contains(key) && j[key].is_array(), Errc::InvalidParams,
            std::string("expected array field '") + key + "'");
    return j[key].get<std::vector<int>>();
}

}  // namespace

Json to_json(const SetEqualityInstance& inst) {
    return Json{{"kind", "set_equality"},
                {"n", inst.a.n},
                {"m", inst.a.m},
                {"r", inst.preimage_bound ? Json(*inst.preimage_bound) : Json(nullptr)},
                {"promise", to_string(inst.promise)},
                {"a", inst.a.values},
                {"b", inst.b.values},
                {"f", nullptr},
                {"seed", seed_or_null(inst.seed)}};
}

Json to_json(const CollisionInstance& inst) {
    return Json{{"kind", "collision"},
                {"n", inst.f.n},
                {"m", inst.f.m},
                {"r", inst.r},
                {"promise", to_string(inst.promise)},
                {"a", nullptr},
                {"b", nullptr},
                {"f", inst.f.values},
                {"seed", seed_or_null(inst.seed)}};
}

AnyInstance instance_from_json(const Json& j) {
    require(j.is_object() && j.contains("kind"), Errc::InvalidParams,
            "instance file must be an object with a 'kind' field");
    const auto kind = j["kind"].get<std::string>();
    const int m = j.value("m", 0);
    std::optional<std::uint64_t> seed;
    if (j.contains("seed") && !j["seed"].is_null()) seed = j["seed"].get<std::uint64_t>();

    if (kind == "set_equality") {
        SetEqualityInstance inst;
        inst.a = OracleFunction::make(m, int_array(j, "a"));
        inst.b = OracleFunction::make(m, int_array(j, "b"));
        require(inst.a.n == inst.b.n, Errc::SizeMismatch, "a and b tables differ in length");

        const auto promise = j.value("promise", "");
        if (promise == "equal")
            inst.promise = SetPromise::Equal;
        else if (promise == "disjoint")
            inst.promise = SetPromise::Disjoint;
        else
            fail(Errc::InvalidParams, "unknown set-equality promise '" + promise + "'");

        if (j.contains("r") && !j["r"].is_null()) inst.preimage_bound = j["r"].get<int>();
        inst.seed = seed;
        return inst;
    }
    if (kind == "collision") {
        CollisionInstance inst;
        inst.f = OracleFunction::make(m, int_array(j, "f"));
        require(j.contains("r") && !j["r"].is_null(), Errc::InvalidParams,
                "collision instance requires the field 'r'");
        inst.r = j["r"].get<int>();

        const auto promise = j.value("promise", "");
        if (promise == "one_to_one")
            inst.promise = CollisionPromise::OneToOne;
        else if (promise == "r_to_one")
            inst.promise = CollisionPromise::RToOne;
        else
            fail(Errc::InvalidParams, "unknown collision promise '" + promise + "'");

        inst.seed = seed;
        return inst;
    }
    fail(Errc::InvalidParams, "unknown instance kind '" + kind + "'");
}

Json to_json(const Relation& rel) {
    Json x = Json::array(), y = Json::array(), pairs = Json::array();
    for (const auto& b : rel.x_side) x.push_back(b.to_text());
    for (const auto& b : rel.y_side) y.push_back(b.to_text());
    for (const auto& [xi, yi] : rel.pairs) pairs.push_back(Json::array({xi, yi}));
    return Json{{"N", rel.input_length}, {"X", x}, {"Y", y}, {"pairs", pairs}};
}

Relation relation_from_json(const Json& j) {
    Relation rel;
    rel.input_length = j.at("N").get<int>();
    for (const auto& s : j.at("X")) rel.x_side.push_back(Bitstring::from_text(s.get<std::string>()));
    for (const auto& s : j.at("Y")) rel.y_side.push_back(Bitstring::from_text(s.get<std::string>()));
    for (const auto& p : j.at("pairs")) {
        require(p.is_array() && p.size() == 2, Errc::InvalidParams,
                "relation pair must be [xIndex, yIndex]");
        rel.pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    return rel;
}

Json to_json(const ExactProbability& p) {
    return Json{{"num", p.num().str()}, {"den", p.den().str()}};
}

Json to_json(const MonteCarloEstimate& est) {
    return Json{{"p_hat", est.p_hat}, {"std_error", est.std_error}, {"trials", est.trials}};
}

Json to_json(const AdversaryParameters& params) {
    return Json{{"m", params.m},
                {"m_prime", params.m_prime},
                {"l", params.l},
                {"l_prime", params.l_prime},
                {"bound", params.bound}};
}

Json to_json(const RunResult& result) {
    return Json{{"answer", answer_text(result.answer, result.found_index)},
                {"queries", result.queries_used},
                {"success", result.success},
                {"p_success", result.exact_success_probability
                                  ? Json(*result.exact_success_probability)
                                  : Json(nullptr)},
                {"seed", result.seed}};
}

Json to_json(const PromiseVerdict& verdict) {
    return Json{{"observed_promise", to_string(verdict.observed)},
                {"max_preimage_a", verdict.max_preimage_a},
                {"max_preimage_b", verdict.max_preimage_b}};
}

}  // namespace setq
