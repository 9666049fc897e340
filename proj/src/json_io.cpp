#include "cedf/json_io.hpp"

#include <json.hpp>

namespace cedf {

using nlohmann::json;

std::string cedf_to_json(const Cedf& c, int indent) {
    json j;
    j["v"] = c.params.v;
    j["m"] = c.params.m;
    j["l"] = c.params.l;
    j["lambda"] = c.params.lambda;
    j["blocks"] = c.blocks;
    return j.dump(indent);
}

Cedf cedf_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
    try {
        CedfParams params;
        params.v = j.at("v").get<i64>();
        params.m = j.at("m").get<int>();
        params.l = j.at("l").get<int>();
        params.lambda = j.at("lambda").get<int>();
        auto blocks = j.at("blocks").get<std::vector<std::vector<i64>>>();
        if (params.v <= 0) throw std::invalid_argument("v must be positive");
        for (const auto& block : blocks)
            for (i64 e : block)
                if (e < 0 || e >= params.v)
                    throw std::invalid_argument("block element out of [0, v-1]");
        return make_cedf(params, std::move(blocks));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed CEDF JSON: ") + e.what());
    }
}

}  // namespace cedf
