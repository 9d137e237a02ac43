#include "linord/report.hpp"

#include <stdexcept>

#include "linord/parse.hpp"

namespace linord {

namespace {

using nlohmann::json;

const char* shape_str(Shape s) {
    switch (s) {
        case Shape::Whole: return "whole";
        case Shape::Min: return "min";
        default: return "max";
    }
}

Shape shape_of(const std::string& s) {
    if (s == "whole") return Shape::Whole;
    if (s == "min") return Shape::Min;
    if (s == "max") return Shape::Max;
    throw std::invalid_argument("unknown shape '" + s + "'");
}

const char* family_str(CcsFamily::Kind k) {
    switch (k) {
        case CcsFamily::Kind::Finite: return "finite";
        case CcsFamily::Kind::Endpoint: return "endpoint";
        default: return "blockwise";
    }
}

CcsFamily::Kind family_of(const std::string& s) {
    if (s == "finite") return CcsFamily::Kind::Finite;
    if (s == "endpoint") return CcsFamily::Kind::Endpoint;
    if (s == "blockwise") return CcsFamily::Kind::Blockwise;
    throw std::invalid_argument("unknown family kind '" + s + "'");
}

json opt_shape(const std::optional<Shape>& s) { return s ? json(shape_str(*s)) : json(nullptr); }

std::optional<Shape> opt_shape_of(const json& j) {
    if (j.is_null()) return std::nullopt;
    return shape_of(j.get<std::string>());
}

Term term_of(const json& j) {
    try {
        return parse_term(j.get<std::string>());
    } catch (const ParseError& e) {
        throw std::invalid_argument(std::string("bad term in witness: ") + e.what());
    }
}

}  // namespace

json to_json(const Witness& w) {
    json j;
    j["indexOrder"] = w.index_order.str();
    j["pieces"] = json::array();
    for (const auto& p : w.pieces) {
        j["pieces"].push_back({{"src", p.src},
                               {"dst", p.dst},
                               {"kind", p.kind == Piece::Kind::Block ? "block" : "fan"},
                               {"srcType", p.src_type},
                               {"dstType", p.dst_type}});
    }
    j["embedding"] = w.embedding ? json(*w.embedding) : json(nullptr);
    if (w.family) {
        const CcsFamily& f = *w.family;
        json spans = json::array();
        for (auto [lo, hi] : f.spans) spans.push_back({lo, hi});
        j["family"] = {{"kind", family_str(f.kind)},  {"inner", f.inner.str()},       {"spans", spans},
                       {"first", opt_shape(f.first)}, {"last", opt_shape(f.last)}, {"rest", shape_str(f.rest)}};
    }
    if (w.sum) j["sum"] = w.sum->str();
    return j;
}

json to_json(const Verdict& v) {
    json j;
    j["verdict"] = status_name(v.status);
    j["rule"] = v.rule;
    j["message"] = v.message;
    if (v.witness) {
        j.update(to_json(*v.witness));
    } else {
        j["indexOrder"] = nullptr;
        j["pieces"] = json::array();
        j["embedding"] = nullptr;
    }
    return j;
}

Witness witness_from_json(const json& j) {
    if (!j.contains("indexOrder") || j["indexOrder"].is_null()) throw std::invalid_argument("witness lacks indexOrder");
    Witness w{term_of(j["indexOrder"]), {}, std::nullopt, std::nullopt, std::nullopt};
    for (const auto& p : j.value("pieces", json::array())) {
        const std::string kind = p.value("kind", "block");
        if (kind != "block" && kind != "fan") throw std::invalid_argument("unknown piece kind '" + kind + "'");
        w.pieces.push_back({kind == "block" ? Piece::Kind::Block : Piece::Kind::Fan, p.at("src").get<std::string>(),
                            p.at("dst").get<std::string>(), p.value("srcType", ""), p.value("dstType", "")});
    }
    if (j.contains("embedding") && !j["embedding"].is_null())
        w.embedding = j["embedding"].get<std::vector<std::int64_t>>();
    if (j.contains("family")) {
        const json& f = j["family"];
        CcsFamily fam{family_of(f.at("kind").get<std::string>()), term_of(f.at("inner")), {},
                      opt_shape_of(f.value("first", json(nullptr))), opt_shape_of(f.value("last", json(nullptr))),
                      shape_of(f.at("rest").get<std::string>())};
        for (const auto& s : f.value("spans", json::array()))
            fam.spans.emplace_back(s.at(0).get<std::uint64_t>(), s.at(1).get<std::uint64_t>());
        w.family = std::move(fam);
    }
    if (j.contains("sum")) w.sum = term_of(j["sum"]);
    return w;
}

int exit_code(const Verdict& v) {
    switch (v.status) {
        case Verdict::Status::Holds: return 0;
        case Verdict::Status::Fails: return 2;
        default: return 3;
    }
}

}  // namespace linord
