#pragma once

// JSON forms of series, weights, group elements and check results.

#include <json.hpp>

#include "howe/kostant.hpp"
#include "howe/series.hpp"
#include "howe/weights.hpp"

namespace howe {

using nlohmann::json;

inline std::string exp_str(int32_t doubled) {
    if (doubled % 2 == 0) return std::to_string(doubled / 2);
    return std::to_string(doubled) + "/2";
}

inline json series_to_json(const Series& s) {
    json alphabets = json::array();
    const Context& ctx = *s.ctx();
    for (int i = 0; i < ctx.nvars(); ++i) {
        const VarInfo& v = ctx.var(i);
        alphabets.push_back({{"name", v.name},
                             {"kind", v.kind == VarKind::module_var
                                          ? "module"
                                          : (v.kind == VarKind::group_var ? "group" : "sign")},
                             {"unit", v.half ? "1/2" : "1"}});
    }
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) {
        json expo = json::object();
        for (int i = 0; i < ctx.nvars(); ++i)
            if (e[static_cast<std::size_t>(i)] != 0)
                expo[ctx.var(i).name] = exp_str(e[static_cast<std::size_t>(i)]);
        terms.push_back({{"exp", expo}, {"coeff", rat_str(c)}});
    }
    return {{"alphabets", alphabets},
            {"degree_bound", s.degree_bound() >= kNoTruncation / 8 ? json(nullptr) : json(s.degree_bound())},
            {"terms", terms}};
}

inline Series series_from_json(const json& j) {
    auto ctx = std::make_shared<Context>();
    for (const auto& a : j.at("alphabets")) {
        std::string kind = a.at("kind").get<std::string>();
        VarKind k = kind == "module" ? VarKind::module_var
                                     : (kind == "group" ? VarKind::group_var : VarKind::sign_var);
        ctx->add_var(a.at("name").get<std::string>(), k, a.at("unit").get<std::string>() == "1/2");
    }
    long D = j.at("degree_bound").is_null() ? kNoTruncation / 4 : j.at("degree_bound").get<long>();
    Series s(ctx, D);
    for (const auto& t : j.at("terms")) {
        Expo e = s.zero_expo();
        for (const auto& [name, val] : t.at("exp").items()) {
            int id = ctx->find(name);
            require(id >= 0, "unknown variable in series JSON: " + name);
            std::string v = val.get<std::string>();
            auto slash = v.find('/');
            int32_t doubled = slash == std::string::npos ? 2 * std::stol(v) : std::stol(v.substr(0, slash));
            e[static_cast<std::size_t>(id)] = doubled;
        }
        s.add_term(e, rat_parse(t.at("coeff").get<std::string>()));
    }
    return s;
}

inline json weight_to_json(const WeightCoords& w) {
    json coords = json::object();
    for (const auto& [i, v] : w.coords) coords[std::to_string(i)] = rat_str(v);
    return {{"tag", tag_name(w.tag)}, {"level", rat_str(w.level)}, {"eps", coords}};
}

inline json super_weight_to_json(const SuperWeight& w) {
    json eps = json::object(), del = json::object();
    for (const auto& [i, v] : w.eps) eps[std::to_string(i)] = rat_str(v);
    for (const auto& [j, v] : w.del) del[std::to_string(j)] = rat_str(v);
    return {{"tag", tag_name(w.tag.x)},
            {"sizes", {{"p", w.tag.p}, {"q", w.tag.q}, {"m", w.tag.m}, {"n", w.tag.n}}},
            {"level", rat_str(w.level)},
            {"eps", eps},
            {"delta", del}};
}

inline json contributor_to_json(const Contributor& c, bool type_a, bool paired) {
    json out = {{"w", c.w.one_line()}, {"k", c.k}, {"kept", c.kept}};
    if (type_a) {
        out["lambda_w_plus"] = c.lw.str();
        out["lambda_w_minus"] = c.lw_minus.str();
    } else {
        out["lambda_w"] = c.lw.str();
        if (paired) out["lambda_w_tilde"] = c.lw_minus.str();
    }
    return out;
}

inline json check_result_to_json(const CheckResult& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    json out = {{"check", r.check}, {"params", params}, {"degree", r.degree}, {"ok", r.ok}};
    if (r.mismatch)
        out["first_mismatch"] = {{"monomial", r.mismatch->monomial},
                                 {"lhs", r.mismatch->lhs},
                                 {"rhs", r.mismatch->rhs}};
    else
        out["first_mismatch"] = nullptr;
    if (!r.contributors.empty()) out["contributors"] = r.contributors;
    if (!r.error.empty()) out["error"] = r.error;
    return out;
}

}  // namespace howe
