#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "evb/errors.hpp"
#include "evb/orthogonal.hpp"
#include "evb/permutation.hpp"

namespace evb {

/// Parsed classification request.  Document grammar (JSON):
///   {
///     "group":   { "degree": int, "generators": [[1-based images], ...] },
///     "rho":     [ {"rotation": "p/q"} | {"reflection": "p/q"}, ... ],
///     "options": { "m_bound": int, "format": "text"|"json" }      // optional
///   }
/// Rationals are "p/q" or "p" decimal strings, reduced and taken mod 1.
struct InputSpec {
    int degree = 1;
    std::vector<Permutation> generators;
    std::vector<OrthogonalElement> rho;
    int m_bound = 6;
    std::string format = "text";
};

inline Rational parse_rational(const std::string& s, const std::string& where) {
    const auto bad = [&]() -> input_error {
        return input_error(where + ": malformed rational '" + s + "'");
    };
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const long long n = std::stoll(s, &used);
            if (used != s.size()) throw bad();
            return Rational(n, 1).mod1();
        }
        const long long n = std::stoll(s.substr(0, slash), &used);
        if (used != slash) throw bad();
        const long long d = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1 || d <= 0) throw bad();
        return Rational(n, d).mod1();
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
}

inline InputSpec parse_input(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(std::string("document is not valid JSON: ") + e.what());
    }
    InputSpec spec;
    check_input(doc.is_object() && doc.contains("group"), "missing 'group' section");
    const auto& grp = doc["group"];
    check_input(grp.is_object() && grp.contains("degree") && grp["degree"].is_number_integer(),
                "group.degree: missing or not an integer");
    spec.degree = grp["degree"].get<int>();
    check_input(spec.degree >= 1 && spec.degree <= 4096, "group.degree: out of range [1, 4096]");

    check_input(grp.contains("generators") && grp["generators"].is_array(),
                "group.generators: missing or not an array");
    for (std::size_t i = 0; i < grp["generators"].size(); ++i) {
        const auto& ga = grp["generators"][i];
        const std::string where = "group.generators[" + std::to_string(i) + "]";
        check_input(ga.is_array() && ga.size() == static_cast<std::size_t>(spec.degree),
                    where + ": expected an array of " + std::to_string(spec.degree) + " images");
        Permutation p;
        p.img.reserve(spec.degree);
        for (const auto& v : ga) {
            check_input(v.is_number_integer(), where + ": images must be integers");
            const int img = v.get<int>();
            check_input(img >= 1 && img <= spec.degree,
                        where + ": image " + std::to_string(img) + " out of range");
            p.img.push_back(img - 1);
        }
        check_input(p.is_bijection(), where + ": not a bijection");
        spec.generators.push_back(std::move(p));
    }

    check_input(doc.contains("rho") && doc["rho"].is_array(), "missing 'rho' array");
    check_input(doc["rho"].size() == spec.generators.size(),
                "rho: entry count must match the generator count");
    for (std::size_t i = 0; i < doc["rho"].size(); ++i) {
        const auto& e = doc["rho"][i];
        const std::string where = "rho[" + std::to_string(i) + "]";
        check_input(e.is_object(), where + ": expected an object");
        const bool rot = e.contains("rotation");
        const bool refl = e.contains("reflection");
        check_input(!(rot && refl), where + ": ambiguous O(2) element");
        check_input(rot || refl, where + ": need a 'rotation' or 'reflection' key");
        const auto& val = rot ? e["rotation"] : e["reflection"];
        check_input(val.is_string(), where + ": angle must be a rational string");
        const Rational q = parse_rational(val.get<std::string>(), where);
        spec.rho.push_back(rot ? OrthogonalElement::rotation(q)
                               : OrthogonalElement::reflection(q));
    }

    if (doc.contains("options")) {
        const auto& opt = doc["options"];
        check_input(opt.is_object(), "options: expected an object");
        if (opt.contains("m_bound")) {
            check_input(opt["m_bound"].is_number_integer(), "options.m_bound: not an integer");
            spec.m_bound = opt["m_bound"].get<int>();
            check_input(spec.m_bound >= 1 && spec.m_bound <= 64,
                        "options.m_bound: out of range [1, 64]");
        }
        if (opt.contains("format")) {
            check_input(opt["format"].is_string(), "options.format: not a string");
            spec.format = opt["format"].get<std::string>();
            check_input(spec.format == "text" || spec.format == "json",
                        "options.format: expected 'text' or 'json'");
        }
    }
    return spec;
}

} // namespace evb
