#pragma once

#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "evb/classifier.hpp"

namespace evb {

/// Exact display form of a character value: a plain integer when the value is
/// rational (detected by Galois invariance of the lift), otherwise a sum of
/// powers of z, a fixed primitive root of unity of order `order`.
inline std::string render_cyclo(const CycloSum& s, i64 order, i64 field_value, const Fp& F) {
    if (s.empty()) return "0";
    bool rational = true;
    for (i64 t = 2; t < order && rational; ++t) {
        if (std::gcd(t, order) != 1) continue;
        CycloSum mapped;
        for (auto [j, m] : s) mapped.push_back({static_cast<int>((j * t) % order), m});
        std::sort(mapped.begin(), mapped.end());
        if (mapped != s) rational = false;
    }
    if (rational) return std::to_string(F.lift(field_value));
    std::string out;
    for (auto [j, m] : s) {
        if (!out.empty()) out += "+";
        if (m != 1) out += std::to_string(m) + "*";
        if (j == 0) out += "1";
        else if (j == 1) out += "z";
        else out += "z^" + std::to_string(j);
    }
    return out;
}

// ---------------------------------------------------------------------------
// plain-data mirror of a Report (every number an exact integer, every value an
// exact string; JSON round-trips field-for-field)

struct IrrDoc {
    std::string type;
    i64 real_degree = 0;
    i64 cyclotomic_order = 1;
    std::vector<std::string> values;
    bool operator==(const IrrDoc&) const = default;
};

struct FiberComponentDoc {
    i64 mult = 1;
    IrrDoc irr;
    bool operator==(const FiberComponentDoc&) const = default;
};

struct FiberDoc {
    i64 dim = 0;
    std::vector<FiberComponentDoc> components;
    bool operator==(const FiberDoc&) const = default;
};

struct GeneratorDoc {
    std::string name;
    i64 fiber_mult = 1;
    i64 dim = 0;
    bool trivial = false;
    FiberDoc at_one;
    std::optional<FiberDoc> at_mu;
    bool operator==(const GeneratorDoc&) const = default;
};

struct CountDoc {
    i64 m = 0;
    i64 count = 0;
    bool operator==(const CountDoc&) const = default;
};

struct ClassSummaryDoc {
    i64 size = 0;
    i64 element_order = 0;
    bool operator==(const ClassSummaryDoc&) const = default;
};

struct ClassDoc {
    IrrDoc fiber_character;
    std::vector<i64> orbit;
    i64 isotropy_order = 0;
    std::string restricted_image;
    i64 restricted_n = 1;
    i64 e_one = 1, e_mu = 1;
    std::string case_kind;
    i64 fiber_data_multiplicity = 1;
    i64 stab_one_order = 0, stab_mu_order = 0;
    std::vector<GeneratorDoc> generators;
    std::vector<std::string> relations;
    std::vector<CountDoc> counts;
    std::vector<std::string> warnings;
    bool operator==(const ClassDoc&) const = default;
};

struct LineBundleDoc {
    i64 class_index = 0;
    std::vector<std::string> trivial;
    std::vector<std::string> nontrivial;
    bool operator==(const LineBundleDoc&) const = default;
};

struct ReportDocument {
    std::string schema = "evb.report.v1";
    i64 group_order = 1, group_degree = 1, group_class_count = 1, group_exponent = 1;
    std::string image_kind;
    i64 n = 1;
    i64 kernel_order = 1;
    std::string offset = "0/1";
    i64 kernel_exponent = 1;
    std::vector<ClassSummaryDoc> kernel_classes;
    std::vector<ClassDoc> classes;
    LineBundleDoc line_bundles;
    i64 m_bound = 6;
    std::vector<std::string> warnings;
    bool operator==(const ReportDocument&) const = default;
};

// --- json (nlohmann ADL hooks) ---------------------------------------------

inline void to_json(nlohmann::json& j, const IrrDoc& d) {
    j = {{"type", d.type},
         {"real_degree", d.real_degree},
         {"cyclotomic_order", d.cyclotomic_order},
         {"values", d.values}};
}
inline void from_json(const nlohmann::json& j, IrrDoc& d) {
    j.at("type").get_to(d.type);
    j.at("real_degree").get_to(d.real_degree);
    j.at("cyclotomic_order").get_to(d.cyclotomic_order);
    j.at("values").get_to(d.values);
}

inline void to_json(nlohmann::json& j, const FiberComponentDoc& d) {
    j = {{"mult", d.mult}, {"irr", d.irr}};
}
inline void from_json(const nlohmann::json& j, FiberComponentDoc& d) {
    j.at("mult").get_to(d.mult);
    j.at("irr").get_to(d.irr);
}

inline void to_json(nlohmann::json& j, const FiberDoc& d) {
    j = {{"dim", d.dim}, {"components", d.components}};
}
inline void from_json(const nlohmann::json& j, FiberDoc& d) {
    j.at("dim").get_to(d.dim);
    j.at("components").get_to(d.components);
}

inline void to_json(nlohmann::json& j, const GeneratorDoc& d) {
    j = {{"name", d.name},   {"fiber_mult", d.fiber_mult}, {"dim", d.dim},
         {"trivial", d.trivial}, {"at_one", d.at_one}};
    if (d.at_mu) j["at_mu"] = *d.at_mu;
    else j["at_mu"] = nullptr;
}
inline void from_json(const nlohmann::json& j, GeneratorDoc& d) {
    j.at("name").get_to(d.name);
    j.at("fiber_mult").get_to(d.fiber_mult);
    j.at("dim").get_to(d.dim);
    j.at("trivial").get_to(d.trivial);
    j.at("at_one").get_to(d.at_one);
    if (j.at("at_mu").is_null()) d.at_mu.reset();
    else d.at_mu = j.at("at_mu").get<FiberDoc>();
}

inline void to_json(nlohmann::json& j, const CountDoc& d) {
    j = {{"m", d.m}, {"count", d.count}};
}
inline void from_json(const nlohmann::json& j, CountDoc& d) {
    j.at("m").get_to(d.m);
    j.at("count").get_to(d.count);
}

inline void to_json(nlohmann::json& j, const ClassSummaryDoc& d) {
    j = {{"size", d.size}, {"element_order", d.element_order}};
}
inline void from_json(const nlohmann::json& j, ClassSummaryDoc& d) {
    j.at("size").get_to(d.size);
    j.at("element_order").get_to(d.element_order);
}

inline void to_json(nlohmann::json& j, const ClassDoc& d) {
    j = {{"fiber_character", d.fiber_character},
         {"orbit", d.orbit},
         {"isotropy_order", d.isotropy_order},
         {"restricted_image", d.restricted_image},
         {"restricted_n", d.restricted_n},
         {"e_one", d.e_one},
         {"e_mu", d.e_mu},
         {"case", d.case_kind},
         {"fiber_data_multiplicity", d.fiber_data_multiplicity},
         {"stab_one_order", d.stab_one_order},
         {"stab_mu_order", d.stab_mu_order},
         {"generators", d.generators},
         {"relations", d.relations},
         {"counts", d.counts},
         {"warnings", d.warnings}};
}
inline void from_json(const nlohmann::json& j, ClassDoc& d) {
    j.at("fiber_character").get_to(d.fiber_character);
    j.at("orbit").get_to(d.orbit);
    j.at("isotropy_order").get_to(d.isotropy_order);
    j.at("restricted_image").get_to(d.restricted_image);
    j.at("restricted_n").get_to(d.restricted_n);
    j.at("e_one").get_to(d.e_one);
    j.at("e_mu").get_to(d.e_mu);
    j.at("case").get_to(d.case_kind);
    j.at("fiber_data_multiplicity").get_to(d.fiber_data_multiplicity);
    j.at("stab_one_order").get_to(d.stab_one_order);
    j.at("stab_mu_order").get_to(d.stab_mu_order);
    j.at("generators").get_to(d.generators);
    j.at("relations").get_to(d.relations);
    j.at("counts").get_to(d.counts);
    j.at("warnings").get_to(d.warnings);
}

inline void to_json(nlohmann::json& j, const LineBundleDoc& d) {
    j = {{"class_index", d.class_index}, {"trivial", d.trivial}, {"nontrivial", d.nontrivial}};
}
inline void from_json(const nlohmann::json& j, LineBundleDoc& d) {
    j.at("class_index").get_to(d.class_index);
    j.at("trivial").get_to(d.trivial);
    j.at("nontrivial").get_to(d.nontrivial);
}

inline void to_json(nlohmann::json& j, const ReportDocument& d) {
    j = {{"schema", d.schema},
         {"group", {{"order", d.group_order},
                    {"degree", d.group_degree},
                    {"class_count", d.group_class_count},
                    {"exponent", d.group_exponent}}},
         {"action", {{"image_kind", d.image_kind},
                     {"n", d.n},
                     {"kernel_order", d.kernel_order},
                     {"offset", d.offset}}},
         {"kernel_exponent", d.kernel_exponent},
         {"kernel_classes", d.kernel_classes},
         {"classes", d.classes},
         {"line_bundles", d.line_bundles},
         {"m_bound", d.m_bound},
         {"warnings", d.warnings}};
}
inline void from_json(const nlohmann::json& j, ReportDocument& d) {
    j.at("schema").get_to(d.schema);
    j.at("group").at("order").get_to(d.group_order);
    j.at("group").at("degree").get_to(d.group_degree);
    j.at("group").at("class_count").get_to(d.group_class_count);
    j.at("group").at("exponent").get_to(d.group_exponent);
    j.at("action").at("image_kind").get_to(d.image_kind);
    j.at("action").at("n").get_to(d.n);
    j.at("action").at("kernel_order").get_to(d.kernel_order);
    j.at("action").at("offset").get_to(d.offset);
    j.at("kernel_exponent").get_to(d.kernel_exponent);
    j.at("kernel_classes").get_to(d.kernel_classes);
    j.at("classes").get_to(d.classes);
    j.at("line_bundles").get_to(d.line_bundles);
    j.at("m_bound").get_to(d.m_bound);
    j.at("warnings").get_to(d.warnings);
}

// --- document construction ---------------------------------------------------

inline IrrDoc irr_doc(const RealTable& t, int irr) {
    IrrDoc d;
    d.type = schur_type_name(t.reals[irr].type);
    d.real_degree = t.reals[irr].real_degree;
    d.cyclotomic_order = t.ct.exponent;
    for (int k = 0; k < t.ct.class_count(); ++k)
        d.values.push_back(
            render_cyclo(t.reals[irr].lift[k], t.ct.exponent, t.reals[irr].values[k], t.ct.F));
    return d;
}

inline FiberDoc fiber_doc(const std::vector<FiberComponent>& comps, const RealTable& t) {
    FiberDoc d;
    for (const auto& c : comps) {
        d.dim += static_cast<i64>(c.mult) * t.reals[c.irr_index].real_degree;
        d.components.push_back({c.mult, irr_doc(t, c.irr_index)});
    }
    return d;
}

inline ReportDocument build_document(const Report& rep) {
    ReportDocument d;
    d.group_order = rep.group->order();
    d.group_degree = rep.group->degree();
    d.group_class_count = rep.group->class_count();
    d.group_exponent = rep.group->exponent();
    d.image_kind = image_kind_name(rep.action.kind);
    d.n = rep.action.n;
    d.kernel_order = rep.action.kernel.order();
    d.offset = rep.action.offset.str();
    const auto& H = *rep.action.kernel.own;
    d.kernel_exponent = H.exponent();
    for (int c = 0; c < H.class_count(); ++c)
        d.kernel_classes.push_back({H.class_size(c), H.element_order(H.class_rep(c))});
    d.m_bound = rep.m_bound;

    for (const auto& cls : rep.classes) {
        ClassDoc cd;
        cd.fiber_character = irr_doc(*rep.h_table, cls.chi_index);
        for (int o : cls.orbit) cd.orbit.push_back(o);
        cd.isotropy_order = cls.isotropy.order();
        cd.restricted_image = image_kind_name(cls.restricted.kind);
        cd.restricted_n = cls.restricted.n;
        cd.e_one = cls.e_one;
        cd.e_mu = cls.e_mu;
        cd.case_kind = case_kind_name(cls.kind);
        cd.fiber_data_multiplicity = cls.fiber_data_multiplicity;
        const bool dihedral = cls.restricted.kind == ImageKind::Dihedral;
        const RealTable& t_one =
            dihedral ? rep.cache->get(cls.restricted.stab_one->own) : *rep.h_table;
        const RealTable* t_mu =
            dihedral ? &rep.cache->get(cls.restricted.stab_mu->own) : nullptr;
        cd.stab_one_order = dihedral ? cls.restricted.stab_one->order()
                                     : cls.restricted.kernel.order();
        cd.stab_mu_order = dihedral ? cls.restricted.stab_mu->order() : 0;
        for (const auto& g : cls.presentation.generators) {
            GeneratorDoc gd;
            gd.name = g.name;
            gd.fiber_mult = g.fiber_mult;
            gd.dim = static_cast<i64>(g.fiber_mult) *
                     rep.h_table->reals[cls.chi_index].real_degree;
            gd.trivial = g.trivial;
            gd.at_one = fiber_doc(g.at_one, t_one);
            check_internal(gd.at_one.dim == gd.dim, "fiber dimension mismatch at z = 1");
            if (dihedral) {
                gd.at_mu = fiber_doc(g.at_mu, *t_mu);
                check_internal(gd.at_mu->dim == gd.dim, "fiber dimension mismatch at z = mu");
            }
            cd.generators.push_back(std::move(gd));
        }
        for (const auto& rel : cls.presentation.relations)
            cd.relations.push_back(relation_string(cls.presentation, rel));
        for (int m = 1; m <= rep.m_bound; ++m)
            cd.counts.push_back({m, cls.counts[m - 1]});
        cd.warnings = cls.warnings;
        d.classes.push_back(std::move(cd));
    }

    d.line_bundles.class_index = rep.line_bundle_class;
    for (const auto& g : rep.classes[rep.line_bundle_class].presentation.generators)
        (g.trivial ? d.line_bundles.trivial : d.line_bundles.nontrivial).push_back(g.name);
    return d;
}

// --- renderers ---------------------------------------------------------------

inline std::string render_json(const ReportDocument& d) {
    return nlohmann::json(d).dump(2) + "\n";
}

inline ReportDocument parse_report(const std::string& text) {
    return nlohmann::json::parse(text).get<ReportDocument>();
}

inline std::string render_text(const ReportDocument& d) {
    std::ostringstream os;
    os << "equivariant real vector bundles over the circle\n";
    os << "group: order " << d.group_order << ", permutation degree " << d.group_degree
       << ", " << d.group_class_count << " conjugacy classes, exponent " << d.group_exponent
       << "\n";
    os << "action: image " << d.image_kind << ", n = " << d.n << ", |H| = " << d.kernel_order
       << ", offset " << d.offset << "\n";
    os << "kernel classes (size, element order):";
    for (const auto& c : d.kernel_classes)
        os << " (" << c.size << "," << c.element_order << ")";
    os << "\n";
    os << "note: z denotes a primitive root of unity; its order is listed per character\n";
    os << "\n";
    os << "line bundles (class " << d.line_bundles.class_index + 1 << "): trivial:";
    for (const auto& s : d.line_bundles.trivial) os << " " << s;
    os << "; nontrivial:";
    for (const auto& s : d.line_bundles.nontrivial) os << " " << s;
    os << "\n\n";

    auto print_fiber = [&os](const FiberDoc& f) {
        os << "dim " << f.dim << ":";
        for (const auto& c : f.components) {
            os << " " << c.mult << "*(" << c.irr.type << ", deg " << c.irr.real_degree
               << ", z-order " << c.irr.cyclotomic_order << ", values [";
            for (std::size_t i = 0; i < c.irr.values.size(); ++i) {
                if (i) os << ", ";
                os << c.irr.values[i];
            }
            os << "])";
        }
    };

    for (std::size_t ci = 0; ci < d.classes.size(); ++ci) {
        const auto& c = d.classes[ci];
        os << "class " << ci + 1 << " of " << d.classes.size() << "\n";
        os << "  fiber character: " << c.fiber_character.type << " type, real degree "
           << c.fiber_character.real_degree << ", z-order " << c.fiber_character.cyclotomic_order
           << ", values [";
        for (std::size_t i = 0; i < c.fiber_character.values.size(); ++i) {
            if (i) os << ", ";
            os << c.fiber_character.values[i];
        }
        os << "]\n";
        os << "  orbit in Irr(H): {";
        for (std::size_t i = 0; i < c.orbit.size(); ++i) {
            if (i) os << ", ";
            os << c.orbit[i] + 1;
        }
        os << "}, isotropy order " << c.isotropy_order << "\n";
        os << "  restricted image: " << c.restricted_image << ", n = " << c.restricted_n << "\n";
        os << "  extension counts (e_1, e_mu) = (" << c.e_one << ", " << c.e_mu << "), case "
           << c.case_kind << ", bundles per fiber datum " << c.fiber_data_multiplicity << "\n";
        os << "  stabilizer orders: |K_1| = " << c.stab_one_order;
        if (c.stab_mu_order > 0) os << ", |K_mu| = " << c.stab_mu_order;
        os << "\n";
        os << "  generators:\n";
        for (const auto& g : c.generators) {
            os << "    " << g.name << ": fiber " << g.fiber_mult << "*chi, dim " << g.dim << ", "
               << (g.trivial ? "trivial" : "nontrivial") << "\n";
            os << "      at z=1:  ";
            print_fiber(g.at_one);
            os << "\n";
            if (g.at_mu) {
                os << "      at z=mu: ";
                print_fiber(*g.at_mu);
                os << "\n";
            }
        }
        os << "  relations:";
        if (c.relations.empty()) os << " none";
        for (const auto& r : c.relations) os << " " << r;
        os << "\n";
        os << "  bundle counts:";
        for (const auto& n : c.counts) os << " N(" << n.m << ")=" << n.count;
        os << "\n";
        for (const auto& w : c.warnings) os << "  warning: " << w << "\n";
        os << "\n";
    }
    for (const auto& w : d.warnings) os << "warning: " << w << "\n";
    return os.str();
}

// --- character table dumps ---------------------------------------------------

inline nlohmann::json chartable_json_one(const RealTable& t, const std::string& label) {
    const auto& G = *t.ct.group;
    nlohmann::json classes = nlohmann::json::array();
    for (int c = 0; c < G.class_count(); ++c)
        classes.push_back({{"size", G.class_size(c)},
                           {"element_order", G.element_order(G.class_rep(c))}});
    nlohmann::json cplx = nlohmann::json::array();
    for (const auto& ch : t.ct.chars) {
        std::vector<std::string> vals;
        for (int k = 0; k < G.class_count(); ++k)
            vals.push_back(render_cyclo(ch.lift[k], t.ct.exponent, ch.values[k], t.ct.F));
        cplx.push_back({{"degree", ch.degree}, {"fs_indicator", ch.fs}, {"values", vals}});
    }
    nlohmann::json reals = nlohmann::json::array();
    for (int i = 0; i < t.real_count(); ++i) {
        const auto d = irr_doc(t, i);
        reals.push_back({{"type", d.type},
                         {"real_degree", d.real_degree},
                         {"schur_dim", t.reals[i].schur_dim},
                         {"values", d.values}});
    }
    return {{"label", label},
            {"order", G.order()},
            {"exponent", G.exponent()},
            {"cyclotomic_order", t.ct.exponent},
            {"classes", classes},
            {"complex_characters", cplx},
            {"real_irreducibles", reals}};
}

inline std::string chartable_text_one(const RealTable& t, const std::string& label) {
    const auto j = chartable_json_one(t, label);
    std::ostringstream os;
    os << "character tables of " << label << " (order " << j["order"] << ", exponent "
       << j["exponent"] << ")\n";
    os << "classes (size, element order):";
    for (const auto& c : j["classes"])
        os << " (" << c["size"] << "," << c["element_order"] << ")";
    os << "\n";
    os << "complex irreducibles (z of order " << j["cyclotomic_order"] << "):\n";
    for (const auto& ch : j["complex_characters"]) {
        os << "  degree " << ch["degree"] << ", fs " << ch["fs_indicator"] << ", values [";
        bool first = true;
        for (const auto& v : ch["values"]) {
            if (!first) os << ", ";
            os << v.get<std::string>();
            first = false;
        }
        os << "]\n";
    }
    os << "real irreducibles:\n";
    for (const auto& ch : j["real_irreducibles"]) {
        os << "  " << ch["type"].get<std::string>() << ", real degree " << ch["real_degree"]
           << ", schur dim " << ch["schur_dim"] << ", values [";
        bool first = true;
        for (const auto& v : ch["values"]) {
            if (!first) os << ", ";
            os << v.get<std::string>();
            first = false;
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace evb
