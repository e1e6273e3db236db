#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "evb/evb.hpp"

namespace {

constexpr int kExitInput = 1;
constexpr int kExitInternal = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw evb::input_error("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct LoadedSpec {
    evb::InputSpec spec;
    evb::GroupPtr group;
};

LoadedSpec load(const std::string& path) {
    LoadedSpec l;
    l.spec = evb::parse_input(read_file(path));
    l.group = evb::group_from_generators(l.spec.degree, l.spec.generators);
    return l;
}

int cmd_classify(const std::string& path, std::string format, int m_bound) {
    auto l = load(path);
    if (format.empty()) format = l.spec.format;
    if (m_bound <= 0) m_bound = l.spec.m_bound;
    const auto report = evb::classify(l.group, l.spec.rho, m_bound);
    const auto doc = evb::build_document(report);
    if (format == "json") std::cout << evb::render_json(doc);
    else std::cout << evb::render_text(doc);
    return 0;
}

int cmd_chartable(const std::string& path, std::string format) {
    auto l = load(path);
    if (format.empty()) format = "text";
    const auto action = evb::canonical_form(evb::build_action(l.group, l.spec.rho));
    evb::TableCache cache;
    cache.p = evb::find_character_prime(l.group->exponent(), 2 * l.group->order());
    const auto& tg = cache.get(l.group);
    const auto& th = cache.get(action.kernel.own);
    if (format == "json") {
        nlohmann::json j{{"group", evb::chartable_json_one(tg, "G")},
                         {"kernel", evb::chartable_json_one(th, "H")}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << evb::chartable_text_one(tg, "G");
        std::cout << "\n" << evb::chartable_text_one(th, "H = kernel of the action");
    }
    return 0;
}

int cmd_check(bool full) {
    const auto sc = evb::run_selfcheck(full);
    bool ok = true;
    for (const auto& s : sc.suites) {
        std::cout << "suite " << s.name << ": " << s.checks << " checks, " << s.failures.size()
                  << " failures\n";
        if (!s.failures.empty()) ok = false;
    }
    if (!ok) {
        for (const auto& s : sc.suites) {
            if (s.failures.empty()) continue;
            std::cout << "first counterexample (" << s.name << "): " << s.failures.front() << "\n";
            break;
        }
        return kExitInternal;
    }
    std::cout << "all suites passed\n";
    return 0;
}

int cmd_enumerate(const std::string& path, int m_bound) {
    auto l = load(path);
    const auto report = evb::classify(l.group, l.spec.rho, m_bound);
    bool ok = true;
    for (std::size_t ci = 0; ci < report.classes.size(); ++ci) {
        const auto& cls = report.classes[ci];
        std::cout << "class " << ci + 1 << " (" << evb::case_kind_name(cls.kind) << ", e=("
                  << cls.e_one << "," << cls.e_mu << "))\n";
        for (int m = 1; m <= m_bound; ++m) {
            const auto formula = evb::count_classes(cls.kind, cls.e_one, cls.e_mu, m);
            const auto brute = evb::enumerate_count(cls.presentation, m);
            std::cout << "  m=" << m << ": closed form " << formula << ", enumeration " << brute
                      << (formula == brute ? "" : "  << MISMATCH") << "\n";
            if (formula != brute) ok = false;
        }
    }
    if (!ok) {
        std::cout << "enumeration mismatch: internal inconsistency\n";
        return kExitInternal;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification of equivariant real vector bundles over the circle"};
    app.require_subcommand(1);

    std::string classify_file, chartable_file, enum_file;
    std::string format;
    int m_bound = 0, enum_m = 6;
    bool full = false;

    auto* classify = app.add_subcommand("classify", "classify bundles for an action document");
    classify->add_option("file", classify_file, "input document")->required();
    classify->add_option("--format", format, "text or json");
    classify->add_option("--m-bound", m_bound, "largest fiber multiple to count");

    auto* chartable = app.add_subcommand("chartable", "dump character tables of G and its kernel");
    chartable->add_option("file", chartable_file, "input document")->required();
    chartable->add_option("--format", format, "text or json");

    auto* check = app.add_subcommand("check", "run the built-in invariant suites");
    check->add_flag("--full", full, "include the larger group list");

    auto* enumerate = app.add_subcommand("enumerate",
                                         "compare closed-form counts with brute enumeration");
    enumerate->add_option("file", enum_file, "input document")->required();
    enumerate->add_option("--m", enum_m, "largest fiber multiple");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed()) return cmd_classify(classify_file, format, m_bound);
        if (chartable->parsed()) return cmd_chartable(chartable_file, format);
        if (check->parsed()) return cmd_check(full);
        if (enumerate->parsed()) return cmd_enumerate(enum_file, enum_m);
    } catch (const evb::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const evb::internal_error& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
