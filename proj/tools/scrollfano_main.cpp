#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scrollfano/census.hpp"
#include "scrollfano/logfano.hpp"
#include "scrollfano/parse.hpp"
#include "scrollfano/sections.hpp"

namespace sf = scrollfano;
using ordered_json = nlohmann::ordered_json;

namespace {

// Exit codes: 0 success/affirmative, 1 negative verdict, 2 usage or parse
// error, 3 internal cross-check failure.
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCrossCheck = 3;

// All numeric payload values are decimal strings; counts overflow 64 bits.
std::string dec(const sf::Int& v) { return v.str(); }
std::string dec(std::int64_t v) { return std::to_string(v); }

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::string elapsed_ms() const {
        const auto d = std::chrono::steady_clock::now() - start_;
        return std::to_string(
            std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void emit(const std::string& command, const ordered_json& inputs,
          const ordered_json& results, const Timer& timer) {
    ordered_json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["results"] = results;
    doc["timing_ms"] = timer.elapsed_ms();
    std::cout << doc.dump(2) << "\n";
}

std::string status_string(const sf::MemberStatus& status) {
    switch (status.kind) {
        case sf::MemberStatus::Kind::NoMember: return "no-member";
        case sf::MemberStatus::Kind::ForcedNonReduced: return "forced-non-reduced";
        case sf::MemberStatus::Kind::ForcedDecomposition: return "forced-decomposition";
        case sf::MemberStatus::Kind::Unconstrained: return "unconstrained";
    }
    return {};
}

ordered_json cone_generators(const sf::ScrollVariety& x, bool effective) {
    ordered_json arr = ordered_json::array();
    const int rank = x.base().pic_rank();
    for (int j = 0; j < rank; ++j) {
        sf::Vec h(static_cast<std::size_t>(rank), 0);
        h[static_cast<std::size_t>(j)] = 1;
        arr.push_back(sf::to_string(sf::DivisorClass{h, 0}));
    }
    if (!effective) {
        arr.push_back(sf::to_string(
            sf::DivisorClass{sf::Vec(static_cast<std::size_t>(rank), 0), 1}));
        return arr;
    }
    // Invariant subbundle divisors generate the rest of the effective cone.
    std::vector<std::string> seen;
    for (const sf::Vec& b : x.twists()) {
        sf::Vec m(b.size());
        for (std::size_t j = 0; j < b.size(); ++j) m[j] = -b[j];
        std::string lit = sf::to_string(sf::DivisorClass{m, 1});
        if (std::find(seen.begin(), seen.end(), lit) == seen.end()) {
            seen.push_back(lit);
            arr.push_back(lit);
        }
    }
    return arr;
}

// Boundary lists look like "D2+D3", "H", "H1+(0;1)", "(1;1)". Subbundle
// indices refer to the summands as written, before normalization reorders
// them.
std::vector<sf::BoundarySpec> parse_boundary_list(const sf::ParsedVariety& parsed,
                                                  const std::string& text) {
    const sf::ScrollVariety& x = parsed.variety;
    std::vector<sf::BoundarySpec> specs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find('+', pos);
        if (next == std::string::npos) next = text.size();
        const std::string item = text.substr(pos, next - pos);
        if (item.empty()) throw sf::ParseError("empty boundary component", pos);
        if (item[0] == 'D') {
            const int written = std::stoi(item.substr(1));
            if (written < 0 || written > x.t())
                throw sf::ParseError("subbundle index out of range", pos);
            specs.push_back(sf::BoundarySpec::sub_bundle(
                parsed.summand_order[static_cast<std::size_t>(written)]));
        } else if (item[0] == 'H') {
            sf::Vec h(static_cast<std::size_t>(x.base().pic_rank()), 0);
            const int j = item.size() > 1 ? std::stoi(item.substr(1)) : 1;
            if (j < 1 || j > x.base().pic_rank())
                throw sf::ParseError("pullback index out of range", pos);
            h[static_cast<std::size_t>(j - 1)] = 1;
            specs.push_back(sf::BoundarySpec::base_pullback(std::move(h)));
        } else {
            specs.push_back(sf::BoundarySpec::general_member(
                sf::parse_class(item, x.base().pic_rank())));
        }
        pos = next + 1;
    }
    if (specs.empty()) throw sf::ParseError("boundary must be nonempty", 0);
    return specs;
}

ordered_json pair_report_json(const sf::ScrollVariety& x, const sf::PairReport& report) {
    ordered_json j;
    j["adjoint_class"] = sf::to_string(report.adjoint_class);
    j["is_log_fano"] = report.is_log_fano;
    j["index"] = dec(report.index);
    if (report.pseudoindex)
        j["pseudoindex"] = dec(*report.pseudoindex);
    else
        j["pseudoindex"] = nullptr;
    j["fundamental_class"] = sf::to_string(report.fundamental_class);
    if (report.witness) {
        ordered_json w;
        w["curve"] = sf::to_string(*report.witness);
        w["degree"] = dec(sf::degree(x, report.adjoint_class, *report.witness));
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

int cmd_info(const std::string& variety_str) {
    Timer timer;
    const sf::ScrollVariety x = sf::parse_variety(variety_str).variety;
    ordered_json inputs{{"variety", variety_str}};
    ordered_json results;
    results["variety"] = sf::to_string(x);
    results["dim"] = dec(x.dim());
    results["picard_rank"] = dec(x.picard_rank());
    results["anticanonical"] = sf::to_string(sf::anticanonical(x));
    results["nef_cone_generators"] = cone_generators(x, false);
    results["effective_cone_generators"] = cone_generators(x, true);
    emit("info", inputs, results, timer);
    return kExitOk;
}

int cmd_h0(const std::string& variety_str, const std::string& class_str,
           const std::string& method) {
    Timer timer;
    const sf::ParsedVariety parsed = sf::parse_variety(variety_str);
    const sf::ScrollVariety& x = parsed.variety;
    sf::DivisorClass cls = sf::transport_class(
        sf::parse_class(class_str, x.base().pic_rank()), parsed.shift);

    ordered_json inputs{{"variety", variety_str}, {"class", class_str}, {"method", method}};
    ordered_json results;
    bool agree = true;
    if (method == "pushforward" || method == "both") {
        results["count_pushforward"] = dec(sf::h0_scroll(x, cls));
    }
    if (method == "lattice" || method == "both") {
        if (x.base().kind() != sf::BaseKind::ProjSpace) {
            std::cerr << "error: the lattice method needs a projective-space base\n";
            return kExitUsage;
        }
        // Represent the class as n D_t + d H, the standard component form.
        std::vector<std::int64_t> c(static_cast<std::size_t>(x.t()), 0);
        c.back() = cls.fiber_part;
        const std::int64_t a_t = x.twists().back()[0];
        results["count_lattice"] =
            dec(sf::h0_lattice(x, c, cls.base_part[0] + cls.fiber_part * a_t));
    }
    if (method == "both") {
        agree = results["count_pushforward"] == results["count_lattice"];
        results["agree"] = agree;
        results["count"] = results["count_pushforward"];
    } else {
        results["count"] = method == "lattice" ? results["count_lattice"]
                                               : results["count_pushforward"];
    }
    emit("h0", inputs, results, timer);
    return agree ? kExitOk : kExitCrossCheck;
}

int cmd_members(const std::string& variety_str, const std::string& class_str) {
    Timer timer;
    const sf::ParsedVariety parsed = sf::parse_variety(variety_str);
    const sf::ScrollVariety& x = parsed.variety;
    sf::DivisorClass cls = sf::transport_class(
        sf::parse_class(class_str, x.base().pic_rank()), parsed.shift);

    const sf::MonomialSummary summary = sf::monomial_summary(x, cls);
    const sf::MemberStatus status = sf::member_status(x, cls);

    ordered_json inputs{{"variety", variety_str}, {"class", class_str}};
    ordered_json results;
    results["class"] = sf::to_string(cls);
    results["count"] = dec(summary.count);
    ordered_json forced = ordered_json::array();
    for (std::int64_t mu : summary.forced_multiplicities) forced.push_back(dec(mu));
    results["forced_multiplicities"] = forced;
    results["residual_class"] = sf::to_string(summary.residual_class);
    results["status"] = status_string(status);
    ordered_json parts = ordered_json::array();
    for (const sf::DivisorClass& part : status.parts) parts.push_back(sf::to_string(part));
    results["parts"] = parts;
    results["snc_member_exists"] = sf::snc_member_exists(x, cls);
    emit("members", inputs, results, timer);
    return kExitOk;
}

int cmd_check(const std::string& variety_str, const std::string& boundary_str) {
    Timer timer;
    const sf::ParsedVariety parsed = sf::parse_variety(variety_str);
    const sf::ScrollVariety& x = parsed.variety;
    std::vector<sf::BoundarySpec> specs = parse_boundary_list(parsed, boundary_str);
    for (sf::BoundarySpec& spec : specs)
        if (spec.kind == sf::BoundarySpec::Kind::GeneralMember)
            spec.cls = sf::transport_class(spec.cls, parsed.shift);
    sf::LogFanoPair pair(x, std::move(specs));
    const sf::PairReport report = sf::check_pair(pair);

    ordered_json inputs{{"variety", variety_str}, {"boundary", boundary_str}};
    ordered_json results;
    results["variety"] = sf::to_string(x);
    ordered_json comps = ordered_json::array();
    for (const sf::BoundarySpec& spec : pair.boundary) {
        ordered_json c;
        c["component"] = spec.describe();
        c["class"] = sf::to_string(spec.class_on(x));
        comps.push_back(c);
    }
    results["boundary_components"] = comps;
    results["boundary_class"] = sf::to_string(pair.boundary_class());
    results["report"] = pair_report_json(x, report);
    emit("check", inputs, results, timer);
    return report.is_log_fano ? kExitOk : kExitNegative;
}

ordered_json family_params_json(const sf::FamilyId id, const sf::FamilyParams& p) {
    ordered_json j;
    j["r"] = dec(p.r);
    switch (id) {
        case sf::FamilyId::TwoRMinusOne:
        case sf::FamilyId::FanoQ:
        case sf::FamilyId::RThree:
        case sf::FamilyId::Tp:
        case sf::FamilyId::ZeroOneBig:
        case sf::FamilyId::ZeroZeroBig:
            j["m"] = dec(p.m);
            break;
        case sf::FamilyId::Kayaku:
        case sf::FamilyId::RTwo:
            j["m1"] = dec(p.m1);
            j["m2"] = dec(p.m2);
            break;
        default: break;
    }
    return j;
}

int cmd_gallery(int r, std::int64_t max_param) {
    Timer timer;
    ordered_json inputs{{"r", dec(r)}, {"max_twist", dec(max_param)}};
    ordered_json instances = ordered_json::array();
    bool all_ok = true;
    for (const sf::FamilyInstance& inst : sf::gallery_instances(r, max_param)) {
        sf::FamilyReport report = sf::verify_family(inst);
        ordered_json j;
        j["family"] = sf::family_id_string(inst.id);
        j["params"] = family_params_json(inst.id, inst.params);
        if (inst.pair) j["variety"] = sf::to_string(inst.pair->x);
        j["expected_dim_linear_system"] = dec(inst.expected.dim_linear_system);
        if (report.computed_dim_linear_system)
            j["dim_linear_system"] = dec(*report.computed_dim_linear_system);
        j["ok"] = report.ok;
        if (!report.ok) j["failures"] = report.failures;
        instances.push_back(j);
        all_ok = all_ok && report.ok;
    }
    ordered_json results;
    results["instances"] = instances;
    results["all_ok"] = all_ok;
    emit("gallery", inputs, results, timer);
    return all_ok ? kExitOk : kExitCrossCheck;
}

std::string census_markdown(const sf::CensusQuery& query,
                            const std::vector<sf::CensusRow>& rows,
                            const sf::TableDiff& diff) {
    std::ostringstream out;
    out << "# census n=" << query.n << " "
        << (query.mode == sf::CensusMode::IndexAtLeast ? "index" : "pseudoindex")
        << ">=" << query.bound << " max-twist=" << query.twist_cap << "\n\n";
    out << "| No. | X | D |\n";
    out << "| --- | --- | --- |\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << "| " << (i + 1) << " | " << sf::to_string(rows[i].x) << " | "
            << sf::to_string(rows[i].boundary_class) << " |\n";
    }
    out << "\n" << rows.size() << " rows; " << diff.matched.size() << " matched, "
        << diff.unmatched.size() << " unmatched; " << diff.absent.size()
        << " expected families absent.\n";
    return out.str();
}

int cmd_census(int n, std::optional<std::int64_t> index_bound,
               std::optional<std::int64_t> pseudoindex_bound, std::int64_t max_twist,
               const std::string& format) {
    Timer timer;
    sf::CensusQuery query;
    query.n = n;
    query.twist_cap = max_twist;
    if (index_bound) {
        query.mode = sf::CensusMode::IndexAtLeast;
        query.bound = *index_bound;
    } else {
        query.mode = sf::CensusMode::PseudoindexAtLeast;
        query.bound = *pseudoindex_bound;
    }

    const std::vector<sf::CensusRow> rows = sf::enumerate_census(query);
    const sf::TableDiff diff = sf::diff_against_families(rows, n, query.twist_cap);

    if (format == "markdown") {
        std::cout << census_markdown(query, rows, diff);
        return diff.unmatched.empty() && diff.absent.empty() ? kExitOk : kExitCrossCheck;
    }

    ordered_json inputs;
    inputs["n"] = dec(n);
    if (index_bound) inputs["index"] = dec(*index_bound);
    if (pseudoindex_bound) inputs["pseudoindex"] = dec(*pseudoindex_bound);
    inputs["max_twist"] = dec(max_twist);

    ordered_json jrows = ordered_json::array();
    for (const sf::CensusRow& row : rows) {
        ordered_json j;
        j["variety"] = sf::to_string(row.x);
        j["boundary_class"] = sf::to_string(row.boundary_class);
        j["status"] = status_string(row.decomposition);
        j["report"] = pair_report_json(row.x, row.report);
        j["family"] = row.matched_family ? ordered_json(sf::describe(*row.matched_family))
                                         : ordered_json(nullptr);
        jrows.push_back(j);
    }
    ordered_json results;
    results["rows"] = jrows;
    results["row_count"] = dec(static_cast<std::int64_t>(rows.size()));
    results["unmatched_count"] = dec(static_cast<std::int64_t>(diff.unmatched.size()));
    ordered_json absent = ordered_json::array();
    for (const sf::FamilyMatch& a : diff.absent) absent.push_back(sf::describe(a));
    results["absent_families"] = absent;
    results["out_of_scope"] = diff.out_of_scope;
    emit("census", inputs, results, timer);
    return diff.unmatched.empty() && diff.absent.empty() ? kExitOk : kExitCrossCheck;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants and censuses for split projective bundles"};
    app.require_subcommand(1);

    std::string variety_str, class_str, boundary_str;
    std::string method = "pushforward";
    std::string format = "json";
    int r = 2;
    int n = 4;
    std::int64_t max_twist = 1;
    std::optional<std::int64_t> index_bound, pseudoindex_bound;

    auto* info = app.add_subcommand("info", "lattice data of a variety");
    info->add_option("variety", variety_str)->required();

    auto* h0 = app.add_subcommand("h0", "section count of a class");
    h0->add_option("variety", variety_str)->required();
    h0->add_option("class", class_str)->required();
    h0->add_option("--method", method)
        ->check(CLI::IsMember({"pushforward", "lattice", "both"}));

    auto* members = app.add_subcommand("members", "monomial summary of a linear system");
    members->add_option("variety", variety_str)->required();
    members->add_option("class", class_str)->required();

    auto* check = app.add_subcommand("check", "log Fano verdict for a pair");
    check->add_option("variety", variety_str)->required();
    check->add_option("boundary", boundary_str)->required();

    auto* gallery = app.add_subcommand("gallery", "verify the example families");
    gallery->add_option("--r", r)->required();
    gallery->add_option("--max-twist", max_twist);

    auto* census = app.add_subcommand("census", "bounded exhaustive pair census");
    census->add_option("--n", n)->required();
    auto* opt_index = census->add_option("--index", index_bound);
    auto* opt_pseudo = census->add_option("--pseudoindex", pseudoindex_bound);
    opt_index->excludes(opt_pseudo);
    census->add_option("--max-twist", max_twist);
    census->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(info)) return cmd_info(variety_str);
        if (app.got_subcommand(h0)) return cmd_h0(variety_str, class_str, method);
        if (app.got_subcommand(members)) return cmd_members(variety_str, class_str);
        if (app.got_subcommand(check)) return cmd_check(variety_str, boundary_str);
        if (app.got_subcommand(gallery)) return cmd_gallery(r, max_twist);
        if (app.got_subcommand(census)) {
            if (!index_bound && !pseudoindex_bound) {
                std::cerr << "error: census needs --index or --pseudoindex\n";
                return kExitUsage;
            }
            return cmd_census(n, index_bound, pseudoindex_bound, max_twist, format);
        }
    } catch (const sf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
