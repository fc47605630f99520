#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nullfd/design.hpp"
#include "nullfd/enforce.hpp"
#include "nullfd/io.hpp"
#include "nullfd/realize.hpp"
#include "nullfd/semantics.hpp"

using json = nlohmann::json;
using namespace nullfd;

namespace {

struct Config {
    std::string null_token;
    std::string null_sort = "high";
    std::uint64_t oracle_cap = 1'000'000;
    std::string output = "text";

    CsvOptions csv() const { return CsvOptions{null_token}; }
    bool json_out() const { return output == "json"; }
    NullSort sort() const { return null_sort == "low" ? NullSort::Low : NullSort::High; }
};

std::string attrs_to_string(const AttrSet& s) {
    std::string out;
    for (const auto& a : s) out += (out.empty() ? "" : ",") + a;
    return out;
}

AttrSet parse_attr_list(const std::string& s) {
    AttrSet out;
    std::stringstream ss{s};
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.insert(item.substr(b, e - b + 1));
    }
    return out;
}

void validate_against_schema(const FDSet& fds, const std::optional<AttrSet>& nullable,
                             const Schema& schema) {
    for (const auto& a : fds.attributes()) schema.index_of(a);
    if (nullable)
        for (const auto& a : *nullable) schema.index_of(a);
}

json violation_to_json(const Violation& v) {
    return json{{"fd", v.fd.to_string()},
                {"tuple_a", v.tuple_a},
                {"tuple_b", v.tuple_b},
                {"detail", v.detail}};
}

FD parse_fd_arg(const std::string& s) {
    std::stringstream in{s};
    FdSpec spec = parse_fd_spec(in);
    if (spec.fds.size() != 1) throw std::runtime_error("expected exactly one FD: " + s);
    return spec.fds.fds().front();
}

int cmd_check(const Config& cfg, const std::string& rel_path, const std::string& fd_path,
              const std::string& mode_str) {
    auto mode = mode_from_string(mode_str);
    if (!mode) throw CLI::ValidationError("--mode", "unknown mode " + mode_str);
    Relation r = read_csv_file(rel_path, cfg.csv());
    FdSpec spec = parse_fd_spec_file(fd_path);
    validate_against_schema(spec.fds, spec.nullable, r.schema());

    bool all_ok = true;
    json out = json::array();
    for (const auto& fd : spec.fds.fds()) {
        CheckResult res = check(r, fd, *mode);
        all_ok &= res.ok;
        if (cfg.json_out()) {
            json j{{"fd", fd.to_string()}, {"holds", res.ok}};
            if (res.violation) j["witness"] = violation_to_json(*res.violation);
            out.push_back(j);
        } else {
            std::cout << fd.to_string() << ": " << (res.ok ? "holds" : "violated");
            if (res.violation)
                std::cout << " (tuples " << res.violation->tuple_a << ","
                          << res.violation->tuple_b << ": " << res.violation->detail << ")";
            std::cout << "\n";
        }
    }
    if (cfg.json_out())
        std::cout << json{{"mode", to_string(*mode)}, {"results", out}}.dump() << "\n";
    return all_ok ? 0 : 1;
}

int cmd_worlds(const Config& cfg, const std::string& rel_path, const std::string& fd_path,
               bool forall) {
    Relation r = read_csv_file(rel_path, cfg.csv());
    FdSpec spec = parse_fd_spec_file(fd_path);
    validate_against_schema(spec.fds, spec.nullable, r.schema());

    bool ok;
    std::string message;
    if (forall) {
        ok = world_oracle(r, spec.fds, Quantifier::ForAll, cfg.oracle_cap);
        message = ok ? "holds in every world" : "fails in some world";
    } else {
        JointWeakResult res = joint_weak(r, spec.fds, cfg.oracle_cap);
        ok = res.ok;
        message = ok ? "joint world exists" : "no joint world";
    }
    if (cfg.json_out())
        std::cout << json{{"quantifier", forall ? "forall" : "exists"},
                          {"holds", ok},
                          {"message", message}}
                         .dump()
                  << "\n";
    else
        std::cout << message << "\n";
    return ok ? 0 : 1;
}

int cmd_realize(const Config& cfg, const std::string& rel_path, const std::string& fd_path,
                const std::string& semantics, const std::string& out_path,
                const std::string& plan_path) {
    Relation r = read_csv_file(rel_path, cfg.csv());
    FdSpec spec = parse_fd_spec_file(fd_path);
    validate_against_schema(spec.fds, spec.nullable, r.schema());
    AttrSet nullable = spec.nullable.value_or(r.schema().attr_set());

    std::pair<Relation, RealizationPlan> result =
        semantics == "literal" ? realize_literal(r, spec.fds)
                               : realize_sr_set(r, spec.fds, nullable);

    std::ostringstream csv;
    write_csv(csv, result.first, cfg.csv());
    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f{out_path};
        f << csv.str();
    }
    if (plan_path.empty()) {
        std::cerr << result.second.to_text();
    } else {
        std::ofstream f{plan_path};
        f << result.second.to_text();
    }
    return 0;
}

int cmd_enforce(const Config& cfg, const std::string& rel_path, const std::string& fd_path,
                const std::string& mode) {
    Relation r = read_csv_file(rel_path, cfg.csv());
    FdSpec spec = parse_fd_spec_file(fd_path);
    validate_against_schema(spec.fds, spec.nullable, r.schema());

    FDSet literal_fds, sr_fds;
    if (mode == "literal")
        literal_fds = spec.fds;
    else
        sr_fds = spec.fds;
    IndexedRelation ir = IndexedRelation::build(r, literal_fds, sr_fds, cfg.sort());

    std::string line;
    bool any_reject = false;
    while (std::getline(std::cin, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        WriteOutcome out = ir.try_insert(parse_csv_record(line, cfg.csv()));
        if (out.accepted) {
            std::cout << "ACCEPT\n";
        } else {
            any_reject = true;
            const Violation& v = out.violations.front();
            std::cout << "REJECT " << v.fd.to_string() << " " << v.tuple_a << "\n";
        }
    }
    return any_reject ? 1 : 0;
}

int cmd_decompose(const Config& cfg, const std::string& rel_path, const std::string& fd_path,
                  const std::string& fd_arg) {
    Relation r = read_csv_file(rel_path, cfg.csv());
    FdSpec spec = parse_fd_spec_file(fd_path);
    validate_against_schema(spec.fds, spec.nullable, r.schema());
    FD fd = parse_fd_arg(fd_arg);
    Decomposition d = decompose_step(r, spec.fds, fd);
    LosslessResult lossless = check_lossless(r, d.z, d.w);

    if (cfg.json_out()) {
        std::cout << json{{"fragment_z", attrs_to_string(d.z)},
                          {"fragment_w", attrs_to_string(d.w)},
                          {"lossless", lossless.lossless}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "fragment Z: " << attrs_to_string(d.z) << "\n";
        std::cout << "fragment W: " << attrs_to_string(d.w) << "\n";
        std::cout << "lossless: " << (lossless.lossless ? "yes" : "no") << "\n";
    }
    return lossless.lossless ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"functional dependencies over relations with null markers"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--null-token", cfg.null_token, "CSV cell parsed as a null marker");
    app.add_option("--null-sort", cfg.null_sort, "index sort position of null markers")
        ->check(CLI::IsMember({"high", "low"}));
    app.add_option("--oracle-cap", cfg.oracle_cap, "maximum enumerable worlds")
        ->check(CLI::PositiveNumber);
    app.add_option("--output", cfg.output, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string rel_path, rel2_path, fd_path, mode = "literal", semantics = "literal";
    std::string fd_arg, attrs_arg, out_path, plan_path;
    bool q_exists = false, q_forall = false;

    auto* c_check = app.add_subcommand("check", "check FDs under a semantics mode");
    c_check->add_option("relation", rel_path)->required();
    c_check->add_option("fds", fd_path)->required();
    c_check->add_option("--mode", mode, "classical|literal|sr|strong|weak");

    auto* c_closure = app.add_subcommand("closure", "attribute closure under the FDs");
    c_closure->add_option("fds", fd_path)->required();
    c_closure->add_option("--attrs", attrs_arg, "comma-separated attribute set")->required();

    auto* c_mincover = app.add_subcommand("mincover", "minimal cover of the FD set");
    c_mincover->add_option("fds", fd_path)->required();

    auto* c_onerhs = app.add_subcommand("onerhs", "check the 1RHS condition");
    c_onerhs->add_option("fds", fd_path)->required();

    auto* c_keys = app.add_subcommand("keys", "literal keys of a relation");
    c_keys->add_option("relation", rel_path)->required();

    auto* c_realize = app.add_subcommand("realize", "replace null markers by values");
    c_realize->add_option("relation", rel_path)->required();
    c_realize->add_option("fds", fd_path)->required();
    c_realize->add_option("--semantics", semantics)->check(CLI::IsMember({"literal", "sr"}));
    c_realize->add_option("--out", out_path, "write the realized CSV here");
    c_realize->add_option("--plan", plan_path, "write the realization plan here");

    auto* c_enforce = app.add_subcommand("enforce", "stream inserts from stdin");
    c_enforce->add_option("relation", rel_path)->required();
    c_enforce->add_option("fds", fd_path)->required();
    c_enforce->add_option("--mode", mode)->check(CLI::IsMember({"literal", "sr"}));

    auto* c_decompose = app.add_subcommand("decompose", "one lossless split on a literal FD");
    c_decompose->add_option("relation", rel_path)->required();
    c_decompose->add_option("fds", fd_path)->required();
    c_decompose->add_option("--fd", fd_arg, "the splitting FD, e.g. 'A,B -> C'")->required();

    auto* c_join = app.add_subcommand("join", "literal join of two relations");
    c_join->add_option("left", rel_path)->required();
    c_join->add_option("right", rel2_path)->required();
    c_join->add_option("--on", attrs_arg, "join attributes")->required();

    auto* c_worlds = app.add_subcommand("worlds", "possible-worlds oracle");
    c_worlds->add_option("relation", rel_path)->required();
    c_worlds->add_option("fds", fd_path)->required();
    c_worlds->add_flag("--exists", q_exists, "is there a world satisfying all FDs");
    c_worlds->add_flag("--forall", q_forall, "do all worlds satisfy all FDs");

    // let the global flags appear after the subcommand too
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_check->parsed()) return cmd_check(cfg, rel_path, fd_path, mode);
        if (c_closure->parsed()) {
            FdSpec spec = parse_fd_spec_file(fd_path);
            AttrSet closure = attribute_closure(parse_attr_list(attrs_arg), spec.fds);
            if (cfg.json_out())
                std::cout << json{{"closure", attrs_to_string(closure)}}.dump() << "\n";
            else
                std::cout << attrs_to_string(closure) << "\n";
            return 0;
        }
        if (c_mincover->parsed()) {
            FdSpec spec = parse_fd_spec_file(fd_path);
            FDSet cover = minimal_cover(spec.fds);
            if (cfg.json_out()) {
                json out = json::array();
                for (const auto& fd : cover.fds()) out.push_back(fd.to_string());
                std::cout << json{{"cover", out}}.dump() << "\n";
            } else {
                for (const auto& fd : cover.fds()) std::cout << fd.to_string() << "\n";
            }
            return 0;
        }
        if (c_onerhs->parsed()) {
            FdSpec spec = parse_fd_spec_file(fd_path);
            AttrSet nullable = spec.nullable.value_or(spec.fds.attributes());
            OneRhsResult res = check_1rhs(spec.fds, nullable);
            if (cfg.json_out()) {
                json vs = json::array();
                for (const auto& v : res.violations)
                    vs.push_back({{"attribute", v.attribute}, {"reason", v.reason}});
                std::cout << json{{"ok", res.ok}, {"violations", vs}}.dump() << "\n";
            } else {
                std::cout << (res.ok ? "ok" : "violated") << "\n";
                for (const auto& v : res.violations)
                    std::cout << v.attribute << ": " << v.reason << "\n";
            }
            return res.ok ? 0 : 1;
        }
        if (c_keys->parsed()) {
            Relation r = read_csv_file(rel_path, cfg.csv());
            LiteralKeyReport report = literal_keys(r);
            if (cfg.json_out()) {
                json keys = json::array(), superkeys = json::array();
                for (const auto& k : report.keys) keys.push_back(attrs_to_string(k));
                for (const auto& k : report.superkeys) superkeys.push_back(attrs_to_string(k));
                std::cout << json{{"keys", keys}, {"superkeys", superkeys}}.dump() << "\n";
            } else {
                for (const auto& k : report.keys)
                    std::cout << "key: " << attrs_to_string(k) << "\n";
            }
            return 0;
        }
        if (c_realize->parsed())
            return cmd_realize(cfg, rel_path, fd_path, semantics, out_path, plan_path);
        if (c_enforce->parsed()) return cmd_enforce(cfg, rel_path, fd_path, mode);
        if (c_decompose->parsed()) return cmd_decompose(cfg, rel_path, fd_path, fd_arg);
        if (c_join->parsed()) {
            Relation r1 = read_csv_file(rel_path, cfg.csv());
            Relation r2 = read_csv_file(rel2_path, cfg.csv());
            Relation joined = literal_join(r1, r2, parse_attr_list(attrs_arg));
            write_csv(std::cout, joined, cfg.csv());
            return 0;
        }
        if (c_worlds->parsed()) {
            if (q_exists == q_forall)
                throw std::runtime_error("pass exactly one of --exists/--forall");
            return cmd_worlds(cfg, rel_path, fd_path, q_forall);
        }
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.violation)
            std::cerr << "  witness: tuples " << e.violation->tuple_a << ","
                      << e.violation->tuple_b << " (" << e.violation->detail << ")\n";
        return 1;
    } catch (const InitialViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto& v : e.violations)
            std::cerr << "  " << v.fd.to_string() << ": tuples " << v.tuple_a << ","
                      << v.tuple_b << " (" << v.detail << ")\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
